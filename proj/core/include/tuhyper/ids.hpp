#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace tuhyper {

enum class VertexId : std::uint32_t {};
enum class EdgeId : std::uint32_t {};
using ArcId = EdgeId;

[[nodiscard]] constexpr std::uint32_t raw(VertexId v) noexcept { return static_cast<std::uint32_t>(v); }
[[nodiscard]] constexpr std::uint32_t raw(EdgeId e) noexcept { return static_cast<std::uint32_t>(e); }
[[nodiscard]] constexpr VertexId vid(std::uint32_t i) noexcept { return static_cast<VertexId>(i); }
[[nodiscard]] constexpr EdgeId eid(std::uint32_t i) noexcept { return static_cast<EdgeId>(i); }

}  // namespace tuhyper
