#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tuhyper/hypergraph.hpp"
#include "tuhyper/io.hpp"

namespace tuhyper {

enum class WitnessKind { OddCycle, OddTreeHouse, MixedOddCycle, MixedOddTreeHouse };

[[nodiscard]] std::string to_string(WitnessKind k);
[[nodiscard]] WitnessKind witness_kind_from_string(const std::string& s);

// v_0 e_0 v_1 e_1 ... v_{k-1} e_{k-1} back to v_0; edge i joins v_i and v_{i+1 mod k}.
struct CycleData {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  [[nodiscard]] std::size_t length() const noexcept { return edges.size(); }
  friend bool operator==(const CycleData&, const CycleData&) = default;
};

// vertices.front() is the root, vertices.back() the leaf; edge i joins vertices i and i+1.
struct PathData {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  [[nodiscard]] std::size_t length() const noexcept { return edges.size(); }
  friend bool operator==(const PathData&, const PathData&) = default;
};

struct TreeHouseData {
  VertexId root{};
  std::array<VertexId, 3> leaves{};
  EdgeId house{};
  std::array<PathData, 3> paths;

  friend bool operator==(const TreeHouseData&, const TreeHouseData&) = default;
};

struct Witness {
  WitnessKind kind = WitnessKind::OddCycle;
  std::variant<CycleData, TreeHouseData> data;

  [[nodiscard]] bool is_cycle() const noexcept { return std::holds_alternative<CycleData>(data); }
  [[nodiscard]] const CycleData& cycle() const { return std::get<CycleData>(data); }
  [[nodiscard]] const TreeHouseData& tree_house() const { return std::get<TreeHouseData>(data); }

  // U and F of the witness as a partial subhypergraph, both sorted by id.
  [[nodiscard]] SubSelection selection() const;
  [[nodiscard]] std::size_t num_edges() const;

  friend bool operator==(const Witness&, const Witness&) = default;
};

[[nodiscard]] Witness make_cycle_witness(WitnessKind kind, std::vector<VertexId> vertices, std::vector<EdgeId> edges);

// Independent certificate checks. The reason overloads return the first failed
// condition, or nullopt when the witness is valid in the host.
[[nodiscard]] std::optional<std::string> witness_defect(const Hypergraph& g, const Witness& w);
[[nodiscard]] std::optional<std::string> witness_defect(const MixedHypergraph& d, const Witness& w);
[[nodiscard]] bool verify_witness(const Hypergraph& g, const Witness& w);
[[nodiscard]] bool verify_witness(const MixedHypergraph& d, const Witness& w);

// Edge ids as integers, vertices as names.
[[nodiscard]] Json to_json(const Witness& w, const Symbols& sym);
[[nodiscard]] Witness witness_from_json(const Json& j, const Symbols& sym);

}  // namespace tuhyper
