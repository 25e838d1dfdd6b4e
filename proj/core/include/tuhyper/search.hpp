#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tuhyper/hypergraph.hpp"
#include "tuhyper/witness.hpp"

namespace tuhyper {

struct SearchLimits {
  std::uint64_t max_nodes = 50'000'000;  // edge expansions per call
};

namespace search {

// Bitmask view of a (mixed) hypergraph over vertex positions; at most 64 vertices.
// A vertex in the negative mask of an edge carries sign -1, otherwise +1.
class SignedIncidence {
 public:
  explicit SignedIncidence(const Hypergraph& g);
  explicit SignedIncidence(const MixedHypergraph& d);

  [[nodiscard]] std::size_t num_vertices() const noexcept { return vertex_ids_.size(); }
  [[nodiscard]] std::size_t num_edges() const noexcept { return support_.size(); }
  [[nodiscard]] std::uint64_t support(std::size_t e) const noexcept { return support_[e]; }
  [[nodiscard]] std::uint64_t negative(std::size_t e) const noexcept { return negative_[e]; }
  // Edge indices through position p, ascending by edge id.
  [[nodiscard]] const std::vector<std::uint32_t>& incident(std::size_t p) const noexcept { return incident_[p]; }
  [[nodiscard]] VertexId vertex_id(std::size_t p) const noexcept { return vertex_ids_[p]; }
  [[nodiscard]] EdgeId edge_id(std::size_t e) const noexcept { return edge_ids_[e]; }
  // Edge indices ascending by edge id.
  [[nodiscard]] const std::vector<std::uint32_t>& edges_by_id() const noexcept { return by_id_; }

  // 1 when the restriction of e to {a, b} has equal signs.
  [[nodiscard]] int pair_parity(std::size_t e, unsigned a, unsigned b) const noexcept {
    return ((negative_[e] >> a) & 1U) == ((negative_[e] >> b) & 1U) ? 1 : 0;
  }

 private:
  void finish();

  std::vector<VertexId> vertex_ids_;
  std::vector<EdgeId> edge_ids_;
  std::vector<std::uint64_t> support_;
  std::vector<std::uint64_t> negative_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<std::uint32_t> by_id_;
};

// Cycle as a partial subhypergraph with odd parity; first in search order.
[[nodiscard]] std::optional<CycleData> odd_cycle(const SignedIncidence& s, const SearchLimits& limits);

// Tree house whose three path-plus-house cycles are all even; first in search order.
[[nodiscard]] std::optional<TreeHouseData> odd_tree_house(const SignedIncidence& s, const SearchLimits& limits);

// Every cycle that is a partial subhypergraph, once each, with its parity. The
// visitor returns false to stop.
void for_each_cycle(const SignedIncidence& s, const SearchLimits& limits,
                    const std::function<bool(const CycleData&, int parity)>& visit);

}  // namespace search
}  // namespace tuhyper
