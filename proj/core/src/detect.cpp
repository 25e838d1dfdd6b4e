#include "tuhyper/detect.hpp"

#include <bit>
#include <vector>

#include "tuhyper/error.hpp"

namespace tuhyper {

namespace {

template <class Host>
Witness checked(const Host& host, Witness w, const char* step) {
  if (auto why = witness_defect(host, w)) throw InternalConsistencyError(step, *why);
  return w;
}

template <class Host>
std::optional<Witness> cycle_of(const Host& host, WitnessKind kind, const SearchLimits& limits) {
  auto c = search::odd_cycle(search::SignedIncidence(host), limits);
  if (!c) return std::nullopt;
  return checked(host, Witness{kind, std::move(*c)}, "odd cycle search");
}

template <class Host>
std::optional<Witness> house_of(const Host& host, WitnessKind kind, const SearchLimits& limits) {
  auto t = search::odd_tree_house(search::SignedIncidence(host), limits);
  if (!t) return std::nullopt;
  return checked(host, Witness{kind, std::move(*t)}, "odd tree house search");
}

}  // namespace

std::optional<Witness> find_odd_cycle(const Hypergraph& g, const SearchLimits& limits) {
  return cycle_of(g, WitnessKind::OddCycle, limits);
}

std::optional<Witness> find_odd_tree_house(const Hypergraph& g, const SearchLimits& limits) {
  return house_of(g, WitnessKind::OddTreeHouse, limits);
}

std::optional<Witness> find_mixed_odd_cycle(const MixedHypergraph& d, const SearchLimits& limits) {
  return cycle_of(d, WitnessKind::MixedOddCycle, limits);
}

std::optional<Witness> find_mixed_odd_tree_house(const MixedHypergraph& d, const SearchLimits& limits) {
  return house_of(d, WitnessKind::MixedOddTreeHouse, limits);
}

Decision decide_unimodular_disjoint(const Hypergraph& g, const SearchLimits& limits) {
  require_disjoint(g);
  if (auto w = find_odd_cycle(g, limits)) return {false, std::move(w)};
  if (auto w = find_odd_tree_house(g, limits)) return {false, std::move(w)};
  return {};
}

MixedDecision decide_unimodular_mixed_disjoint(const MixedHypergraph& d, const SearchLimits& limits) {
  MixedDecision out;
  auto norm = normalize_to_hypergraph(d);
  if (!norm.complete) {
    out.via_reduction = false;
    out.witness = find_mixed_odd_cycle(d, limits);
    if (!out.witness) out.witness = find_mixed_odd_tree_house(d, limits);
    out.unimodular = !out.witness;
    return out;
  }
  out.transcript = std::move(norm.transcript);
  auto reduced = decide_unimodular_disjoint(norm.hypergraph, limits);
  if (reduced.unimodular) return out;
  out.unimodular = false;
  out.witness = checked(d, map_witness_back(*reduced.witness, out.transcript), "witness map-back");
  out.reduced_witness = std::move(reduced.witness);
  return out;
}

int compute_ocp(const Hypergraph& g) {
  if (!is_graph(g)) throw PreconditionViolated("odd cycle packing needs a graph");
  const auto n = g.num_vertices();
  if (n > 12) throw GuardExceeded("odd cycle packing supports at most 12 vertices, got " + std::to_string(n));
  const std::uint32_t full = (1U << n) - 1;
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    const auto a = g.vertex_position(e.vertices[0]);
    const auto b = g.vertex_position(e.vertices[1]);
    adj[a] |= 1U << b;
    adj[b] |= 1U << a;
  }
  // A vertex set holds an odd cycle iff its induced subgraph is not bipartite.
  std::vector<char> odd(full + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::vector<int> color(n, -1);
    bool bip = true;
    for (unsigned start = 0; start < n && bip; ++start) {
      if (!((s >> start) & 1U) || color[start] >= 0) continue;
      color[start] = 0;
      std::vector<unsigned> stack{start};
      while (!stack.empty() && bip) {
        const auto x = stack.back();
        stack.pop_back();
        for (std::uint32_t nb = adj[x] & s; nb; nb &= nb - 1) {
          const auto y = static_cast<unsigned>(std::countr_zero(nb));
          if (color[y] < 0) {
            color[y] = color[x] ^ 1;
            stack.push_back(y);
          } else if (color[y] == color[x]) {
            bip = false;
          }
        }
      }
    }
    odd[s] = !bip;
  }
  std::vector<int> best(full + 1, 0);
  for (std::uint32_t m = 1; m <= full; ++m) {
    const auto low = m & (~m + 1);
    int b = best[m & ~low];
    const auto rest = m & ~low;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const auto s = sub | low;
      if (odd[s]) b = std::max(b, 1 + best[m & ~s]);
      if (sub == 0) break;
    }
    best[m] = b;
  }
  return best[full];
}

}  // namespace tuhyper
