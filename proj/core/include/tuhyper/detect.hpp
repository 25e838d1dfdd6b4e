#pragma once

#include <optional>

#include "tuhyper/hypergraph.hpp"
#include "tuhyper/mixed.hpp"
#include "tuhyper/search.hpp"
#include "tuhyper/witness.hpp"

namespace tuhyper {

// Exhaustive searches over partial subhypergraphs. Found witnesses are verified before
// they are returned; BudgetExceeded is raised instead of a negative answer.
[[nodiscard]] std::optional<Witness> find_odd_cycle(const Hypergraph& g, const SearchLimits& limits = {});
[[nodiscard]] std::optional<Witness> find_odd_tree_house(const Hypergraph& g, const SearchLimits& limits = {});
[[nodiscard]] std::optional<Witness> find_mixed_odd_cycle(const MixedHypergraph& d, const SearchLimits& limits = {});
[[nodiscard]] std::optional<Witness> find_mixed_odd_tree_house(const MixedHypergraph& d, const SearchLimits& limits = {});

struct Decision {
  bool unimodular = true;
  std::optional<Witness> witness;  // present iff not unimodular
};

// Disjoint hypergraphs are unimodular iff they contain no odd cycle and no odd tree house.
// Throws NotDisjoint.
[[nodiscard]] Decision decide_unimodular_disjoint(const Hypergraph& g, const SearchLimits& limits = {});

struct MixedDecision {
  bool unimodular = true;
  std::optional<Witness> witness;          // in the input's coordinates
  std::optional<Witness> reduced_witness;  // in the normalized hypergraph, when found there
  ReductionTranscript transcript;
  bool via_reduction = true;  // false when the native signed search was used
};

// Same characterization with mixed odd cycles and mixed odd tree houses; decided on the
// normalized hypergraph when the normalization exists. Throws NotDisjoint.
[[nodiscard]] MixedDecision decide_unimodular_mixed_disjoint(const MixedHypergraph& d, const SearchLimits& limits = {});

// Maximum number of vertex-disjoint odd cycles of a graph (every edge of size 2), n <= 12.
[[nodiscard]] int compute_ocp(const Hypergraph& g);

}  // namespace tuhyper
