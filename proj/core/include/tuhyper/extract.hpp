#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tuhyper/hypergraph.hpp"
#include "tuhyper/io.hpp"
#include "tuhyper/linalg.hpp"
#include "tuhyper/quasi.hpp"
#include "tuhyper/search.hpp"
#include "tuhyper/witness.hpp"

namespace tuhyper {

// Which square Eulerian core each level starts from. Smallest cores are always a witness
// already; largest cores run the reduction and lifting machinery on bigger structures.
enum class CoreOrder { Smallest, Largest };

struct ExtractLimits {
  SearchLimits search;
  LinalgLimits linalg;
  CoreOrder core_order = CoreOrder::Smallest;
};

// Eulerian partial subhypergraph with |V| = |E|, support 2 mod 4 and no isolated
// vertices. Vertex and edge ids are those of the input.
struct EulerianCore {
  std::shared_ptr<const Hypergraph> graph;

  [[nodiscard]] std::size_t support() const;
};

// Even cycle C = G[U, F] with the distinguished edge g. The cycle lists a path from one
// vertex of g to the other, then g closes it: cycle.edges.back() == g_star.
struct NiceCycle {
  CycleData cycle;
  EdgeId g_star{};
  bool crossable = false;  // how the path was chosen in the auxiliary graph

  [[nodiscard]] SubSelection selection() const;
};

// H with Phi the identity on edge ids, embedded into the core it was reduced from.
struct ReducedPair {
  std::shared_ptr<const Hypergraph> core;
  NiceCycle cycle;
  QuasiEmbedding embedding;  // sub() is H
  bool conflict_free = false;

  [[nodiscard]] const Hypergraph& reduced() const noexcept { return embedding.sub(); }
};

// Square Eulerian partial subhypergraph with support 2 mod 4 and no isolated vertex,
// smallest or largest by |V|. Throws PreconditionViolated when there is none (the input
// is unimodular).
[[nodiscard]] EulerianCore find_eulerian_core(const Hypergraph& g, const LinalgLimits& limits = {},
                                              CoreOrder order = CoreOrder::Smallest);

struct ForestOutcome {
  EulerianCore core;               // the size-2 edges form a forest unless a witness was found
  std::optional<Witness> witness;  // odd cycle of size-2 edges
  std::size_t cycles_removed = 0;
};

// Removes even cycles of size-2 edges until they form a forest; each removal yields a
// partial subhypergraph, from which a fresh core is taken.
[[nodiscard]] ForestOutcome enforce_forest(const EulerianCore& core, const LinalgLimits& limits = {},
                                           CoreOrder order = CoreOrder::Smallest);

// Requires the forest property. Throws InternalConsistencyError if a checked step fails.
[[nodiscard]] NiceCycle almost_nice_cycle(const EulerianCore& core);

// Deletes the support of the cycle. Checks Eulerian, disjoint, support drop and that g*
// is the only possible conflict.
[[nodiscard]] ReducedPair reduce_by_cycle(const EulerianCore& core, const NiceCycle& nc);

struct LiftReport {
  Witness witness;                 // odd tree house in the core
  std::vector<std::string> steps;  // cases and crossovers applied, in order
};

// t is an odd tree house in the reduced hypergraph.
[[nodiscard]] LiftReport lift_tree_house(const ReducedPair& rp, const Witness& t, const SearchLimits& limits = {});
// k is an odd cycle in the reduced hypergraph; the lifted cycle is chosen afresh.
[[nodiscard]] LiftReport lift_odd_cycle(const ReducedPair& rp, const Witness& k, const SearchLimits& limits = {});

struct Extraction {
  Witness witness;
  Json trace;
};

// Runs the induction on the support size iteratively. Throws NotDisjoint,
// PreconditionViolated for unimodular input, and InternalConsistencyError.
[[nodiscard]] Extraction extract_with_trace(const Hypergraph& g, const ExtractLimits& limits = {});
[[nodiscard]] Witness extract_witness(const Hypergraph& g, const ExtractLimits& limits = {});

}  // namespace tuhyper
