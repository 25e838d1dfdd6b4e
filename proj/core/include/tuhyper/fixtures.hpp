#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tuhyper/hypergraph.hpp"
#include "tuhyper/io.hpp"
#include "tuhyper/quasi.hpp"

// Small named instances used by tests, the self-test, and the CLI.
namespace tuhyper::fixtures {

// Odd tree house: root r, leaves l1..l3, three single-edge paths and the house {r, l1, l2, l3}.
[[nodiscard]] Hypergraph fig1();
// Non-disjoint hypergraph (edges e and f share three vertices) with an almost TU incidence matrix.
[[nodiscard]] Hypergraph fig2();
// 5-cycle obtained by removing u0 from e'; e' is a conflict.
[[nodiscard]] QuasiEmbedding fig3_left();
// 6-cycle obtained by splitting e'' into {v2, v3} and {v0, v5}.
[[nodiscard]] QuasiEmbedding fig3_right();
// Mixed 4-cycle with three directed arcs.
[[nodiscard]] MixedHypergraph fig4_left();
// fig4_left after splitting its directed arcs: a 7-cycle.
[[nodiscard]] Hypergraph fig4_right();
// Mixed odd tree house rooted at r.
[[nodiscard]] MixedHypergraph fig5();
[[nodiscard]] Hypergraph c3();
[[nodiscard]] Hypergraph c4();
// Directed 4-cycle: arc i leaves v_i and enters v_{i+1}.
[[nodiscard]] MixedHypergraph dir4();

[[nodiscard]] std::vector<std::string> names();
// Throws InvalidInput for an unknown name. Quasi-embedding fixtures return their sub.
[[nodiscard]] Instance by_name(const std::string& name);

}  // namespace tuhyper::fixtures
