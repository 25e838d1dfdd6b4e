#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "tuhyper/hypergraph.hpp"
#include "tuhyper/io.hpp"
#include "tuhyper/linalg.hpp"
#include "tuhyper/quasi.hpp"
#include "tuhyper/witness.hpp"

namespace tuhyper {

// 0 for one head and one tail, 1 for two heads or two tails. Support size must be 2.
[[nodiscard]] int arc_parity(const Arc& a);

// d must be a mixed path or cycle with every arc of support size 2.
[[nodiscard]] Parity path_or_cycle_parity(const MixedHypergraph& d);

struct NegateRow {
  VertexId vertex;
  friend bool operator==(const NegateRow&, const NegateRow&) = default;
};
struct NegateColumn {
  ArcId arc;
  friend bool operator==(const NegateColumn&, const NegateColumn&) = default;
};
// Arc ({head}, {tail}) replaced in place by `first` then `second`, both unsigned and
// sharing the new vertex w; `first` holds whichever endpoint comes earlier in vertex order.
struct SplitArc {
  ArcId arc;
  VertexId head;
  VertexId tail;
  VertexId w;
  ArcId first;
  ArcId second;
  friend bool operator==(const SplitArc&, const SplitArc&) = default;
};
using ReductionStep = std::variant<NegateRow, NegateColumn, SplitArc>;

struct ReductionTranscript {
  std::vector<ReductionStep> steps;
  friend bool operator==(const ReductionTranscript&, const ReductionTranscript&) = default;
};

[[nodiscard]] MixedHypergraph negate_row(const MixedHypergraph& d, VertexId v);
[[nodiscard]] MixedHypergraph negate_column(const MixedHypergraph& d, ArcId a);
// Requires |S(a)| = |T(a)| = 1. The new vertex is named "w#<arc id>".
[[nodiscard]] std::pair<MixedHypergraph, SplitArc> split_arc(const MixedHypergraph& d, ArcId a);

[[nodiscard]] MixedHypergraph replay(const MixedHypergraph& d, const ReductionTranscript& t);
// Undoes a transcript applied to the original, recovering it from the reduced form.
[[nodiscard]] MixedHypergraph undo(const MixedHypergraph& reduced, const ReductionTranscript& t);

struct Normalization {
  bool complete = false;        // false when size-3 arcs admit no consistent row signing
  MixedHypergraph reduced;      // all tails empty when complete
  Hypergraph hypergraph;        // the reduced form as a hypergraph (ids kept)
  ReductionTranscript transcript;
};

// Row signs so every arc of size >= 3 has one sign, column signs for tail-only arcs,
// then splits of every arc with one head and one tail. Throws NotDisjoint.
[[nodiscard]] Normalization normalize_to_hypergraph(const MixedHypergraph& d);

// Maps a witness found in the reduced hypergraph back into the original mixed host:
// split pairs collapse to the original arc, and the kind becomes the mixed kind.
[[nodiscard]] Witness map_witness_back(const Witness& reduced_witness, const ReductionTranscript& t);

// u with M(c) u = 0, indexed by arc position; c must be a mixed even cycle.
[[nodiscard]] std::vector<std::int64_t> even_cycle_nullvector(const MixedHypergraph& c);

// Structural recognizers over the whole mixed hypergraph. Returned witnesses are verified.
[[nodiscard]] std::optional<CycleData> as_mixed_cycle(const MixedHypergraph& d);  // any parity
[[nodiscard]] std::optional<Witness> as_mixed_odd_tree_house(const MixedHypergraph& d);

enum class AlmostTuClass { MixedOddCycle, MixedOddTreeHouse, NotAlmostTU };
[[nodiscard]] std::string to_string(AlmostTuClass c);

struct Classification {
  AlmostTuClass kind = AlmostTuClass::NotAlmostTU;
  std::optional<Witness> witness;
};

// Throws NotDisjoint.
[[nodiscard]] Classification classify_almost_tu_disjoint(const MixedHypergraph& d);

// Right: product = A R. Left: R is built for the transpose and product = R A.
enum class Side { Right, Left };

struct RConstruction {
  IntMatrix r;
  IntMatrix product;
  Side side = Side::Right;
  AlmostTuClass input_class = AlmostTuClass::NotAlmostTU;
};

// TU matrix R turning a mixed odd tree house into an unbalanced hole; the identity for a
// mixed odd cycle. Throws PreconditionViolated for any other input.
[[nodiscard]] RConstruction build_r_matrix(const IntMatrix& a, Side side = Side::Right);

// Incidence matrix of a mixed odd cycle, with |det| = 2 checked exactly.
[[nodiscard]] bool is_unbalanced_hole(const IntMatrix& m);

[[nodiscard]] Json to_json(const ReductionTranscript& t, const Symbols& sym);

}  // namespace tuhyper
