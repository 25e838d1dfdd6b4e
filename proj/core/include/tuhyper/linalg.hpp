#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tuhyper/hypergraph.hpp"
#include "tuhyper/matrix.hpp"

namespace tuhyper {

using BigInt = boost::multiprecision::cpp_int;

struct LinalgLimits {
  std::size_t max_dimension_sum = 22;    // rows + cols accepted by exhaustive routines
  std::optional<std::size_t> max_order;  // largest submatrix order examined
  unsigned workers = 1;
};

// Throws GuardExceeded when rows + cols is over the limit.
void check_guard(const IntMatrix& m, const LinalgLimits& limits);

// Fraction-free elimination; 64-bit with overflow checks, arbitrary precision otherwise.
[[nodiscard]] BigInt det_exact(const IntMatrix& m);

struct Minor {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  friend bool operator==(const Minor&, const Minor&) = default;
};

struct DeltaResult {
  BigInt delta;
  Minor witness;  // first square submatrix attaining delta (order, then rows, then columns)
};

[[nodiscard]] DeltaResult max_abs_subdet(const IntMatrix& m, const LinalgLimits& limits = {});

// First square submatrix whose determinant lies outside {0, +1, -1}.
[[nodiscard]] std::optional<Minor> first_non_unimodular_minor(const IntMatrix& m, const LinalgLimits& limits = {});
[[nodiscard]] bool is_tu_bruteforce(const IntMatrix& m, const LinalgLimits& limits = {});

// Not TU, yet every proper submatrix is TU. Only square matrices qualify.
[[nodiscard]] bool is_almost_tu(const IntMatrix& m, const LinalgLimits& limits = {});

struct CamionResult {
  bool unimodular = true;
  SubSelection witness;      // Eulerian partial subhypergraph violating the criterion
  std::size_t support = 0;   // nonzeros of its incidence matrix
  std::int64_t entry_sum = 0;
};

// Every Eulerian partial subhypergraph has support divisible by 4.
[[nodiscard]] CamionResult camion_unimodular(const Hypergraph& g, const LinalgLimits& limits = {});
// Every Eulerian partial subhypergraph with |V| = |A| has entry sum divisible by 4.
[[nodiscard]] CamionResult camion_unimodular_mixed(const MixedHypergraph& d, const LinalgLimits& limits = {});

}  // namespace tuhyper
