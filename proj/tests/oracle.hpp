#pragma once

// Slow reference implementations used to cross-check the library in tests.

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "tuhyper/hypergraph.hpp"
#include "tuhyper/matrix.hpp"

namespace oracle {

using Rows = std::vector<std::vector<std::int64_t>>;

// Cofactor expansion along the first row.
inline std::int64_t det(const Rows& a) {
  const auto n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    Rows minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    total += (c % 2 == 0 ? 1 : -1) * a[0][c] * det(minor);
  }
  return total;
}

inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) != k) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if ((m >> i) & 1U) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

// Largest |det| over all square submatrices.
inline std::int64_t delta(const tuhyper::IntMatrix& m) {
  std::int64_t best = 0;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k)
    for (const auto& rs : subsets_of_size(m.rows(), k))
      for (const auto& cs : subsets_of_size(m.cols(), k)) {
        Rows sub;
        for (auto r : rs) {
          std::vector<std::int64_t> row;
          for (auto c : cs) row.push_back(m(r, c));
          sub.push_back(std::move(row));
        }
        best = std::max(best, std::abs(det(sub)));
      }
  return best;
}

inline bool is_tu(const tuhyper::IntMatrix& m) { return delta(m) <= 1; }

// Some G[U, F] with |U| = |F| odd whose restricted edges form a single cycle.
inline bool has_odd_cycle(const tuhyper::Hypergraph& g) {
  const auto n = g.num_vertices();
  const auto m = g.num_edges();
  std::vector<std::uint32_t> col(m, 0);
  for (std::size_t c = 0; c < m; ++c)
    for (auto v : g.edges()[c].vertices) col[c] |= 1U << g.vertex_position(v);
  for (std::uint32_t u = 1; u < (1U << n); ++u) {
    const auto k = static_cast<std::size_t>(std::popcount(u));
    if (k % 2 == 0 || k < 3) continue;
    std::vector<std::uint32_t> pairs;
    for (std::size_t c = 0; c < m; ++c)
      if (std::popcount(col[c] & u) == 2) pairs.push_back(col[c] & u);
    if (pairs.size() < k) continue;
    for (const auto& pick : subsets_of_size(pairs.size(), k)) {
      std::vector<int> deg(n, 0);
      for (auto i : pick)
        for (std::size_t v = 0; v < n; ++v)
          if ((pairs[i] >> v) & 1U) ++deg[v];
      bool two = true;
      for (std::size_t v = 0; v < n; ++v)
        if (((u >> v) & 1U) && deg[v] != 2) two = false;
      if (!two) continue;
      // Connected: grow from the lowest vertex.
      std::uint32_t seen = u & (~u + 1);
      for (bool grew = true; grew;) {
        grew = false;
        for (auto i : pick)
          if ((pairs[i] & seen) && (pairs[i] & ~seen)) {
            seen |= pairs[i];
            grew = true;
          }
      }
      if (seen == u) return true;
    }
  }
  return false;
}

// Some Eulerian G[U, F] with support 2 mod 4.
inline bool camion_violated(const tuhyper::Hypergraph& g) {
  const auto n = g.num_vertices();
  const auto m = g.num_edges();
  std::vector<std::uint32_t> col(m, 0);
  for (std::size_t c = 0; c < m; ++c)
    for (auto v : g.edges()[c].vertices) col[c] |= 1U << g.vertex_position(v);
  for (std::uint32_t u = 1; u < (1U << n); ++u)
    for (std::uint32_t f = 1; f < (1U << m); ++f) {
      std::uint32_t parity = 0;
      int support = 0;
      bool ok = true;
      for (std::size_t c = 0; c < m && ok; ++c) {
        if (!((f >> c) & 1U)) continue;
        const auto x = col[c] & u;
        if (x == 0 || std::popcount(x) % 2) ok = false;
        parity ^= x;
        support += std::popcount(x);
      }
      if (ok && parity == 0 && support % 4 == 2) return true;
    }
  return false;
}

}  // namespace oracle
