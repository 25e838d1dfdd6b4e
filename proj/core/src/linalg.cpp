#include "tuhyper/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>

#include "tuhyper/error.hpp"

namespace tuhyper {

void check_guard(const IntMatrix& m, const LinalgLimits& limits) {
  if (m.rows() + m.cols() > limits.max_dimension_sum)
    throw GuardExceeded("desk-scale exceeded: " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        " matrix is over the rows+cols limit of " + std::to_string(limits.max_dimension_sum));
}

namespace {

// Bareiss in 64-bit; nullopt on overflow.
std::optional<std::int64_t> bareiss64(std::vector<std::int64_t> a, std::size_t n) {
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * n + j]; };
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        std::int64_t x, y, z;
        if (__builtin_mul_overflow(at(i, j), at(k, k), &x) || __builtin_mul_overflow(at(i, k), at(k, j), &y) ||
            __builtin_sub_overflow(x, y, &z))
          return std::nullopt;
        at(i, j) = z / prev;
      }
    }
    prev = at(k, k);
  }
  return n == 0 ? 1 : sign * at(n - 1, n - 1);
}

BigInt bareiss_big(const std::vector<std::int64_t>& src, std::size_t n) {
  std::vector<BigInt> a(src.begin(), src.end());
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  if (n == 0) return 1;
  return sign * at(n - 1, n - 1);
}

BigInt det_of(const std::vector<std::int64_t>& a, std::size_t n) {
  if (auto d = bareiss64(a, n)) return BigInt(*d);
  return bareiss_big(a, n);
}

BigInt abs_big(BigInt x) { return x < 0 ? BigInt(-x) : x; }

// Lexicographic k-combinations of {0..n-1}.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const auto k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::vector<std::size_t>> all_combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  do out.push_back(c);
  while (next_combination(c, n));
  return out;
}

// Enumerates square submatrices of one order in (rows, cols) lexicographic order,
// skipping those with a zero line, and (for {0, +1, -1} matrices of order >= 2)
// those with a line holding a single nonzero, whose determinant equals a smaller minor's.
class MinorScanner {
 public:
  explicit MinorScanner(const IntMatrix& m) : m_(m), unit_(m.entries_in_unit_range()) {
    row_mask_.assign(m.rows(), 0);
    col_mask_.assign(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(r, c) != 0) {
          row_mask_[r] |= std::uint64_t{1} << c;
          col_mask_[c] |= std::uint64_t{1} << r;
        }
  }

  // Visit minors with the given row set; the visitor returns false to stop. Returns false if stopped.
  template <class Visit>
  bool scan_rows(const std::vector<std::size_t>& rows, Visit&& visit) const {
    const auto k = rows.size();
    const int need = unit_ && k >= 2 ? 2 : 1;
    std::uint64_t rmask = 0;
    for (auto r : rows) rmask |= std::uint64_t{1} << r;
    std::vector<std::size_t> allowed;
    std::uint64_t amask = 0;
    for (std::size_t c = 0; c < m_.cols(); ++c)
      if (std::popcount(col_mask_[c] & rmask) >= need) {
        allowed.push_back(c);
        amask |= std::uint64_t{1} << c;
      }
    if (allowed.size() < k) return true;
    for (auto r : rows)
      if (std::popcount(row_mask_[r] & amask) < need) return true;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    std::vector<std::size_t> cols(k);
    std::vector<std::int64_t> buf(k * k);
    do {
      std::uint64_t cmask = 0;
      for (std::size_t i = 0; i < k; ++i) {
        cols[i] = allowed[pick[i]];
        cmask |= std::uint64_t{1} << cols[i];
      }
      bool ok = true;
      for (auto r : rows)
        if (std::popcount(row_mask_[r] & cmask) < need) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) buf[i * k + j] = m_(rows[i], cols[j]);
      if (!visit(cols, det_of(buf, k))) return false;
    } while (next_combination(pick, allowed.size()));
    return true;
  }

 private:
  const IntMatrix& m_;
  bool unit_;
  std::vector<std::uint64_t> row_mask_;
  std::vector<std::uint64_t> col_mask_;
};

// Runs body(worker, stride) on `workers` threads (inline when 1).
template <class Body>
void run_workers(unsigned workers, Body&& body) {
  workers = std::max(1U, workers);
  if (workers == 1) {
    body(0U, 1U);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&, w] { body(w, workers); });
}

std::size_t top_order(const IntMatrix& m, const LinalgLimits& limits) {
  auto k = std::min(m.rows(), m.cols());
  if (limits.max_order) k = std::min(k, *limits.max_order);
  return k;
}

}  // namespace

BigInt det_exact(const IntMatrix& m) {
  if (!m.is_square())
    throw InvalidInput("determinant of a non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                       " matrix");
  std::vector<std::int64_t> a;
  a.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a.push_back(m(r, c));
  return det_of(a, m.rows());
}

DeltaResult max_abs_subdet(const IntMatrix& m, const LinalgLimits& limits) {
  check_guard(m, limits);
  DeltaResult best{0, {}};
  MinorScanner scan(m);
  for (std::size_t k = 1; k <= top_order(m, limits); ++k) {
    const auto row_sets = all_combinations(m.rows(), k);
    struct Local {
      BigInt delta = 0;
      std::size_t row_index = std::numeric_limits<std::size_t>::max();
      std::vector<std::size_t> cols;
    };
    std::vector<Local> local(std::max(1U, limits.workers));
    run_workers(limits.workers, [&](unsigned w, unsigned stride) {
      auto& mine = local[w];
      for (std::size_t i = w; i < row_sets.size(); i += stride)
        scan.scan_rows(row_sets[i], [&](const std::vector<std::size_t>& cols, const BigInt& d) {
          auto a = abs_big(d);
          if (a > mine.delta) {
            mine = Local{std::move(a), i, cols};
          }
          return true;
        });
    });
    const Local* pick = nullptr;
    for (const auto& l : local)
      if (l.delta > 0 && (!pick || l.delta > pick->delta || (l.delta == pick->delta && l.row_index < pick->row_index)))
        pick = &l;
    if (pick && pick->delta > best.delta) best = DeltaResult{pick->delta, Minor{row_sets[pick->row_index], pick->cols}};
  }
  return best;
}

std::optional<Minor> first_non_unimodular_minor(const IntMatrix& m, const LinalgLimits& limits) {
  check_guard(m, limits);
  MinorScanner scan(m);
  for (std::size_t k = 1; k <= top_order(m, limits); ++k) {
    const auto row_sets = all_combinations(m.rows(), k);
    std::atomic<std::size_t> first{std::numeric_limits<std::size_t>::max()};
    std::vector<std::optional<Minor>> local(std::max(1U, limits.workers));
    run_workers(limits.workers, [&](unsigned w, unsigned stride) {
      for (std::size_t i = w; i < row_sets.size() && i < first.load(); i += stride) {
        const bool done = !scan.scan_rows(row_sets[i], [&](const std::vector<std::size_t>& cols, const BigInt& d) {
          if (abs_big(d) <= 1) return true;
          local[w] = Minor{row_sets[i], cols};
          return false;
        });
        if (done) {
          auto cur = first.load();
          while (i < cur && !first.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    });
    const Minor* pick = nullptr;
    for (const auto& l : local)
      if (l && (!pick || l->rows < pick->rows)) pick = &*l;
    if (pick) return *pick;
  }
  return std::nullopt;
}

bool is_tu_bruteforce(const IntMatrix& m, const LinalgLimits& limits) {
  return !first_non_unimodular_minor(m, limits).has_value();
}

bool is_almost_tu(const IntMatrix& m, const LinalgLimits& limits) {
  check_guard(m, limits);
  if (!m.is_square() || m.rows() == 0) return false;
  auto proper = limits;
  proper.max_order = m.rows() - 1;
  if (first_non_unimodular_minor(m, proper)) return false;
  return abs_big(det_exact(m)) >= 2;
}

namespace {

struct ColumnCut {
  std::size_t col;
  std::uint64_t rows;  // intersection with U
  int size;
  std::int64_t sum;
};

// Eulerian F (as column-index bitmasks) over the given columns: the GF(2) kernel of
// F -> symmetric difference of row sets. Calls visit for every nonzero element.
template <class Visit>
void for_each_eulerian(const std::vector<ColumnCut>& cuts, Visit&& visit) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pivots;  // (reduced row set, combination)
  std::vector<std::uint64_t> kernel;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    std::uint64_t v = cuts[i].rows;
    std::uint64_t comb = std::uint64_t{1} << i;
    for (const auto& [pv, pc] : pivots)
      if (v & (std::uint64_t{1} << std::countr_zero(pv))) {
        v ^= pv;
        comb ^= pc;
      }
    if (v == 0) {
      kernel.push_back(comb);
    } else {
      // Keep pivots fully reduced on their leading bit.
      const auto lead = std::uint64_t{1} << std::countr_zero(v);
      for (auto& [pv, pc] : pivots)
        if (pv & lead) {
          pv ^= v;
          pc ^= comb;
        }
      pivots.emplace_back(v, comb);
    }
  }
  const auto d = kernel.size();
  std::uint64_t f = 0;
  for (std::uint64_t g = 1; g < (std::uint64_t{1} << d); ++g) {
    f ^= kernel[static_cast<std::size_t>(std::countr_zero(g))];
    visit(f);
  }
}

template <class Violates>
CamionResult camion_scan(const IntMatrix& m, const std::vector<VertexId>& vertices, const std::vector<EdgeId>& edges,
                         Violates&& violates) {
  const auto n = m.rows();
  CamionResult out;
  for (std::uint64_t u = 1; u < (std::uint64_t{1} << n); ++u) {
    std::vector<ColumnCut> cuts;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      ColumnCut cut{c, 0, 0, 0};
      for (std::size_t r = 0; r < n; ++r)
        if ((u >> r) & 1U && m(r, c) != 0) {
          cut.rows |= std::uint64_t{1} << r;
          ++cut.size;
          cut.sum += m(r, c);
        }
      if (cut.size > 0 && cut.size % 2 == 0) cuts.push_back(cut);
    }
    std::optional<std::uint64_t> worst;
    for_each_eulerian(cuts, [&](std::uint64_t f) {
      std::size_t support = 0;
      std::int64_t sum = 0;
      std::uint64_t cols = 0;
      for (auto b = f; b != 0; b &= b - 1) {
        const auto& cut = cuts[static_cast<std::size_t>(std::countr_zero(b))];
        support += static_cast<std::size_t>(cut.size);
        sum += cut.sum;
        cols |= std::uint64_t{1} << cut.col;
      }
      if (violates(static_cast<std::size_t>(std::popcount(u)), static_cast<std::size_t>(std::popcount(f)), support,
                   sum) &&
          (!worst || cols < *worst)) {
        worst = cols;
        out.support = support;
        out.entry_sum = sum;
      }
    });
    if (worst) {
      out.unimodular = false;
      for (std::size_t r = 0; r < n; ++r)
        if ((u >> r) & 1U) out.witness.vertices.push_back(vertices[r]);
      for (std::size_t c = 0; c < m.cols(); ++c)
        if ((*worst >> c) & 1U) out.witness.edges.push_back(edges[c]);
      return out;
    }
  }
  return out;
}

}  // namespace

CamionResult camion_unimodular(const Hypergraph& g, const LinalgLimits& limits) {
  const auto m = incidence_matrix(g);
  check_guard(m, limits);
  std::vector<EdgeId> ids;
  for (const auto& e : g.edges()) ids.push_back(e.id);
  return camion_scan(m, g.vertices(), ids,
                     [](std::size_t, std::size_t, std::size_t support, std::int64_t) { return support % 4 == 2; });
}

CamionResult camion_unimodular_mixed(const MixedHypergraph& d, const LinalgLimits& limits) {
  const auto m = incidence_matrix(d);
  check_guard(m, limits);
  std::vector<EdgeId> ids;
  for (const auto& a : d.arcs()) ids.push_back(a.id);
  return camion_scan(m, d.vertices(), ids, [](std::size_t nu, std::size_t nf, std::size_t, std::int64_t sum) {
    return nu == nf && ((sum % 4) + 4) % 4 == 2;
  });
}

}  // namespace tuhyper
