#include "tuhyper/mixed.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tuhyper/error.hpp"

namespace tuhyper {

namespace {

std::vector<VertexId> sorted(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  return vs;
}

void remove_from(std::vector<VertexId>& vs, VertexId v) { vs.erase(std::remove(vs.begin(), vs.end(), v), vs.end()); }

bool is_connected(const MixedHypergraph& d) {
  if (d.num_vertices() == 0) return true;
  std::vector<std::size_t> parent(d.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : d.arcs()) {
    const auto sup = a.support();
    for (std::size_t i = 1; i < sup.size(); ++i)
      parent[find(d.vertex_position(sup[i]))] = find(d.vertex_position(sup[0]));
  }
  const auto root = find(0);
  for (std::size_t i = 1; i < d.num_vertices(); ++i)
    if (find(i) != root) return false;
  return true;
}

std::vector<std::size_t> degrees(const MixedHypergraph& d) {
  std::vector<std::size_t> deg(d.num_vertices(), 0);
  for (const auto& a : d.arcs())
    for (auto v : a.support()) ++deg[d.vertex_position(v)];
  return deg;
}

// Arcs of d through v, in arc order.
std::vector<ArcId> incident(const MixedHypergraph& d, VertexId v) {
  std::vector<ArcId> out;
  for (const auto& a : d.arcs())
    if (a.sign(v) != 0) out.push_back(a.id);
  return out;
}

VertexId other_end(const Arc& a, VertexId v) {
  const auto sup = a.support();
  return sup[0] == v ? sup[1] : sup[0];
}

// M(C)u = 0 along the cycle, u on edges[0] fixed to 1. `sign(v, a)` reads the matrix entry.
template <class Sign>
std::vector<std::int64_t> cycle_nullvector(const CycleData& c, Sign sign) {
  const auto k = c.edges.size();
  std::vector<std::int64_t> u(k);
  u[0] = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const auto v = c.vertices[i + 1];
    u[i + 1] = -sign(v, c.edges[i]) * u[i] * sign(v, c.edges[i + 1]);
  }
  if (sign(c.vertices[0], c.edges[0]) * u[0] + sign(c.vertices[0], c.edges[k - 1]) * u[k - 1] != 0)
    throw PreconditionViolated("the cycle is odd; no null vector with entries in {1, -1}");
  return u;
}

}  // namespace

int arc_parity(const Arc& a) {
  if (a.size() != 2) throw PreconditionViolated("arc parity needs support size 2, got " + std::to_string(a.size()));
  return a.plus.size() == 1 ? 0 : 1;
}

Parity path_or_cycle_parity(const MixedHypergraph& d) {
  if (d.num_arcs() == 0) throw PreconditionViolated("empty path or cycle");
  for (const auto& a : d.arcs())
    if (a.size() != 2) throw PreconditionViolated("arc " + d.arc_name(a.id) + " does not have support size 2");
  const auto deg = degrees(d);
  const bool low_degree = std::all_of(deg.begin(), deg.end(), [](auto x) { return x >= 1 && x <= 2; });
  const bool path = d.num_arcs() + 1 == d.num_vertices();
  const bool cycle = d.num_arcs() == d.num_vertices() && std::all_of(deg.begin(), deg.end(), [](auto x) { return x == 2; });
  if (!low_degree || !(path || cycle) || !is_connected(d)) throw PreconditionViolated("not a path or a cycle");
  int sum = 0;
  for (const auto& a : d.arcs()) sum += arc_parity(a);
  return sum % 2 ? Parity::Odd : Parity::Even;
}

MixedHypergraph negate_row(const MixedHypergraph& d, VertexId v) {
  if (!d.has_vertex(v)) throw InvalidInput("negate_row: unknown vertex " + std::to_string(raw(v)));
  auto arcs = d.arcs();
  for (auto& a : arcs) {
    const int s = a.sign(v);
    if (s == 1) {
      remove_from(a.plus, v);
      a.minus = sorted([&] { auto m = a.minus; m.push_back(v); return m; }());
    } else if (s == -1) {
      remove_from(a.minus, v);
      a.plus = sorted([&] { auto p = a.plus; p.push_back(v); return p; }());
    }
  }
  return MixedHypergraph(d.symbols(), d.vertices(), std::move(arcs));
}

MixedHypergraph negate_column(const MixedHypergraph& d, ArcId a) {
  if (!d.has_arc(a)) throw InvalidInput("negate_column: unknown arc " + std::to_string(raw(a)));
  auto arcs = d.arcs();
  auto& x = arcs[d.arc_position(a)];
  std::swap(x.plus, x.minus);
  return MixedHypergraph(d.symbols(), d.vertices(), std::move(arcs));
}

std::pair<MixedHypergraph, SplitArc> split_arc(const MixedHypergraph& d, ArcId id) {
  if (!d.has_arc(id)) throw InvalidInput("split: unknown arc " + std::to_string(raw(id)));
  const auto& a = d.arc(id);
  if (a.plus.size() != 1 || a.minus.size() != 1)
    throw PreconditionViolated("split: arc " + d.arc_name(id) + " needs exactly one head and one tail");

  const auto head = a.plus[0];
  const auto tail = a.minus[0];
  const bool head_first = d.vertex_position(head) < d.vertex_position(tail);
  const auto early = head_first ? head : tail;
  const auto late = head_first ? tail : head;

  auto sym = std::make_shared<Symbols>(*d.symbols());
  const auto w = vid(static_cast<std::uint32_t>(sym->vertex_names.size()));
  sym->vertex_names.push_back("w#" + std::to_string(raw(id)));

  std::uint32_t top = static_cast<std::uint32_t>(sym->edge_names.size());
  for (const auto& x : d.arcs()) top = std::max(top, raw(x.id) + 1);
  const auto first = eid(top);
  const auto second = eid(top + 1);
  if (!sym->edge_names.empty()) {
    const auto base = d.arc_name(id);
    sym->edge_names.resize(top + 2);
    sym->edge_names[top] = base + "'";
    sym->edge_names[top + 1] = base + "''";
  }

  auto vertices = d.vertices();
  vertices.insert(vertices.begin() + static_cast<std::ptrdiff_t>(d.vertex_position(early)) + 1, w);

  std::vector<Arc> arcs;
  arcs.reserve(d.num_arcs() + 1);
  for (const auto& x : d.arcs()) {
    if (x.id != id) {
      arcs.push_back(x);
      continue;
    }
    arcs.push_back(Arc{first, sorted({early, w}), {}});
    arcs.push_back(Arc{second, sorted({late, w}), {}});
  }
  return {MixedHypergraph(std::move(sym), std::move(vertices), std::move(arcs)), SplitArc{id, head, tail, w, first, second}};
}

namespace {

MixedHypergraph apply_step(const MixedHypergraph& d, const ReductionStep& step) {
  return std::visit(
      [&](const auto& s) -> MixedHypergraph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, NegateRow>) {
          return negate_row(d, s.vertex);
        } else if constexpr (std::is_same_v<T, NegateColumn>) {
          return negate_column(d, s.arc);
        } else {
          auto [out, done] = split_arc(d, s.arc);
          if (!(done == s)) throw InvalidInput("transcript split of arc " + std::to_string(raw(s.arc)) + " does not replay");
          return out;
        }
      },
      step);
}

MixedHypergraph unsplit(const MixedHypergraph& d, const SplitArc& s) {
  if (!d.has_vertex(s.w) || !d.has_arc(s.first) || !d.has_arc(s.second))
    throw InvalidInput("transcript split of arc " + std::to_string(raw(s.arc)) + " cannot be undone");
  auto vertices = d.vertices();
  vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(d.vertex_position(s.w)));
  std::vector<Arc> arcs;
  for (const auto& x : d.arcs()) {
    if (x.id == s.first)
      arcs.push_back(Arc{s.arc, {s.head}, {s.tail}});
    else if (x.id != s.second)
      arcs.push_back(x);
  }
  return MixedHypergraph(d.symbols(), std::move(vertices), std::move(arcs));
}

}  // namespace

MixedHypergraph replay(const MixedHypergraph& d, const ReductionTranscript& t) {
  auto cur = d;
  for (const auto& step : t.steps) cur = apply_step(cur, step);
  return cur;
}

MixedHypergraph undo(const MixedHypergraph& reduced, const ReductionTranscript& t) {
  auto cur = reduced;
  for (auto it = t.steps.rbegin(); it != t.steps.rend(); ++it) {
    if (const auto* s = std::get_if<SplitArc>(&*it))
      cur = unsplit(cur, *s);
    else
      cur = apply_step(cur, *it);
  }
  return cur;
}

Normalization normalize_to_hypergraph(const MixedHypergraph& d) {
  require_disjoint(d);
  Normalization out;

  // Union-find with parity: flip[v] xor flip[w] must equal (sign v != sign w) within arcs of size >= 3.
  const auto n = d.num_vertices();
  std::vector<std::size_t> parent(n);
  std::vector<int> rel(n, 0);  // parity to parent
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    int p = 0;
    std::size_t r = x;
    while (parent[r] != r) {
      p ^= rel[r];
      r = parent[r];
    }
    return std::pair{r, p};
  };
  bool consistent = true;
  for (const auto& a : d.arcs()) {
    if (a.size() < 3) continue;
    const auto sup = a.support();
    const auto x0 = d.vertex_position(sup[0]);
    for (std::size_t i = 1; i < sup.size(); ++i) {
      const auto xi = d.vertex_position(sup[i]);
      const int want = a.sign(sup[0]) != a.sign(sup[i]) ? 1 : 0;
      auto [r0, p0] = find(x0);
      auto [ri, pi] = find(xi);
      if (r0 == ri) {
        if ((p0 ^ pi) != want) consistent = false;
      } else {
        parent[ri] = r0;
        rel[ri] = p0 ^ pi ^ want;
      }
    }
  }
  out.complete = consistent;
  if (!consistent) {
    out.reduced = d;
    return out;
  }

  auto cur = d;
  for (std::size_t i = 0; i < n; ++i) {
    if (find(i).second == 0) continue;
    const auto v = d.vertices()[i];
    out.transcript.steps.emplace_back(NegateRow{v});
    cur = negate_row(cur, v);
  }
  for (const auto& a : d.arcs()) {
    if (!cur.arc(a.id).plus.empty()) continue;
    out.transcript.steps.emplace_back(NegateColumn{a.id});
    cur = negate_column(cur, a.id);
  }
  for (const auto& a : d.arcs()) {
    const auto& x = cur.arc(a.id);
    if (x.minus.empty()) continue;
    if (x.plus.size() != 1 || x.minus.size() != 1)
      throw InternalConsistencyError("sign normalization", "arc " + d.arc_name(a.id) + " still has mixed signs");
    auto [next, step] = split_arc(cur, a.id);
    out.transcript.steps.emplace_back(step);
    cur = std::move(next);
  }
  if (!cur.is_unsigned()) throw InternalConsistencyError("sign normalization", "reduced form has a tail");
  out.hypergraph = cur.underlying();
  out.reduced = std::move(cur);
  return out;
}

namespace {

// Collapses w and its two split arcs inside an edge sequence. `closed` for cycles.
void collapse(std::vector<VertexId>& vs, std::vector<EdgeId>& es, const SplitArc& s, bool closed) {
  auto uses = [&](EdgeId e) { return e == s.first || e == s.second; };
  const auto wit = std::find(vs.begin(), vs.end(), s.w);
  const auto used = std::count_if(es.begin(), es.end(), uses);
  if (wit == vs.end()) {
    if (used != 0) throw InternalConsistencyError("witness map-back", "split arc used without its split vertex");
    return;
  }
  if (closed && wit == vs.begin()) {
    std::rotate(vs.begin(), vs.begin() + 1, vs.end());
    std::rotate(es.begin(), es.begin() + 1, es.end());
  }
  const auto j = static_cast<std::size_t>(std::find(vs.begin(), vs.end(), s.w) - vs.begin());
  if (j == 0 || (!closed && j + 1 == vs.size()) || used != 2 || !uses(es[j - 1]) || !uses(es[j % es.size()]))
    throw InternalConsistencyError("witness map-back", "split vertex is not interior to its two split arcs");
  es[j - 1] = s.arc;
  es.erase(es.begin() + static_cast<std::ptrdiff_t>(j % es.size()));
  vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(j));
}

}  // namespace

Witness map_witness_back(const Witness& reduced_witness, const ReductionTranscript& t) {
  Witness w = reduced_witness;
  for (auto it = t.steps.rbegin(); it != t.steps.rend(); ++it) {
    const auto* s = std::get_if<SplitArc>(&*it);
    if (!s) continue;
    if (w.is_cycle()) {
      auto c = w.cycle();
      collapse(c.vertices, c.edges, *s, true);
      w.data = std::move(c);
    } else {
      auto th = w.tree_house();
      if (th.house == s->first || th.house == s->second || th.root == s->w)
        throw InternalConsistencyError("witness map-back", "split arc used as the house");
      for (auto& p : th.paths) collapse(p.vertices, p.edges, *s, false);
      w.data = std::move(th);
    }
  }
  switch (w.kind) {
    case WitnessKind::OddCycle: w.kind = WitnessKind::MixedOddCycle; break;
    case WitnessKind::OddTreeHouse: w.kind = WitnessKind::MixedOddTreeHouse; break;
    default: break;
  }
  return w;
}

std::optional<CycleData> as_mixed_cycle(const MixedHypergraph& d) {
  if (d.num_arcs() < 2 || d.num_arcs() != d.num_vertices()) return std::nullopt;
  for (const auto& a : d.arcs())
    if (a.size() != 2) return std::nullopt;
  const auto deg = degrees(d);
  if (!std::all_of(deg.begin(), deg.end(), [](auto x) { return x == 2; }) || !is_connected(d)) return std::nullopt;

  CycleData c;
  auto v = d.vertices().front();
  auto a = incident(d, v).front();
  for (std::size_t i = 0; i < d.num_arcs(); ++i) {
    c.vertices.push_back(v);
    c.edges.push_back(a);
    v = other_end(d.arc(a), v);
    const auto next = incident(d, v);
    a = next[0] == a ? next[1] : next[0];
  }
  return c;
}

std::vector<std::int64_t> even_cycle_nullvector(const MixedHypergraph& c) {
  const auto cyc = as_mixed_cycle(c);
  if (!cyc) throw PreconditionViolated("not a mixed cycle");
  if (path_or_cycle_parity(c) == Parity::Odd) throw PreconditionViolated("the cycle is odd; no null vector exists");
  const auto u = cycle_nullvector(*cyc, [&](VertexId v, ArcId a) -> std::int64_t { return c.arc(a).sign(v); });
  std::vector<std::int64_t> out(c.num_arcs(), 0);
  for (std::size_t i = 0; i < cyc->edges.size(); ++i) out[c.arc_position(cyc->edges[i])] = u[i];
  return out;
}

std::optional<Witness> as_mixed_odd_tree_house(const MixedHypergraph& d) {
  std::optional<ArcId> house;
  for (const auto& a : d.arcs()) {
    if (a.size() == 2) continue;
    if (a.size() != 4 || house) return std::nullopt;
    house = a.id;
  }
  if (!house || d.num_arcs() != d.num_vertices()) return std::nullopt;
  const auto& h = d.arc(*house);
  const auto hv = h.support();
  const auto deg = degrees(d);
  std::optional<VertexId> root;
  for (std::size_t i = 0; i < d.num_vertices(); ++i) {
    const auto v = d.vertices()[i];
    if (deg[i] == 4 && h.sign(v) != 0 && !root)
      root = v;
    else if (deg[i] != 2)
      return std::nullopt;
  }
  if (!root) return std::nullopt;

  TreeHouseData th;
  th.root = *root;
  th.house = *house;
  std::set<VertexId> seen{*root};
  std::set<ArcId> used{*house};
  std::vector<PathData> paths;
  for (auto start : incident(d, *root)) {
    if (start == *house) continue;
    PathData p;
    p.vertices.push_back(*root);
    auto a = start;
    auto v = *root;
    while (true) {
      if (!used.insert(a).second) return std::nullopt;
      v = other_end(d.arc(a), v);
      if (!seen.insert(v).second) return std::nullopt;
      p.vertices.push_back(v);
      p.edges.push_back(a);
      if (h.sign(v) != 0) break;
      const auto next = incident(d, v);
      a = next[0] == a ? next[1] : next[0];
    }
    paths.push_back(std::move(p));
  }
  if (paths.size() != 3 || seen.size() != d.num_vertices() || used.size() != d.num_arcs()) return std::nullopt;
  std::sort(paths.begin(), paths.end(), [](const PathData& x, const PathData& y) { return x.vertices.back() < y.vertices.back(); });
  for (std::size_t i = 0; i < 3; ++i) {
    th.leaves[i] = paths[i].vertices.back();
    th.paths[i] = std::move(paths[i]);
  }
  Witness w{WitnessKind::MixedOddTreeHouse, std::move(th)};
  if (!verify_witness(d, w)) return std::nullopt;
  return w;
}

std::string to_string(AlmostTuClass c) {
  switch (c) {
    case AlmostTuClass::MixedOddCycle: return "MixedOddCycle";
    case AlmostTuClass::MixedOddTreeHouse: return "MixedOddTreeHouse";
    case AlmostTuClass::NotAlmostTU: return "NotAlmostTU";
  }
  return "NotAlmostTU";
}

Classification classify_almost_tu_disjoint(const MixedHypergraph& d) {
  require_disjoint(d);
  if (auto c = as_mixed_cycle(d); c && path_or_cycle_parity(d) == Parity::Odd) {
    Witness w{WitnessKind::MixedOddCycle, std::move(*c)};
    if (!verify_witness(d, w)) throw InternalConsistencyError("classification", "odd cycle fails verification");
    return {AlmostTuClass::MixedOddCycle, std::move(w)};
  }
  if (auto w = as_mixed_odd_tree_house(d)) return {AlmostTuClass::MixedOddTreeHouse, std::move(w)};
  return {};
}

namespace {

IntMatrix r_for_tree_house(const MixedHypergraph& d, const TreeHouseData& th) {
  const auto& p1 = th.paths[0];
  const auto& p2 = th.paths[1];
  const auto h = th.house;
  const auto a = p2.edges.front();

  // C: r -h- l1, then P1 back to r.
  CycleData c;
  c.vertices.push_back(th.root);
  c.edges.push_back(h);
  for (std::size_t i = p1.edges.size(); i-- > 0;) {
    c.vertices.push_back(p1.vertices[i + 1]);
    c.edges.push_back(p1.edges[i]);
  }
  std::vector<std::int64_t> u;
  try {
    u = cycle_nullvector(c, [&](VertexId v, ArcId e) -> std::int64_t { return d.arc(e).sign(v); });
  } catch (const PreconditionViolated&) {
    throw InternalConsistencyError("R construction", "cycle through the first path and the house is not even");
  }

  const auto m = d.num_arcs();
  auto r = IntMatrix::identity(m);
  const auto hc = d.arc_position(h);
  const auto ac = d.arc_position(a);
  const std::int64_t sigma = d.arc(a).sign(th.root) * d.arc(h).sign(th.root);
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto f = d.arc_position(c.edges[i]);
    r(f, hc) = u[i];
    if (f != hc) r(f, ac) = sigma * u[i];
  }
  return r;
}

void check_hole(const IntMatrix& product) {
  if (!product.entries_in_unit_range())
    throw InternalConsistencyError("R construction", "product has entries outside {0, 1, -1}");
  const auto cls = classify_almost_tu_disjoint(MixedHypergraph::from_matrix(product));
  if (cls.kind != AlmostTuClass::MixedOddCycle)
    throw InternalConsistencyError("R construction", "product is not a mixed odd cycle");
  if (abs(det_exact(product)) != 2) throw InternalConsistencyError("R construction", "product determinant is not 2 in absolute value");
}

}  // namespace

bool is_unbalanced_hole(const IntMatrix& m) {
  if (m.empty() || !m.is_square() || !m.entries_in_unit_range()) return false;
  const auto d = MixedHypergraph::from_matrix(m);
  const auto c = as_mixed_cycle(d);
  if (!c || !verify_witness(d, Witness{WitnessKind::MixedOddCycle, *c})) return false;
  return abs(det_exact(m)) == 2;
}

RConstruction build_r_matrix(const IntMatrix& a, Side side) {
  const auto oriented = side == Side::Right ? a : a.transpose();
  const auto d = MixedHypergraph::from_matrix(oriented);
  const auto cls = classify_almost_tu_disjoint(d);
  RConstruction out;
  out.side = side;
  out.input_class = cls.kind;
  switch (cls.kind) {
    case AlmostTuClass::NotAlmostTU:
      throw PreconditionViolated("build-r: input is neither a mixed odd cycle nor a mixed odd tree house");
    case AlmostTuClass::MixedOddCycle:
      out.r = IntMatrix::identity(side == Side::Right ? a.cols() : a.rows());
      out.product = a;
      return out;
    case AlmostTuClass::MixedOddTreeHouse: break;
  }
  auto r = r_for_tree_house(d, cls.witness->tree_house());
  if (side == Side::Right) {
    out.product = a * r;
    out.r = std::move(r);
  } else {
    out.r = r.transpose();
    out.product = out.r * a;
  }
  check_hole(out.product);
  return out;
}

Json to_json(const ReductionTranscript& t, const Symbols& sym) {
  Json steps = Json::array();
  for (const auto& step : t.steps) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, NegateRow>) {
            steps.push_back({{"op", "negate_row"}, {"vertex", sym.vertex_name(s.vertex)}});
          } else if constexpr (std::is_same_v<T, NegateColumn>) {
            steps.push_back({{"op", "negate_column"}, {"arc", raw(s.arc)}});
          } else {
            steps.push_back({{"op", "split"},
                             {"arc", raw(s.arc)},
                             {"head", sym.vertex_name(s.head)},
                             {"tail", sym.vertex_name(s.tail)},
                             {"w", sym.vertex_name(s.w)},
                             {"first", raw(s.first)},
                             {"second", raw(s.second)}});
          }
        },
        step);
  }
  return steps;
}

}  // namespace tuhyper
