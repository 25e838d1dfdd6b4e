#include "tuhyper/extract.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>
#include <tuple>

#include "tuhyper/detect.hpp"
#include "tuhyper/error.hpp"

namespace tuhyper {

namespace {

using VSet = std::set<VertexId>;

[[noreturn]] void fail(const std::string& step, const std::string& detail) {
  throw InternalConsistencyError(step, detail);
}

void check(bool ok, const std::string& step, const std::string& detail) {
  if (!ok) fail(step, detail);
}

std::size_t support_of(const Hypergraph& g) {
  std::size_t s = 0;
  for (const auto& e : g.edges()) s += e.size();
  return s;
}

VSet meet(const Edge& e, const VSet& u) {
  VSet out;
  for (auto v : e.vertices)
    if (u.contains(v)) out.insert(v);
  return out;
}

bool subset(const VSet& a, const Edge& e) {
  return std::all_of(a.begin(), a.end(), [&](VertexId v) { return e.contains(v); });
}

std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

// ---------------------------------------------------------------- graph cycles

struct GraphEdge {
  VertexId a;
  VertexId b;
  EdgeId phi;
  bool matching = false;
};

struct GraphCycle {
  std::vector<VertexId> vertices;
  std::vector<std::size_t> edges;  // indices into the edge list; edge i joins vertex i and i + 1
};

class CycleFinder {
 public:
  CycleFinder(const std::vector<VertexId>& vertices, const std::vector<GraphEdge>& edges) : edges_(edges) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      adj_[edges[i].a].emplace_back(i, edges[i].b);
      adj_[edges[i].b].emplace_back(i, edges[i].a);
    }
    for (auto v : vertices) {
      if (found_) break;
      if (!visited_.contains(v)) dfs(v, edges.size());
    }
  }

  [[nodiscard]] std::optional<GraphCycle> result() const { return found_; }

 private:
  void dfs(VertexId v, std::size_t via) {
    visited_.insert(v);
    depth_[v] = stack_.size();
    stack_.push_back(v);
    stack_edges_.push_back(via);
    for (const auto& [idx, w] : adj_[v]) {
      if (found_) break;
      if (idx == via) continue;
      if (auto it = depth_.find(w); it != depth_.end()) {
        GraphCycle c;
        for (std::size_t p = it->second; p < stack_.size(); ++p) {
          c.vertices.push_back(stack_[p]);
          if (p > it->second) c.edges.push_back(stack_edges_[p]);
        }
        c.edges.push_back(idx);
        found_ = std::move(c);
        break;
      }
      if (!visited_.contains(w)) dfs(w, idx);
    }
    depth_.erase(v);
    stack_.pop_back();
    stack_edges_.pop_back();
  }

  const std::vector<GraphEdge>& edges_;
  std::map<VertexId, std::vector<std::pair<std::size_t, VertexId>>> adj_;
  std::set<VertexId> visited_;
  std::map<VertexId, std::size_t> depth_;  // position on the DFS stack
  std::vector<VertexId> stack_;
  std::vector<std::size_t> stack_edges_;
  std::optional<GraphCycle> found_;
};

std::vector<GraphEdge> size_two_edges(const Hypergraph& g) {
  std::vector<GraphEdge> out;
  for (const auto& e : g.edges())
    if (e.size() == 2) out.push_back({e.vertices[0], e.vertices[1], e.id, false});
  return out;
}

// G[U, F] is a cycle in the listed order.
void check_cycle_in(const Hypergraph& g, const CycleData& c, const std::string& step) {
  const auto k = c.vertices.size();
  check(k >= 2 && c.edges.size() == k, step, "cycle needs k >= 2 vertices and k edges");
  const VSet u(c.vertices.begin(), c.vertices.end());
  check(u.size() == k, step, "cycle repeats a vertex");
  check(std::set<EdgeId>(c.edges.begin(), c.edges.end()).size() == k, step, "cycle repeats an edge");
  for (std::size_t i = 0; i < k; ++i) {
    check(g.has_edge(c.edges[i]), step, "cycle edge outside the host");
    check(meet(g.edge(c.edges[i]), u) == VSet{c.vertices[i], c.vertices[(i + 1) % k]}, step,
          "edge " + g.edge_name(c.edges[i]) + " does not meet the cycle in its two neighbours");
  }
}

// ------------------------------------------------------------ weak tree houses

// Edge i of a path joins v[i] and v[i + 1] and is mapped to phi[i].
struct WPath {
  std::vector<VertexId> v;
  std::vector<EdgeId> phi;

  [[nodiscard]] std::size_t len() const noexcept { return phi.size(); }
  [[nodiscard]] VSet vertex_set() const { return {v.begin(), v.end()}; }
};

// Three paths from a common root plus the house {root, leaves}, with images in the host.
struct Weak {
  EdgeId house{};
  std::array<WPath, 3> paths;

  [[nodiscard]] VertexId root() const { return paths[0].v.front(); }
  [[nodiscard]] VSet house_set() const {
    return {root(), paths[0].v.back(), paths[1].v.back(), paths[2].v.back()};
  }
  [[nodiscard]] VSet vertices() const {
    VSet out;
    for (const auto& p : paths) out.insert(p.v.begin(), p.v.end());
    return out;
  }
  [[nodiscard]] std::size_t num_edges() const { return 1 + paths[0].len() + paths[1].len() + paths[2].len(); }
};

struct ERef {
  int path;  // -1 for the house
  std::size_t index;
};

struct WConflict {
  EdgeId edge;
  std::vector<ERef> preimage;
};

auto path_key(const WPath& p) {
  std::vector<VertexId> sorted = p.v;
  std::sort(sorted.begin(), sorted.end());
  return std::pair{p.len(), sorted};
}

void canonicalize(std::span<WPath> paths) {
  std::stable_sort(paths.begin(), paths.end(),
                   [](const WPath& a, const WPath& b) { return path_key(a) < path_key(b); });
}

WPath slice(const WPath& p, std::size_t from, std::size_t to) {
  WPath out;
  if (from <= to) {
    out.v.assign(p.v.begin() + static_cast<std::ptrdiff_t>(from), p.v.begin() + static_cast<std::ptrdiff_t>(to) + 1);
    out.phi.assign(p.phi.begin() + static_cast<std::ptrdiff_t>(from), p.phi.begin() + static_cast<std::ptrdiff_t>(to));
  } else {
    for (std::size_t i = from + 1; i-- > to;) out.v.push_back(p.v[i]);
    for (std::size_t i = from; i-- > to;) out.phi.push_back(p.phi[i]);
  }
  return out;
}

WPath join(WPath a, const WPath& b) {
  a.v.insert(a.v.end(), b.v.begin() + 1, b.v.end());
  a.phi.insert(a.phi.end(), b.phi.begin(), b.phi.end());
  return a;
}

WalkEmbedding walk(const WPath& p) { return {p.v, p.phi}; }

std::optional<std::size_t> position(const WPath& p, VertexId x) {
  auto it = std::find(p.v.begin(), p.v.end(), x);
  if (it == p.v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - p.v.begin());
}

// Checks Q1 and Q2; returns the conflicts ascending by host edge id.
std::vector<WConflict> weak_conflicts(const Hypergraph& host, const Weak& w, const std::string& step) {
  const auto vw = w.vertices();
  std::map<EdgeId, std::vector<std::pair<ERef, VSet>>> pre;
  pre[w.house].push_back({ERef{-1, 0}, w.house_set()});
  for (int i = 0; i < 3; ++i) {
    const auto& p = w.paths[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < p.len(); ++j) pre[p.phi[j]].push_back({ERef{i, j}, VSet{p.v[j], p.v[j + 1]}});
  }
  std::vector<WConflict> out;
  for (const auto& [e, items] : pre) {
    check(host.has_edge(e), step, "image edge outside the host");
    const auto& he = host.edge(e);
    VSet seen;
    for (const auto& [ref, vs] : items) {
      check(subset(vs, he), step, "an edge is not contained in its image " + host.edge_name(e));
      for (auto v : vs) check(seen.insert(v).second, step, "preimages of " + host.edge_name(e) + " overlap");
    }
    const auto full = meet(he, vw);
    WConflict c{e, {}};
    bool conflict = false;
    for (const auto& [ref, vs] : items) {
      c.preimage.push_back(ref);
      if (vs.size() < full.size()) conflict = true;
    }
    if (conflict) out.push_back(std::move(c));
  }
  return out;
}

// Paths from a common root to distinct leaves, internal vertices off the house.
void check_spider(const Weak& w, const std::string& step) {
  const auto r = w.root();
  for (const auto& p : w.paths) {
    check(p.len() >= 1 && p.v.size() == p.len() + 1, step, "path needs at least one edge");
    check(p.v.front() == r, step, "paths do not share the root");
    check(VSet(p.v.begin(), p.v.end()).size() == p.v.size(), step, "path repeats a vertex");
  }
  const auto h = w.house_set();
  check(h.size() == 4, step, "house does not have four distinct vertices");
  for (const auto& p : w.paths)
    for (std::size_t j = 1; j + 1 < p.v.size(); ++j)
      check(!h.contains(p.v[j]), step, "an internal path vertex lies on the house");
}

void check_odd_tree_house(const Weak& w, const std::string& step) {
  check_spider(w, step);
  VSet seen{w.root()};
  for (const auto& p : w.paths) {
    check(p.len() % 2 == 1, step, "tree-house path of even length");
    for (std::size_t j = 1; j < p.v.size(); ++j) check(seen.insert(p.v[j]).second, step, "tree-house paths meet");
  }
}

Weak weak_from_witness(const Witness& t) {
  const auto& d = t.tree_house();
  Weak w;
  w.house = d.house;
  for (std::size_t i = 0; i < 3; ++i) w.paths[i] = WPath{d.paths[i].vertices, d.paths[i].edges};
  return w;
}

Witness weak_to_witness(Weak w) {
  canonicalize(w.paths);
  TreeHouseData d;
  d.root = w.root();
  d.house = w.house;
  for (std::size_t i = 0; i < 3; ++i) {
    d.leaves[i] = w.paths[i].v.back();
    d.paths[i] = PathData{w.paths[i].v, w.paths[i].phi};
  }
  return Witness{WitnessKind::OddTreeHouse, std::move(d)};
}

// ---------------------------------------------------------------- parity lemma

OddCycleFreeHost odd_cycle_free(const std::shared_ptr<const Hypergraph>& g, const SearchLimits& limits,
                                const std::string& step) {
  try {
    return OddCycleFreeHost(g, limits);
  } catch (const PreconditionViolated& e) {
    fail(step, e.what());
  }
}

void parity_closed(const OddCycleFreeHost& h, const WPath& p, EdgeId e, const std::string& step) {
  try {
    (void)walk_parity_closed(h, walk(p), e);
  } catch (const PreconditionViolated& ex) {
    fail(step, ex.what());
  } catch (const InternalConsistencyError& ex) {
    fail(step, ex.what());
  }
}

void parity_closed(const OddCycleFreeHost& h, const WPath& p, const WPath& q, EdgeId e, EdgeId f,
                   const std::string& step) {
  try {
    (void)walk_parity_closed(h, walk(p), walk(q), e, f);
  } catch (const PreconditionViolated& ex) {
    fail(step, ex.what());
  } catch (const InternalConsistencyError& ex) {
    fail(step, ex.what());
  }
}

std::string vname(const Hypergraph& g, VertexId v) { return g.vertex_name(v); }

}  // namespace

// ------------------------------------------------------------------------ core

std::size_t EulerianCore::support() const { return support_of(*graph); }

SubSelection NiceCycle::selection() const {
  SubSelection s{cycle.vertices, cycle.edges};
  std::sort(s.vertices.begin(), s.vertices.end());
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

EulerianCore find_eulerian_core(const Hypergraph& g, const LinalgLimits& limits, CoreOrder order) {
  require_disjoint(g);
  check_guard(incidence_matrix(g), limits);
  const auto n = g.num_vertices();
  const auto m = g.num_edges();
  if (n > 62 || m > 62) throw GuardExceeded("core search supports at most 62 vertices and edges");
  std::vector<std::uint64_t> col(m, 0);
  for (std::size_t c = 0; c < m; ++c)
    for (auto v : g.edges()[c].vertices) col[c] |= std::uint64_t{1} << g.vertex_position(v);

  const auto top = std::min(n, m);
  for (std::size_t step = 1; step <= top; ++step) {
    const auto k = order == CoreOrder::Smallest ? step : top + 1 - step;
    for (std::uint64_t u = (std::uint64_t{1} << k) - 1; u < (std::uint64_t{1} << n); u = next_combination(u)) {
      std::vector<std::size_t> cuts;
      std::vector<std::uint64_t> masks;
      for (std::size_t c = 0; c < m; ++c) {
        const auto x = col[c] & u;
        if (x != 0 && std::popcount(x) % 2 == 0) {
          cuts.push_back(c);
          masks.push_back(x);
        }
      }
      const auto q = cuts.size();
      if (q < k) continue;
      for (std::uint64_t f = (std::uint64_t{1} << k) - 1; f < (std::uint64_t{1} << q); f = next_combination(f)) {
        std::uint64_t parity = 0;
        std::uint64_t cover = 0;
        std::size_t supp = 0;
        for (auto b = f; b != 0; b &= b - 1) {
          const auto x = masks[static_cast<std::size_t>(std::countr_zero(b))];
          parity ^= x;
          cover |= x;
          supp += static_cast<std::size_t>(std::popcount(x));
        }
        if (parity != 0 || cover != u || supp % 4 != 2) continue;
        SubSelection sel;
        for (std::size_t r = 0; r < n; ++r)
          if ((u >> r) & 1U) sel.vertices.push_back(g.vertices()[r]);
        for (auto b = f; b != 0; b &= b - 1) sel.edges.push_back(g.edges()[cuts[static_cast<std::size_t>(std::countr_zero(b))]].id);
        EulerianCore core{std::make_shared<const Hypergraph>(induce(g, sel))};
        const auto& h = *core.graph;
        const std::string step = "Eulerian core";
        check(is_eulerian(h), step, "core is not Eulerian");
        check(h.num_vertices() == h.num_edges(), step, "core is not square");
        check(core.support() % 4 == 2, step, "core support is not 2 mod 4");
        for (auto v : h.vertices()) check(h.degree(v) > 0, step, "core has an isolated vertex");
        return core;
      }
    }
  }
  throw PreconditionViolated("no Eulerian core with support 2 mod 4: the input is unimodular");
}

ForestOutcome enforce_forest(const EulerianCore& core, const LinalgLimits& limits, CoreOrder order) {
  const std::string step = "forest enforcement";
  ForestOutcome out{core, std::nullopt, 0};
  for (;;) {
    const auto& g = *out.core.graph;
    const auto edges = size_two_edges(g);
    const auto found = CycleFinder(g.vertices(), edges).result();
    if (!found) return out;
    CycleData c{found->vertices, {}};
    for (auto i : found->edges) c.edges.push_back(edges[i].phi);
    check_cycle_in(g, c, step);
    if (c.length() % 2 == 1) {
      auto w = make_cycle_witness(WitnessKind::OddCycle, c.vertices, c.edges);
      check(verify_witness(g, w), step, "odd cycle of size-2 edges fails verification");
      out.witness = std::move(w);
      return out;
    }
    const NiceCycle nc{c, c.edges.back(), false};
    const auto rp = reduce_by_cycle(out.core, nc);
    check(rp.conflict_free, step, "removing a cycle of size-2 edges left a conflict");
    auto next = find_eulerian_core(rp.reduced(), limits, order);
    check(next.support() < out.core.support(), step, "support did not decrease");
    std::vector<EdgeId> ids;
    for (const auto& e : next.graph->edges()) ids.push_back(e.id);
    check(induce(g, SubSelection{next.graph->vertices(), ids}).edges().size() == ids.size(), step,
          "new core is not a partial subhypergraph of the old one");
    for (const auto& e : next.graph->edges())
      check(meet(g.edge(e.id), VSet(next.graph->vertices().begin(), next.graph->vertices().end())) ==
                VSet(e.vertices.begin(), e.vertices.end()),
            step, "new core is not a partial subhypergraph of the old one");
    out.core = std::move(next);
    ++out.cycles_removed;
  }
}

namespace {

void check_nice(const Hypergraph& g, const NiceCycle& nc, const std::string& step) {
  check_cycle_in(g, nc.cycle, step);
  check(nc.cycle.length() % 2 == 0, step, "cycle is odd");
  check(nc.cycle.edges.back() == nc.g_star, step, "g* does not close the cycle");
  const VSet u(nc.cycle.vertices.begin(), nc.cycle.vertices.end());
  const std::set<EdgeId> f(nc.cycle.edges.begin(), nc.cycle.edges.end());
  for (const auto& e : g.edges()) {
    if (e.size() < 4) continue;
    if (f.contains(e.id)) {
      if (e.id == nc.g_star) continue;
      for (auto v : meet(e, u))
        for (auto d : g.incident_edges(v))
          check(f.contains(d), step, "N1 fails at vertex " + vname(g, v) + " of edge " + g.edge_name(e.id));
    } else {
      check(meet(e, u).size() <= 1, step, "N2 fails at edge " + g.edge_name(e.id));
    }
  }
}

}  // namespace

NiceCycle almost_nice_cycle(const EulerianCore& core) {
  const std::string step = "almost-nice cycle";
  const auto& g = *core.graph;
  auto aux = size_two_edges(g);
  check(!CycleFinder(g.vertices(), aux).result(), step, "size-2 edges do not form a forest");
  std::map<VertexId, std::size_t> forest_degree;
  for (const auto& e : aux) {
    ++forest_degree[e.a];
    ++forest_degree[e.b];
  }
  std::map<VertexId, EdgeId> owner;
  for (const auto& e : g.edges()) {
    if (e.size() == 2) continue;
    check(e.size() >= 4, step, "core edge of odd size");
    for (auto v : e.vertices) owner[v] = e.id;
    std::vector<VertexId> leaves;
    for (auto v : e.vertices)
      if (forest_degree[v] == 1) leaves.push_back(v);
    for (std::size_t i = 0; i + 1 < leaves.size(); i += 2) aux.push_back({leaves[i], leaves[i + 1], e.id, true});
  }
  check(aux.size() >= g.num_vertices(), step, "auxiliary graph has fewer edges than vertices");
  const auto found = CycleFinder(g.vertices(), aux).result();
  check(found.has_value(), step, "auxiliary graph is acyclic");
  const auto& cv = found->vertices;
  const auto& ce = found->edges;
  const auto k = cv.size();

  auto matching_between = [&](VertexId x, VertexId y) {
    return std::any_of(ce.begin(), ce.end(), [&](std::size_t i) {
      const auto& e = aux[i];
      return e.matching && ((e.a == x && e.b == y) || (e.a == y && e.b == x));
    });
  };
  // Positions along the cycle from `from` forward to `to`.
  auto arc = [&](std::size_t from, std::size_t to) {
    std::pair<std::vector<VertexId>, std::vector<std::size_t>> p;
    for (std::size_t i = from;; i = (i + 1) % k) {
      p.first.push_back(cv[i]);
      if (i == to) break;
      p.second.push_back(ce[i]);
    }
    return p;
  };

  std::optional<std::tuple<std::size_t, VertexId, VertexId, std::size_t, std::size_t>> best;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto oi = owner.find(cv[i]);
      const auto oj = owner.find(cv[j]);
      if (oi == owner.end() || oj == owner.end() || oi->second != oj->second) continue;
      if (matching_between(cv[i], cv[j])) continue;
      const auto dist = std::min(j - i, k - (j - i));
      const auto key = std::tuple{dist, std::min(cv[i], cv[j]), std::max(cv[i], cv[j]), i, j};
      if (!best || key < *best) best = key;
    }

  std::pair<std::vector<VertexId>, std::vector<std::size_t>> path;
  if (best) {
    const auto [dist, lo, hi, i, j] = *best;
    path = (j - i <= k - (j - i)) ? arc(i, j) : arc(j, i);
  } else {
    std::optional<std::size_t> p;
    for (std::size_t i = 0; i < k && !p; ++i)
      if (aux[ce[i]].matching) p = i;
    check(p.has_value(), step, "auxiliary cycle has no matching edge");
    path = arc((*p + 1) % k, *p);
  }
  const auto& [pv, pe] = path;
  const auto v = pv.front();
  const auto w = pv.back();
  check(owner.contains(v) && owner.contains(w) && owner[v] == owner[w], step, "path ends are not in one proper edge");
  const auto g_star = owner[v];

  CycleData cycle{pv, {}};
  for (auto i : pe) cycle.edges.push_back(aux[i].phi);
  check(std::find(cycle.edges.begin(), cycle.edges.end(), g_star) == cycle.edges.end(), step,
        "g* is the image of a path edge");
  check(std::set<EdgeId>(cycle.edges.begin(), cycle.edges.end()).size() == cycle.edges.size(), step,
        "path images are not distinct");
  const VSet u(pv.begin(), pv.end());
  const std::set<EdgeId> images(cycle.edges.begin(), cycle.edges.end());
  for (const auto& e : g.edges()) {
    if (e.size() < 4) continue;
    const auto c = meet(e, u).size();
    check(c <= 2, step, "a proper edge meets the path three times");
    check((c == 2) == (images.contains(e.id) || e.id == g_star), step,
          "a proper edge meets the path twice without being used");
  }
  cycle.edges.push_back(g_star);
  NiceCycle nc{std::move(cycle), g_star, best.has_value()};
  check_nice(g, nc, step);
  return nc;
}

ReducedPair reduce_by_cycle(const EulerianCore& core, const NiceCycle& nc) {
  const std::string step = "cycle reduction";
  const auto& g = *core.graph;
  check_cycle_in(g, nc.cycle, step);
  check(nc.cycle.length() % 2 == 0, step, "cycle is odd");
  const VSet u(nc.cycle.vertices.begin(), nc.cycle.vertices.end());
  const std::set<EdgeId> f(nc.cycle.edges.begin(), nc.cycle.edges.end());
  check(f.contains(nc.g_star), step, "g* is not on the cycle");

  auto all_in_f = [&](VertexId v) {
    const auto inc = g.incident_edges(v);
    return std::all_of(inc.begin(), inc.end(), [&](EdgeId e) { return f.contains(e); });
  };
  std::vector<VertexId> vertices;
  for (auto v : g.vertices())
    if (!(u.contains(v) && all_in_f(v))) vertices.push_back(v);
  std::vector<Edge> edges;
  bool special = true;
  for (const auto& e : g.edges()) {
    if (!f.contains(e.id)) {
      edges.push_back(e);
      continue;
    }
    if (e.size() < 4) continue;
    Edge rest{e.id, {}};
    for (auto v : e.vertices)
      if (!u.contains(v)) rest.vertices.push_back(v);
      else if (!all_in_f(v)) special = false;
    check(!rest.vertices.empty(), step, "a proper cycle edge vanished");
    edges.push_back(std::move(rest));
  }
  Hypergraph h(g.symbols(), std::move(vertices), std::move(edges));
  const auto before = support_of(g);
  const auto after = support_of(h);
  check(is_eulerian(h), step, "reduced hypergraph is not Eulerian");
  check(is_disjoint(h), step, "reduced hypergraph is not disjoint");
  check(after + 2 * f.size() == before, step, "support did not drop by the cycle support");
  check(after + 4 <= before && after % 4 == 2, step, "support drop is not a positive multiple of 4");

  std::vector<std::pair<EdgeId, EdgeId>> phi;
  for (const auto& e : h.edges()) phi.emplace_back(e.id, e.id);
  QuasiEmbedding q(core.graph, std::move(h), phi);
  check(verify_quasi(q), step, "reduced hypergraph is not a quasi-subhypergraph");
  const auto conf = conflicts(q);
  check(conf.size() <= 1, step, "more than one conflict");
  check(conf.empty() || conf.conflicts.front().host_edge == nc.g_star, step, "the conflict is not g*");
  if (special) check(conf.empty(), step, "conflict although every cycle vertex of a proper edge is saturated");
  const bool free = conf.empty();
  return ReducedPair{core.graph, nc, std::move(q), free};
}

// --------------------------------------------------------------------- lifting

LiftReport lift_tree_house(const ReducedPair& rp, const Witness& t, const SearchLimits& limits) {
  const std::string step = "tree-house lifting";
  check(!t.is_cycle(), step, "input is not a tree house");
  check(verify_witness(rp.reduced(), t), step, "input tree house fails verification in the reduced hypergraph");
  const auto& g = *rp.core;
  const auto host = odd_cycle_free(rp.core, limits, step);

  auto validate = [&](Weak& w) {
    canonicalize(w.paths);
    check_odd_tree_house(w, step);
    std::set<EdgeId> images{w.house};
    for (const auto& p : w.paths)
      for (auto e : p.phi) check(images.insert(e).second, step, "the map is not injective");
    auto conf = weak_conflicts(g, w, step);
    check(conf.size() <= 1, step, "more than one conflict");
    return conf;
  };

  LiftReport rep;
  Weak cur = weak_from_witness(t);
  auto conf = validate(cur);
  while (!conf.empty()) {
    const EdgeId ec = conf.front().edge;
    const auto& he = g.edge(ec);
    check(he.size() >= 4, step, "conflict is not a proper edge");
    check(conf.front().preimage.size() == 1, step, "conflict has several preimages");
    const ERef fc = conf.front().preimage.front();
    auto internal_hits = [&](const WPath& p) {
      std::vector<std::size_t> hits;
      for (std::size_t j = 1; j + 1 < p.v.size(); ++j)
        if (he.contains(p.v[j])) hits.push_back(j);
      return hits;
    };

    Weak next = cur;
    if (fc.path < 0) {
      std::optional<std::size_t> pick;
      for (std::size_t i = 0; i < 3 && !pick; ++i)
        if (!internal_hits(cur.paths[i]).empty()) pick = i;
      check(pick.has_value(), step, "case 1 without an internal vertex in the conflict");
      const auto s = internal_hits(cur.paths[*pick]).front();
      const auto first = slice(cur.paths[*pick], 0, s);
      parity_closed(host, first, ec, step + " case 1");
      next.paths[*pick] = first;
      next.house = ec;
      rep.steps.push_back("case 1");
    } else {
      const auto k = static_cast<std::size_t>(fc.path);
      const auto& p = cur.paths[k];
      const auto hits = internal_hits(p);
      check(hits.size() >= 2, step, "the conflict edge meets its own path less than twice");
      const auto s = hits.front();
      const auto tt = hits.back();
      const auto n = p.len();
      if (hits.size() >= 3) {
        check(s + 2 <= tt, step, "case 2 indices");
        const auto first = slice(p, 0, s);
        const auto last = slice(p, n, tt);
        parity_closed(host, first, last, cur.house, ec, step + " case 2");
        WPath np = first;
        np.v.insert(np.v.end(), p.v.begin() + static_cast<std::ptrdiff_t>(tt), p.v.end());
        np.phi.push_back(ec);
        np.phi.insert(np.phi.end(), p.phi.begin() + static_cast<std::ptrdiff_t>(tt), p.phi.end());
        next.paths[k] = std::move(np);
        rep.steps.push_back("case 2");
      } else {
        std::optional<std::size_t> other;
        for (std::size_t i = 0; i < 3 && !other; ++i)
          if (i != k && !internal_hits(cur.paths[i]).empty()) other = i;
        check(other.has_value(), step, "case 3 conflict meets no other path");
        const auto s2 = internal_hits(cur.paths[*other]).front();
        const auto f1 = slice(p, 0, s);
        const auto f2 = slice(cur.paths[*other], 0, s2);
        const auto l1 = slice(p, n, tt);
        parity_closed(host, join(slice(p, s, 0), f2), ec, step + " case 3");
        parity_closed(host, l1, f2, cur.house, ec, step + " case 3");
        fail(step + " case 3", "forced parities make an odd path even");
      }
    }
    check(next.num_edges() < cur.num_edges(), step, "the tree house did not shrink");
    conf = validate(next);
    cur = std::move(next);
  }
  rep.witness = weak_to_witness(cur);
  check(verify_witness(g, rep.witness), step, "lifted tree house fails verification");
  return rep;
}

namespace {

// R1 to R4; returns the conflicts.
std::vector<WConflict> check_candidate(const Hypergraph& g, const Weak& w, const std::string& step) {
  check_spider(w, step + " R1");
  auto conf = weak_conflicts(g, w, step + " R2");
  for (const auto& c : conf) {
    const auto& e = g.edge(c.edge);
    check(e.size() >= 4 && c.edge != w.house, step, "conflict at the house image or at a size-2 edge");
    check(meet(e, w.paths[1].vertex_set()).empty() || meet(e, w.paths[2].vertex_set()).empty(), step + " R3",
          "conflict " + g.edge_name(c.edge) + " meets both of the last two paths");
    for (const auto& p : w.paths) {
      const auto m = meet(e, p.vertex_set());
      check(m.size() <= 2, step + " R4", "conflict meets a path three times");
      if (m.size() == 2) {
        bool ok = false;
        for (std::size_t j = 0; j < p.len(); ++j)
          ok = ok || (VSet{p.v[j], p.v[j + 1]} == m && p.phi[j] == c.edge);
        check(ok, step + " R4", "conflict meets a path in two vertices that are not a mapped edge");
      }
    }
  }
  return conf;
}

// Prefix of a up to index sa, the crossing edge mapped to g, then the suffix of b from tb,
// shortcut at the first vertex of the prefix already on the suffix.
WPath cross(const WPath& a, std::size_t sa, const WPath& b, std::size_t tb, EdgeId g) {
  const VSet tail(b.v.begin() + static_cast<std::ptrdiff_t>(tb), b.v.end());
  for (std::size_t x = 0; x <= sa; ++x) {
    if (!tail.contains(a.v[x])) continue;
    const auto y = *position(b, a.v[x]);
    WPath out = slice(a, 0, x);
    out.v.insert(out.v.end(), b.v.begin() + static_cast<std::ptrdiff_t>(y) + 1, b.v.end());
    out.phi.insert(out.phi.end(), b.phi.begin() + static_cast<std::ptrdiff_t>(y), b.phi.end());
    return out;
  }
  WPath out = slice(a, 0, sa);
  out.v.insert(out.v.end(), b.v.begin() + static_cast<std::ptrdiff_t>(tb), b.v.end());
  out.phi.push_back(g);
  out.phi.insert(out.phi.end(), b.phi.begin() + static_cast<std::ptrdiff_t>(tb), b.phi.end());
  return out;
}

}  // namespace

LiftReport lift_odd_cycle(const ReducedPair& rp, const Witness& k, const SearchLimits& limits) {
  const std::string step = "odd-cycle lifting";
  check(k.is_cycle() && k.cycle().length() % 2 == 1, step, "input is not an odd cycle");
  check(verify_witness(rp.reduced(), k), step, "input cycle fails verification in the reduced hypergraph");
  check(!rp.conflict_free, step, "reduction is conflict-free");
  const auto& g = *rp.core;
  const auto& h = rp.reduced();
  const auto g_star = rp.cycle.g_star;
  const auto host = odd_cycle_free(rp.core, limits, step);
  LiftReport rep;

  // Shortest odd cycle, then most proper images, then smallest sorted edge ids.
  using Key = std::tuple<std::size_t, std::ptrdiff_t, std::vector<EdgeId>, std::vector<VertexId>>;
  std::optional<std::pair<Key, CycleData>> best;
  search::for_each_cycle(search::SignedIncidence(h), limits, [&](const CycleData& c, int parity) {
    if (parity % 2 == 0) return true;
    std::ptrdiff_t proper = 0;
    for (auto e : c.edges)
      if (g.edge(e).size() >= 4) ++proper;
    auto es = c.edges;
    auto vs = c.vertices;
    std::sort(es.begin(), es.end());
    std::sort(vs.begin(), vs.end());
    Key key{c.length(), -proper, std::move(es), std::move(vs)};
    if (!best || key < best->first) best = std::pair{std::move(key), c};
    return true;
  });
  check(best.has_value(), step, "no odd cycle in the reduced hypergraph");
  const auto kc = best->second;
  const auto n = kc.length();
  rep.steps.push_back("shortest odd cycle of length " + std::to_string(n));

  const auto j = static_cast<std::size_t>(std::find(kc.edges.begin(), kc.edges.end(), g_star) - kc.edges.begin());
  check(j < n, step, "the chosen odd cycle avoids g* and would be an odd cycle of the core");
  const VSet uc(rp.cycle.cycle.vertices.begin(), rp.cycle.cycle.vertices.end());
  const VSet uk(kc.vertices.begin(), kc.vertices.end());
  const auto& ge = g.edge(g_star);
  VSet expected;
  VSet common;
  for (auto v : ge.vertices) {
    if (!uc.contains(v) && uk.contains(v)) expected.insert(v);
    if (uc.contains(v) && uk.contains(v)) common.insert(v);
  }
  check(VSet{kc.vertices[j], kc.vertices[(j + 1) % n]} == expected, step + " three-vertex lemma",
        "the g* edge of the cycle is not (g* - U_C) & U_K");
  check(common.size() == 1, step + " three-vertex lemma", "g* meets both cycles in " + std::to_string(common.size()) +
                                                              " vertices");
  const auto r = *common.begin();

  Weak w;
  w.house = g_star;
  {
    const auto& cc = rp.cycle.cycle;
    WPath p1{cc.vertices, {cc.edges.begin(), cc.edges.end() - 1}};
    if (p1.v.front() != r) {
      check(p1.v.back() == r, step, "root is not an end of the even cycle path");
      p1 = slice(p1, p1.len(), 0);
    }
    w.paths[0] = std::move(p1);
  }
  {
    WPath seq;
    for (std::size_t t = 0; t < n; ++t) {
      seq.v.push_back(kc.vertices[(j + 1 + t) % n]);
      if (t + 1 < n) seq.phi.push_back(kc.edges[(j + 1 + t) % n]);
    }
    const auto p = position(seq, r);
    check(p.has_value(), step, "root is not on the odd cycle");
    std::array<WPath, 2> rest{slice(seq, *p, 0), slice(seq, *p, n - 1)};
    canonicalize(rest);
    w.paths[1] = std::move(rest[0]);
    w.paths[2] = std::move(rest[1]);
  }
  check(w.house_set() == meet(ge, w.vertices()), step, "the house is not g* & V(W)");

  auto conf = check_candidate(g, w, step);
  while (!conf.empty()) {
    std::map<VertexId, EdgeId> in_conflict;
    for (const auto& c : conf)
      for (auto v : g.edge(c.edge).vertices) in_conflict[v] = c.edge;
    auto first_hit = [&](const WPath& p) -> std::optional<std::size_t> {
      for (std::size_t i = 1; i + 1 < p.v.size(); ++i)
        if (in_conflict.contains(p.v[i])) return i;
      return std::nullopt;
    };
    auto last_in = [&](const WPath& p, EdgeId e) -> std::optional<std::size_t> {
      for (std::size_t i = p.v.size() - 1; i-- > 1;)
        if (g.edge(e).contains(p.v[i])) return i;
      return std::nullopt;
    };

    const auto s1 = first_hit(w.paths[0]);
    check(s1.has_value(), step + " crossover", "no conflict meets the first path");
    const auto g1 = in_conflict[w.paths[0].v[*s1]];
    if (meet(g.edge(g1), w.paths[1].vertex_set()).empty()) {
      std::swap(w.paths[1], w.paths[2]);
      rep.steps.push_back("swap");
    }
    const auto t1 = last_in(w.paths[1], g1);
    check(t1.has_value(), step + " crossover", "the first conflict meets neither of the last two paths");
    const auto s2 = first_hit(w.paths[1]);
    check(s2.has_value() && *s2 <= *t1, step + " crossover", "second crossing index");
    const auto g2 = in_conflict[w.paths[1].v[*s2]];
    const auto t2 = last_in(w.paths[0], g2);
    check(t2.has_value(), step + " crossover", "the second conflict misses the first path");
    check(g1 != g2, step + " crossover", "both crossings use one conflict");
    check(*s1 < *t2 && *s2 < *t1, step + " crossover", "crossing indices are not increasing");
    check(*s1 + 1 < *t2 || *s2 + 1 < *t1, step + " crossover", "crossing removes fewer than three edges");

    Weak next;
    next.house = w.house;
    next.paths[0] = cross(w.paths[1], *s2, w.paths[0], *t2, g2);
    next.paths[1] = cross(w.paths[0], *s1, w.paths[1], *t1, g1);
    next.paths[2] = w.paths[2];
    check(next.num_edges() < w.num_edges(), step + " crossover", "the candidate did not shrink");
    conf = check_candidate(g, next, step + " crossover");
    w = std::move(next);
    rep.steps.push_back("crossover");
  }

  for (const auto& p : w.paths) parity_closed(host, p, w.house, step + " final paths");
  check_odd_tree_house(w, step);
  rep.witness = weak_to_witness(w);
  check(verify_witness(g, rep.witness), step, "lifted tree house fails verification");
  return rep;
}

// ------------------------------------------------------------------ induction

namespace {

Json cycle_json(const CycleData& c, const Symbols& sym) {
  Json vs = Json::array();
  Json es = Json::array();
  for (auto v : c.vertices) vs.push_back(sym.vertex_name(v));
  for (auto e : c.edges) es.push_back(raw(e));
  return Json{{"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

SubSelection full_selection(const Hypergraph& g) {
  SubSelection s{g.vertices(), {}};
  for (const auto& e : g.edges()) s.edges.push_back(e.id);
  return s;
}

}  // namespace

Extraction extract_with_trace(const Hypergraph& g, const ExtractLimits& limits) {
  const std::string step = "induction";
  require_disjoint(g);
  const auto& sym = *g.symbols();
  auto cur = std::make_shared<const Hypergraph>(g);
  std::vector<ReducedPair> frames;
  std::optional<Witness> base;
  Json levels = Json::array();
  std::size_t last_support = support_of(g) + 1;

  for (std::size_t level = 0; !base; ++level) {
    auto core = find_eulerian_core(*cur, limits.linalg, limits.core_order);
    check(core.support() < last_support, step, "support did not decrease");
    Json lvl{{"level", level}, {"core", to_json(full_selection(*core.graph), sym)}, {"support", core.support()}};
    auto forest = enforce_forest(core, limits.linalg, limits.core_order);
    core = forest.core;
    last_support = core.support();
    lvl["forest_cycles_removed"] = forest.cycles_removed;
    if (forest.cycles_removed > 0) lvl["forest_core"] = to_json(full_selection(*core.graph), sym);
    if (forest.witness) {
      base = std::move(forest.witness);
      lvl["result"] = "odd cycle of size-2 edges";
    } else if (auto oc = find_odd_cycle(*core.graph, limits.search)) {
      base = std::move(oc);
      lvl["result"] = "odd cycle";
    } else {
      auto nc = almost_nice_cycle(core);
      auto rp = reduce_by_cycle(core, nc);
      lvl["nice_cycle"] = cycle_json(nc.cycle, sym);
      lvl["g_star"] = raw(nc.g_star);
      lvl["branch"] = nc.crossable ? "crossable pair" : "matching edge";
      lvl["reduced_support"] = support_of(rp.reduced());
      lvl["conflict_free"] = rp.conflict_free;
      cur = std::make_shared<const Hypergraph>(rp.reduced());
      frames.push_back(std::move(rp));
    }
    levels.push_back(std::move(lvl));
  }

  Witness w = *base;
  Json lifts = Json::array();
  for (std::size_t i = frames.size(); i-- > 0;) {
    const auto& rp = frames[i];
    check(verify_witness(rp.reduced(), w), step, "witness does not transfer to the reduced hypergraph");
    Json lj{{"level", i}};
    if (rp.conflict_free) {
      lj["method"] = "partial subhypergraph";
    } else {
      auto lifted = w.is_cycle() ? lift_odd_cycle(rp, w, limits.search) : lift_tree_house(rp, w, limits.search);
      lj["method"] = w.is_cycle() ? "odd cycle to tree house" : "tree house";
      lj["steps"] = lifted.steps;
      w = std::move(lifted.witness);
    }
    check(verify_witness(*rp.core, w), step, "lifted witness fails verification in the core");
    lifts.push_back(std::move(lj));
  }
  check(verify_witness(g, w), step, "final witness fails verification in the input");
  Json trace{{"levels", std::move(levels)},
             {"base", to_string(base->kind)},
             {"lifts", std::move(lifts)},
             {"witness", to_json(w, sym)}};
  return Extraction{std::move(w), std::move(trace)};
}

Witness extract_witness(const Hypergraph& g, const ExtractLimits& limits) {
  return extract_with_trace(g, limits).witness;
}

}  // namespace tuhyper
