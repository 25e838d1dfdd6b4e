#include "tuhyper/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tuhyper/error.hpp"

namespace tuhyper {

std::string Symbols::vertex_name(VertexId v) const {
  const auto i = raw(v);
  return i < vertex_names.size() ? vertex_names[i] : "v#" + std::to_string(i);
}

std::string Symbols::edge_name(EdgeId e) const {
  const auto i = raw(e);
  if (i < edge_names.size() && !edge_names[i].empty()) return edge_names[i];
  return "#" + std::to_string(i);
}

std::optional<VertexId> Symbols::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertex_names.size(); ++i)
    if (vertex_names[i] == name) return vid(static_cast<std::uint32_t>(i));
  return std::nullopt;
}

bool Edge::contains(VertexId v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

std::vector<VertexId> Arc::support() const {
  std::vector<VertexId> s;
  s.reserve(size());
  std::merge(plus.begin(), plus.end(), minus.begin(), minus.end(), std::back_inserter(s));
  return s;
}

int Arc::sign(VertexId v) const {
  if (std::binary_search(plus.begin(), plus.end(), v)) return 1;
  if (std::binary_search(minus.begin(), minus.end(), v)) return -1;
  return 0;
}

namespace detail {

void IdIndex::assign(std::uint32_t id, std::size_t pos) {
  if (id >= pos_.size()) pos_.resize(id + 1, -1);
  pos_[id] = static_cast<std::int32_t>(pos);
}

std::optional<std::size_t> IdIndex::find(std::uint32_t id) const noexcept {
  if (id >= pos_.size() || pos_[id] < 0) return std::nullopt;
  return static_cast<std::size_t>(pos_[id]);
}

}  // namespace detail

namespace {

void sort_unique_check(std::vector<VertexId>& vs, const char* what) {
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw InvalidInput(std::string("repeated vertex in ") + what);
}

detail::IdIndex index_vertices(const std::vector<VertexId>& vertices, const Symbols& sym) {
  detail::IdIndex idx;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto v = raw(vertices[i]);
    if (v >= sym.vertex_names.size()) throw InvalidInput("vertex id " + std::to_string(v) + " has no symbol");
    if (idx.contains(v)) throw InvalidInput("duplicate vertex " + sym.vertex_name(vertices[i]));
    idx.assign(v, i);
  }
  return idx;
}

std::shared_ptr<const Symbols> default_symbols(std::size_t n) {
  auto sym = std::make_shared<Symbols>();
  sym->vertex_names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) sym->vertex_names.push_back("v" + std::to_string(i));
  return sym;
}

std::vector<VertexId> sequential_vertices(std::size_t n) {
  std::vector<VertexId> vs(n);
  for (std::size_t i = 0; i < n; ++i) vs[i] = vid(static_cast<std::uint32_t>(i));
  return vs;
}

std::map<std::string, VertexId> name_lookup(const std::vector<std::string>& names) {
  std::map<std::string, VertexId> lookup;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!lookup.emplace(names[i], vid(static_cast<std::uint32_t>(i))).second)
      throw InvalidInput("duplicate vertex name '" + names[i] + "'");
  return lookup;
}

VertexId resolve(const std::map<std::string, VertexId>& lookup, const std::string& name) {
  auto it = lookup.find(name);
  if (it == lookup.end()) throw InvalidInput("unknown vertex '" + name + "'");
  return it->second;
}

}  // namespace

Hypergraph::Hypergraph() : symbols_(std::make_shared<Symbols>()) {}

Hypergraph::Hypergraph(std::shared_ptr<const Symbols> symbols, std::vector<VertexId> vertices, std::vector<Edge> edges)
    : symbols_(std::move(symbols)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (!symbols_) throw InvalidInput("missing symbol table");
  vpos_ = index_vertices(vertices_, *symbols_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.vertices.empty()) throw InvalidInput("empty hyperedge " + symbols_->edge_name(e.id));
    sort_unique_check(e.vertices, "hyperedge");
    for (auto v : e.vertices)
      if (!vpos_.contains(raw(v)))
        throw InvalidInput("hyperedge " + symbols_->edge_name(e.id) + " uses a vertex outside the vertex set");
    if (epos_.contains(raw(e.id))) throw InvalidInput("duplicate edge id " + std::to_string(raw(e.id)));
    epos_.assign(raw(e.id), i);
  }
}

Hypergraph Hypergraph::from_names(std::vector<std::string> vertex_names,
                                  const std::vector<std::vector<std::string>>& edges,
                                  std::vector<std::string> edge_names) {
  const auto lookup = name_lookup(vertex_names);
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge e{eid(static_cast<std::uint32_t>(i)), {}};
    for (const auto& n : edges[i]) e.vertices.push_back(resolve(lookup, n));
    es.push_back(std::move(e));
  }
  const auto n = vertex_names.size();
  auto sym = std::make_shared<Symbols>(Symbols{std::move(vertex_names), std::move(edge_names)});
  return Hypergraph(std::move(sym), sequential_vertices(n), std::move(es));
}

Hypergraph Hypergraph::from_indices(std::size_t n, const std::vector<std::vector<std::uint32_t>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge e{eid(static_cast<std::uint32_t>(i)), {}};
    for (auto v : edges[i]) e.vertices.push_back(vid(v));
    es.push_back(std::move(e));
  }
  return Hypergraph(default_symbols(n), sequential_vertices(n), std::move(es));
}

std::size_t Hypergraph::vertex_position(VertexId v) const {
  auto p = vpos_.find(raw(v));
  if (!p) throw InvalidInput("vertex " + vertex_name(v) + " not in hypergraph");
  return *p;
}

std::size_t Hypergraph::edge_position(EdgeId e) const {
  auto p = epos_.find(raw(e));
  if (!p) throw InvalidInput("edge " + edge_name(e) + " not in hypergraph");
  return *p;
}

std::vector<EdgeId> Hypergraph::incident_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (const auto& e : edges_)
    if (e.contains(v)) out.push_back(e.id);
  return out;
}

std::size_t Hypergraph::degree(VertexId v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.contains(v); }));
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i)
    if (a.edges_[i].id != b.edges_[i].id || a.edges_[i].vertices != b.edges_[i].vertices) return false;
  return true;
}

MixedHypergraph::MixedHypergraph() : symbols_(std::make_shared<Symbols>()) {}

MixedHypergraph::MixedHypergraph(std::shared_ptr<const Symbols> symbols, std::vector<VertexId> vertices,
                                 std::vector<Arc> arcs)
    : symbols_(std::move(symbols)), vertices_(std::move(vertices)), arcs_(std::move(arcs)) {
  if (!symbols_) throw InvalidInput("missing symbol table");
  vpos_ = index_vertices(vertices_, *symbols_);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    auto& a = arcs_[i];
    if (a.plus.empty() && a.minus.empty()) throw InvalidInput("empty hyperarc " + symbols_->edge_name(a.id));
    sort_unique_check(a.plus, "hyperarc head set");
    sort_unique_check(a.minus, "hyperarc tail set");
    const auto sup = a.support();
    if (std::adjacent_find(sup.begin(), sup.end()) != sup.end())
      throw InvalidInput("hyperarc " + symbols_->edge_name(a.id) + " has overlapping head and tail sets");
    for (auto v : sup)
      if (!vpos_.contains(raw(v)))
        throw InvalidInput("hyperarc " + symbols_->edge_name(a.id) + " uses a vertex outside the vertex set");
    if (apos_.contains(raw(a.id))) throw InvalidInput("duplicate arc id " + std::to_string(raw(a.id)));
    apos_.assign(raw(a.id), i);
  }
}

MixedHypergraph MixedHypergraph::from_names(std::vector<std::string> vertex_names, const std::vector<NamedArc>& arcs,
                                            std::vector<std::string> arc_names) {
  const auto lookup = name_lookup(vertex_names);
  std::vector<Arc> as;
  as.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    Arc a{eid(static_cast<std::uint32_t>(i)), {}, {}};
    for (const auto& n : arcs[i].plus) a.plus.push_back(resolve(lookup, n));
    for (const auto& n : arcs[i].minus) a.minus.push_back(resolve(lookup, n));
    as.push_back(std::move(a));
  }
  const auto n = vertex_names.size();
  auto sym = std::make_shared<Symbols>(Symbols{std::move(vertex_names), std::move(arc_names)});
  return MixedHypergraph(std::move(sym), sequential_vertices(n), std::move(as));
}

MixedHypergraph MixedHypergraph::from_signed(std::size_t n, const std::vector<std::vector<int>>& arcs) {
  std::vector<Arc> as;
  as.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    Arc a{eid(static_cast<std::uint32_t>(i)), {}, {}};
    for (int s : arcs[i]) {
      if (s == 0) throw InvalidInput("signed index 0 is not allowed");
      (s > 0 ? a.plus : a.minus).push_back(vid(static_cast<std::uint32_t>(std::abs(s) - 1)));
    }
    as.push_back(std::move(a));
  }
  return MixedHypergraph(default_symbols(n), sequential_vertices(n), std::move(as));
}

MixedHypergraph MixedHypergraph::from_matrix(const IntMatrix& m) {
  std::vector<Arc> as;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Arc a{eid(static_cast<std::uint32_t>(c)), {}, {}};
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const auto x = m(r, c);
      if (x == 1) a.plus.push_back(vid(static_cast<std::uint32_t>(r)));
      else if (x == -1) a.minus.push_back(vid(static_cast<std::uint32_t>(r)));
      else if (x != 0) throw InvalidInput("matrix entry outside {0, +1, -1}");
    }
    as.push_back(std::move(a));
  }
  return MixedHypergraph(default_symbols(m.rows()), sequential_vertices(m.rows()), std::move(as));
}

std::size_t MixedHypergraph::vertex_position(VertexId v) const {
  auto p = vpos_.find(raw(v));
  if (!p) throw InvalidInput("vertex " + vertex_name(v) + " not in mixed hypergraph");
  return *p;
}

std::size_t MixedHypergraph::arc_position(ArcId a) const {
  auto p = apos_.find(raw(a));
  if (!p) throw InvalidInput("arc " + arc_name(a) + " not in mixed hypergraph");
  return *p;
}

Hypergraph MixedHypergraph::underlying() const {
  std::vector<Edge> es;
  es.reserve(arcs_.size());
  for (const auto& a : arcs_) es.push_back(Edge{a.id, a.support()});
  return Hypergraph(symbols_, vertices_, std::move(es));
}

bool MixedHypergraph::is_unsigned() const {
  return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.minus.empty(); });
}

MixedHypergraph MixedHypergraph::from_hypergraph(const Hypergraph& g) {
  std::vector<Arc> as;
  as.reserve(g.num_edges());
  for (const auto& e : g.edges()) as.push_back(Arc{e.id, e.vertices, {}});
  return MixedHypergraph(g.symbols(), g.vertices(), std::move(as));
}

bool operator==(const MixedHypergraph& a, const MixedHypergraph& b) {
  if (a.vertices_ != b.vertices_ || a.arcs_.size() != b.arcs_.size()) return false;
  for (std::size_t i = 0; i < a.arcs_.size(); ++i) {
    const auto& x = a.arcs_[i];
    const auto& y = b.arcs_[i];
    if (x.id != y.id || x.plus != y.plus || x.minus != y.minus) return false;
  }
  return true;
}

IntMatrix incidence_matrix(const Hypergraph& g) {
  IntMatrix m(g.num_vertices(), g.num_edges());
  for (std::size_t c = 0; c < g.num_edges(); ++c)
    for (auto v : g.edges()[c].vertices) m(g.vertex_position(v), c) = 1;
  return m;
}

IntMatrix incidence_matrix(const MixedHypergraph& d) {
  IntMatrix m(d.num_vertices(), d.num_arcs());
  for (std::size_t c = 0; c < d.num_arcs(); ++c) {
    for (auto v : d.arcs()[c].plus) m(d.vertex_position(v), c) = 1;
    for (auto v : d.arcs()[c].minus) m(d.vertex_position(v), c) = -1;
  }
  return m;
}

namespace {

std::set<VertexId> checked_vertex_set(const std::vector<VertexId>& vs, auto&& has_vertex) {
  std::set<VertexId> u;
  for (auto v : vs) {
    if (!has_vertex(v)) throw InvalidInput("selection vertex " + std::to_string(raw(v)) + " not in host");
    u.insert(v);
  }
  return u;
}

std::set<EdgeId> checked_edge_set(const std::vector<EdgeId>& es, auto&& has_edge) {
  std::set<EdgeId> f;
  for (auto e : es) {
    if (!has_edge(e)) throw InvalidInput("selection edge " + std::to_string(raw(e)) + " not in host");
    f.insert(e);
  }
  return f;
}

std::vector<VertexId> restrict_to(const std::vector<VertexId>& vs, const std::set<VertexId>& u) {
  std::vector<VertexId> out;
  for (auto v : vs)
    if (u.contains(v)) out.push_back(v);
  return out;
}

}  // namespace

Hypergraph induce(const Hypergraph& g, const SubSelection& sel) {
  const auto u = checked_vertex_set(sel.vertices, [&](VertexId v) { return g.has_vertex(v); });
  const auto f = checked_edge_set(sel.edges, [&](EdgeId e) { return g.has_edge(e); });
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    if (!f.contains(e.id)) continue;
    auto vs = restrict_to(e.vertices, u);
    if (!vs.empty()) es.push_back(Edge{e.id, std::move(vs)});
  }
  return Hypergraph(g.symbols(), restrict_to(g.vertices(), u), std::move(es));
}

MixedHypergraph induce(const MixedHypergraph& d, const SubSelection& sel) {
  const auto u = checked_vertex_set(sel.vertices, [&](VertexId v) { return d.has_vertex(v); });
  const auto f = checked_edge_set(sel.edges, [&](EdgeId e) { return d.has_arc(e); });
  std::vector<Arc> as;
  for (const auto& a : d.arcs()) {
    if (!f.contains(a.id)) continue;
    Arc r{a.id, restrict_to(a.plus, u), restrict_to(a.minus, u)};
    if (r.size() > 0) as.push_back(std::move(r));
  }
  return MixedHypergraph(d.symbols(), restrict_to(d.vertices(), u), std::move(as));
}

namespace {

template <class Items, class SupportOf>
std::optional<std::pair<EdgeId, EdgeId>> overlap_impl(const Items& items, SupportOf&& support_of) {
  std::map<VertexId, EdgeId> owner;
  for (const auto& it : items) {
    const auto sup = support_of(it);
    if (sup.size() < 4) continue;
    for (auto v : sup) {
      auto [pos, fresh] = owner.emplace(v, it.id);
      if (!fresh) return std::pair{pos->second, it.id};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<EdgeId, EdgeId>> first_overlap(const Hypergraph& g) {
  return overlap_impl(g.edges(), [](const Edge& e) -> const std::vector<VertexId>& { return e.vertices; });
}

bool is_disjoint(const Hypergraph& g) { return !first_overlap(g).has_value(); }

bool is_disjoint(const MixedHypergraph& d) {
  return !overlap_impl(d.arcs(), [](const Arc& a) { return a.support(); }).has_value();
}

void require_disjoint(const Hypergraph& g) {
  if (auto o = first_overlap(g))
    throw NotDisjoint(o->first, o->second,
                      "not disjoint: proper edges " + g.edge_name(o->first) + " and " + g.edge_name(o->second) +
                          " share a vertex");
}

void require_disjoint(const MixedHypergraph& d) {
  if (auto o = overlap_impl(d.arcs(), [](const Arc& a) { return a.support(); }))
    throw NotDisjoint(o->first, o->second,
                      "not disjoint: proper arcs " + d.arc_name(o->first) + " and " + d.arc_name(o->second) +
                          " share a vertex");
}

namespace {

bool eulerian_matrix(const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t n = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) n += m(r, c) != 0 ? 1 : 0;
    if (n % 2 != 0) return false;
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t n = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) n += m(r, c) != 0 ? 1 : 0;
    if (n % 2 != 0) return false;
  }
  return true;
}

}  // namespace

bool is_eulerian(const Hypergraph& g) { return eulerian_matrix(incidence_matrix(g)); }
bool is_eulerian(const MixedHypergraph& d) { return eulerian_matrix(incidence_matrix(d)); }

bool is_graph(const Hypergraph& g) {
  return std::all_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.size() == 2; });
}

}  // namespace tuhyper
