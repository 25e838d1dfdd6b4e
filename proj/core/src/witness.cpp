#include "tuhyper/witness.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tuhyper/error.hpp"

namespace tuhyper {

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::OddCycle: return "OddCycle";
    case WitnessKind::OddTreeHouse: return "OddTreeHouse";
    case WitnessKind::MixedOddCycle: return "MixedOddCycle";
    case WitnessKind::MixedOddTreeHouse: return "MixedOddTreeHouse";
  }
  return "?";
}

WitnessKind witness_kind_from_string(const std::string& s) {
  for (auto k : {WitnessKind::OddCycle, WitnessKind::OddTreeHouse, WitnessKind::MixedOddCycle,
                 WitnessKind::MixedOddTreeHouse})
    if (to_string(k) == s) return k;
  throw InvalidInput("unknown witness kind '" + s + "'");
}

SubSelection Witness::selection() const {
  std::set<VertexId> u;
  std::set<EdgeId> f;
  if (is_cycle()) {
    u.insert(cycle().vertices.begin(), cycle().vertices.end());
    f.insert(cycle().edges.begin(), cycle().edges.end());
  } else {
    const auto& t = tree_house();
    f.insert(t.house);
    for (const auto& p : t.paths) {
      u.insert(p.vertices.begin(), p.vertices.end());
      f.insert(p.edges.begin(), p.edges.end());
    }
  }
  return {{u.begin(), u.end()}, {f.begin(), f.end()}};
}

std::size_t Witness::num_edges() const {
  if (is_cycle()) return cycle().edges.size();
  const auto& t = tree_house();
  return 1 + t.paths[0].edges.size() + t.paths[1].edges.size() + t.paths[2].edges.size();
}

Witness make_cycle_witness(WitnessKind kind, std::vector<VertexId> vertices, std::vector<EdgeId> edges) {
  return Witness{kind, CycleData{std::move(vertices), std::move(edges)}};
}

namespace {

bool is_cycle_kind(WitnessKind k) { return k == WitnessKind::OddCycle || k == WitnessKind::MixedOddCycle; }
bool is_mixed_kind(WitnessKind k) { return k == WitnessKind::MixedOddCycle || k == WitnessKind::MixedOddTreeHouse; }

// Host access shared by both host types: membership sign of v in edge e (0 if absent).
struct HostView {
  std::function<bool(VertexId)> has_vertex;
  std::function<bool(EdgeId)> has_edge;
  std::function<int(EdgeId, VertexId)> sign;
  std::function<std::vector<VertexId>(EdgeId)> support;
  std::function<std::string(EdgeId)> edge_name;
};

// Parity of edge e restricted to {a, b}: 1 if both signs agree.
int pair_parity(const HostView& h, EdgeId e, VertexId a, VertexId b) { return h.sign(e, a) == h.sign(e, b) ? 1 : 0; }

// e & U must equal `expect` exactly.
std::optional<std::string> check_restriction(const HostView& h, EdgeId e, const std::set<VertexId>& u,
                                             std::set<VertexId> expect) {
  std::set<VertexId> got;
  for (auto v : h.support(e))
    if (u.contains(v)) got.insert(v);
  if (got != expect) return "edge " + h.edge_name(e) + " does not restrict to its designated vertices";
  return std::nullopt;
}

std::optional<std::string> cycle_defect(const HostView& h, const CycleData& c) {
  const auto k = c.vertices.size();
  if (k < 2 || c.edges.size() != k) return "cycle needs k >= 2 vertices and exactly k edges";
  std::set<VertexId> u;
  for (auto v : c.vertices) {
    if (!h.has_vertex(v)) return "cycle vertex not in host";
    if (!u.insert(v).second) return "cycle repeats a vertex";
  }
  std::set<EdgeId> f;
  for (auto e : c.edges) {
    if (!h.has_edge(e)) return "cycle edge not in host";
    if (!f.insert(e).second) return "cycle repeats an edge";
  }
  int parity = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto a = c.vertices[i];
    const auto b = c.vertices[(i + 1) % k];
    if (auto d = check_restriction(h, c.edges[i], u, {a, b})) return d;
    parity += pair_parity(h, c.edges[i], a, b);
  }
  if (parity % 2 == 0) return "cycle parity is even";
  return std::nullopt;
}

std::optional<std::string> tree_house_defect(const HostView& h, const TreeHouseData& t) {
  std::set<VertexId> u{t.root};
  if (!h.has_vertex(t.root)) return "root not in host";
  std::set<EdgeId> f{t.house};
  if (!h.has_edge(t.house)) return "house edge not in host";
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& p = t.paths[i];
    if (p.vertices.size() < 2 || p.edges.size() + 1 != p.vertices.size())
      return "path " + std::to_string(i + 1) + " is malformed";
    if (p.vertices.front() != t.root || p.vertices.back() != t.leaves[i])
      return "path " + std::to_string(i + 1) + " does not join the root to its leaf";
    for (std::size_t j = 1; j < p.vertices.size(); ++j) {
      if (!h.has_vertex(p.vertices[j])) return "path vertex not in host";
      if (!u.insert(p.vertices[j]).second) return "paths are not disjoint apart from the root";
    }
    for (auto e : p.edges) {
      if (!h.has_edge(e)) return "path edge not in host";
      if (!f.insert(e).second) return "an edge is used twice";
    }
  }
  if (auto d = check_restriction(h, t.house, u, {t.root, t.leaves[0], t.leaves[1], t.leaves[2]})) return d;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& p = t.paths[i];
    int parity = pair_parity(h, t.house, t.root, t.leaves[i]);
    for (std::size_t j = 0; j < p.edges.size(); ++j) {
      if (auto d = check_restriction(h, p.edges[j], u, {p.vertices[j], p.vertices[j + 1]})) return d;
      parity += pair_parity(h, p.edges[j], p.vertices[j], p.vertices[j + 1]);
    }
    if (parity % 2 != 0) return "path " + std::to_string(i + 1) + " closes an odd cycle with the house edge";
  }
  return std::nullopt;
}

std::optional<std::string> defect(const HostView& h, const Witness& w) {
  if (is_cycle_kind(w.kind) != w.is_cycle()) return "witness kind does not match its data";
  return w.is_cycle() ? cycle_defect(h, w.cycle()) : tree_house_defect(h, w.tree_house());
}

}  // namespace

std::optional<std::string> witness_defect(const Hypergraph& g, const Witness& w) {
  if (is_mixed_kind(w.kind)) return "mixed witness for a hypergraph host";
  HostView h{[&](VertexId v) { return g.has_vertex(v); }, [&](EdgeId e) { return g.has_edge(e); },
             [&](EdgeId e, VertexId v) { return g.edge(e).contains(v) ? 1 : 0; },
             [&](EdgeId e) { return g.edge(e).vertices; }, [&](EdgeId e) { return g.edge_name(e); }};
  return defect(h, w);
}

std::optional<std::string> witness_defect(const MixedHypergraph& d, const Witness& w) {
  if (!is_mixed_kind(w.kind)) return "non-mixed witness for a mixed host";
  HostView h{[&](VertexId v) { return d.has_vertex(v); }, [&](EdgeId e) { return d.has_arc(e); },
             [&](EdgeId e, VertexId v) { return d.arc(e).sign(v); }, [&](EdgeId e) { return d.arc(e).support(); },
             [&](EdgeId e) { return d.arc_name(e); }};
  return defect(h, w);
}

bool verify_witness(const Hypergraph& g, const Witness& w) { return !witness_defect(g, w).has_value(); }
bool verify_witness(const MixedHypergraph& d, const Witness& w) { return !witness_defect(d, w).has_value(); }

namespace {

Json names(const std::vector<VertexId>& vs, const Symbols& sym) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(sym.vertex_name(v));
  return out;
}

Json ids(const std::vector<EdgeId>& es) {
  Json out = Json::array();
  for (auto e : es) out.push_back(raw(e));
  return out;
}

VertexId vertex_of(const Json& j, const Symbols& sym) {
  if (!j.is_string()) throw InvalidInput("witness vertices must be names");
  auto v = sym.find_vertex(j.get<std::string>());
  if (!v) throw InvalidInput("witness names unknown vertex '" + j.get<std::string>() + "'");
  return *v;
}

std::vector<VertexId> vertices_of(const Json& j, const Symbols& sym) {
  if (!j.is_array()) throw InvalidInput("witness vertex list must be an array");
  std::vector<VertexId> out;
  for (const auto& x : j) out.push_back(vertex_of(x, sym));
  return out;
}

EdgeId edge_of(const Json& j) {
  if (!j.is_number_unsigned()) throw InvalidInput("witness edges must be nonnegative edge ids");
  return eid(j.get<std::uint32_t>());
}

std::vector<EdgeId> edges_of(const Json& j) {
  if (!j.is_array()) throw InvalidInput("witness edge list must be an array");
  std::vector<EdgeId> out;
  for (const auto& x : j) out.push_back(edge_of(x));
  return out;
}

}  // namespace

Json to_json(const Witness& w, const Symbols& sym) {
  Json j{{"kind", to_string(w.kind)}};
  if (w.is_cycle()) {
    j["cycle"] = Json{{"vertices", names(w.cycle().vertices, sym)}, {"edges", ids(w.cycle().edges)}};
    return j;
  }
  const auto& t = w.tree_house();
  j["root"] = sym.vertex_name(t.root);
  j["leaves"] = names({t.leaves.begin(), t.leaves.end()}, sym);
  j["house"] = raw(t.house);
  Json paths = Json::array();
  for (const auto& p : t.paths) paths.push_back(Json{{"vertices", names(p.vertices, sym)}, {"edges", ids(p.edges)}});
  j["paths"] = std::move(paths);
  return j;
}

Witness witness_from_json(const Json& j, const Symbols& sym) {
  if (!j.is_object() || !j.contains("kind")) throw InvalidInput("witness needs a kind");
  Witness w;
  w.kind = witness_kind_from_string(j.at("kind").get<std::string>());
  if (is_cycle_kind(w.kind)) {
    if (!j.contains("cycle")) throw InvalidInput("cycle witness needs \"cycle\"");
    const auto& c = j.at("cycle");
    w.data = CycleData{vertices_of(c.at("vertices"), sym), edges_of(c.at("edges"))};
    return w;
  }
  for (const char* key : {"root", "leaves", "house", "paths"})
    if (!j.contains(key)) throw InvalidInput(std::string("tree-house witness needs \"") + key + "\"");
  TreeHouseData t;
  t.root = vertex_of(j.at("root"), sym);
  const auto leaves = vertices_of(j.at("leaves"), sym);
  const auto& paths = j.at("paths");
  if (leaves.size() != 3 || !paths.is_array() || paths.size() != 3)
    throw InvalidInput("tree-house witness needs three leaves and three paths");
  t.house = edge_of(j.at("house"));
  for (std::size_t i = 0; i < 3; ++i) {
    t.leaves[i] = leaves[i];
    t.paths[i] = PathData{vertices_of(paths[i].at("vertices"), sym), edges_of(paths[i].at("edges"))};
  }
  w.data = std::move(t);
  return w;
}

}  // namespace tuhyper
