#include "tuhyper/io.hpp"

#include <fstream>

#include "tuhyper/error.hpp"

namespace tuhyper {

namespace {

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_string()) throw InvalidInput(std::string(what) + " must contain only strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::vector<std::string> optional_names(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  return string_list(j.at(key), key);
}

Json names_of(const std::vector<VertexId>& vs, const Symbols& sym) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(sym.vertex_name(v));
  return out;
}


Json edge_name_list(const auto& items, const Symbols& sym) {
  Json out = Json::array();
  bool any = false;
  for (const auto& it : items) {
    const auto i = raw(it.id);
    any = any || (i < sym.edge_names.size() && !sym.edge_names[i].empty());
    out.push_back(sym.edge_name(it.id));
  }
  return any ? out : Json();
}

// Dense renumbering is needed when ids are not 0..n-1 in order; names carry identity.
bool dense_ids(const auto& vertices, const auto& items) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (raw(vertices[i]) != i) return false;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (raw(items[i].id) != i) return false;
  return true;
}

}  // namespace

Json to_json(const Hypergraph& g) {
  const auto& sym = *g.symbols();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(names_of(e.vertices, sym));
  Json j{{"vertices", names_of(g.vertices(), sym)}, {"edges", std::move(edges)}};
  if (auto names = edge_name_list(g.edges(), sym); !names.is_null()) j["edge_names"] = std::move(names);
  if (!dense_ids(g.vertices(), g.edges())) {
    Json ids = Json::array();
    for (const auto& e : g.edges()) ids.push_back(raw(e.id));
    j["edge_ids"] = std::move(ids);
  }
  return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw InvalidInput("hypergraph document needs \"vertices\" and \"edges\"");
  auto vertices = string_list(j.at("vertices"), "vertices");
  const auto& je = j.at("edges");
  if (!je.is_array()) throw InvalidInput("edges must be an array");
  std::vector<std::vector<std::string>> edges;
  edges.reserve(je.size());
  for (const auto& e : je) edges.push_back(string_list(e, "edge"));
  auto names = optional_names(j, "edge_names");
  if (!names.empty() && names.size() != edges.size()) throw InvalidInput("edge_names length differs from edges");
  auto g = Hypergraph::from_names(std::move(vertices), edges, std::move(names));
  if (!j.contains("edge_ids")) return g;
  const auto& ji = j.at("edge_ids");
  if (!ji.is_array() || ji.size() != g.num_edges()) throw InvalidInput("edge_ids length differs from edges");
  std::vector<Edge> relabeled = g.edges();
  auto sym = std::make_shared<Symbols>(Symbols{g.symbols()->vertex_names, {}});
  for (std::size_t i = 0; i < relabeled.size(); ++i) {
    if (!ji[i].is_number_unsigned()) throw InvalidInput("edge_ids must be nonnegative integers");
    relabeled[i].id = eid(ji[i].get<std::uint32_t>());
    if (i < g.symbols()->edge_names.size()) {
      const auto id = raw(relabeled[i].id);
      if (sym->edge_names.size() <= id) sym->edge_names.resize(id + 1);
      sym->edge_names[id] = g.symbols()->edge_names[i];
    }
  }
  return Hypergraph(std::move(sym), g.vertices(), std::move(relabeled));
}

Json to_json(const MixedHypergraph& d) {
  const auto& sym = *d.symbols();
  Json arcs = Json::array();
  for (const auto& a : d.arcs()) arcs.push_back(Json{{"plus", names_of(a.plus, sym)}, {"minus", names_of(a.minus, sym)}});
  Json j{{"vertices", names_of(d.vertices(), sym)}, {"arcs", std::move(arcs)}};
  if (auto names = edge_name_list(d.arcs(), sym); !names.is_null()) j["arc_names"] = std::move(names);
  return j;
}

MixedHypergraph mixed_from_json(const Json& j) {
  if (j.is_object() && j.contains("matrix")) return MixedHypergraph::from_matrix(matrix_from_json(j.at("matrix")));
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arcs"))
    throw InvalidInput("mixed hypergraph document needs \"vertices\" and \"arcs\"");
  auto vertices = string_list(j.at("vertices"), "vertices");
  const auto& ja = j.at("arcs");
  if (!ja.is_array()) throw InvalidInput("arcs must be an array");
  std::vector<MixedHypergraph::NamedArc> arcs;
  arcs.reserve(ja.size());
  for (const auto& a : ja) {
    if (!a.is_object()) throw InvalidInput("each arc must be an object with plus/minus lists");
    MixedHypergraph::NamedArc na;
    if (a.contains("plus")) na.plus = string_list(a.at("plus"), "plus");
    if (a.contains("minus")) na.minus = string_list(a.at("minus"), "minus");
    arcs.push_back(std::move(na));
  }
  auto names = optional_names(j, "arc_names");
  if (!names.empty() && names.size() != arcs.size()) throw InvalidInput("arc_names length differs from arcs");
  return MixedHypergraph::from_names(std::move(vertices), arcs, std::move(names));
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("matrix must be an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw InvalidInput("matrix rows must be arrays");
    std::vector<std::int64_t> row;
    for (const auto& x : r) {
      if (!x.is_number_integer()) throw InvalidInput("matrix entries must be integers");
      row.push_back(x.get<std::int64_t>());
    }
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

Json to_json(const SubSelection& sel, const Symbols& sym) {
  Json edges = Json::array();
  for (auto e : sel.edges) edges.push_back(raw(e));
  return Json{{"vertices", names_of(sel.vertices, sym)}, {"edges", std::move(edges)}};
}

SubSelection selection_from_json(const Json& j, const Symbols& sym) {
  try {
    SubSelection sel;
    for (const auto& name : j.at("vertices")) {
      const auto v = sym.find_vertex(name.get<std::string>());
      if (!v) throw InvalidInput("selection names unknown vertex '" + name.get<std::string>() + "'");
      sel.vertices.push_back(*v);
    }
    for (const auto& e : j.at("edges")) sel.edges.push_back(eid(e.get<std::uint32_t>()));
    return sel;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("selection: ") + e.what());
  }
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("instance document must be a JSON object");
  if (j.contains("arcs") || j.contains("matrix")) return mixed_from_json(j);
  return hypergraph_from_json(j);
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

Instance load_instance(const std::filesystem::path& path) { return instance_from_json(read_json_file(path)); }

}  // namespace tuhyper
