#include "tuhyper/fixtures.hpp"

#include <algorithm>

#include "tuhyper/error.hpp"

namespace tuhyper::fixtures {

namespace {

using Named = MixedHypergraph::NamedArc;

// Sub on the host's symbols; sub edge i is edges[i] with id i, mapped to host edge phi[i].
QuasiEmbedding embed(const Hypergraph& host, const std::vector<std::vector<std::string>>& edges,
                     const std::vector<std::uint32_t>& phi) {
  const auto& sym = *host.symbols();
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge e{eid(static_cast<std::uint32_t>(i)), {}};
    for (const auto& n : edges[i]) {
      const auto v = *sym.find_vertex(n);
      e.vertices.push_back(v);
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    }
    std::sort(e.vertices.begin(), e.vertices.end());
    es.push_back(std::move(e));
  }
  std::sort(vs.begin(), vs.end());
  auto sub_sym = std::make_shared<Symbols>(Symbols{sym.vertex_names, {}});
  std::vector<std::pair<EdgeId, EdgeId>> map;
  for (std::size_t i = 0; i < phi.size(); ++i) map.emplace_back(eid(static_cast<std::uint32_t>(i)), eid(phi[i]));
  return QuasiEmbedding(std::make_shared<const Hypergraph>(host), Hypergraph(sub_sym, vs, std::move(es)), map);
}

}  // namespace

Hypergraph fig1() {
  return Hypergraph::from_names({"r", "l1", "l2", "l3"},
                                {{"r", "l1"}, {"r", "l2"}, {"r", "l3"}, {"r", "l1", "l2", "l3"}},
                                {"p1", "p2", "p3", "h"});
}

Hypergraph fig2() {
  return Hypergraph::from_names({"v1", "v2", "v3", "v4", "v5"},
                                {{"v1", "v2", "v3", "v4"}, {"v1", "v3", "v4", "v5"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}},
                                {"e", "f", "g1", "g2", "g3"});
}

QuasiEmbedding fig3_left() {
  const auto host = Hypergraph::from_names({"u0", "u1", "u2", "u3", "u4"},
                                           {{"u1", "u2"}, {"u0", "u1"}, {"u0", "u4"}, {"u3", "u4"}, {"u0", "u2", "u3"}},
                                           {"c0", "c1", "c2", "c3", "e'"});
  return embed(host, {{"u0", "u1"}, {"u1", "u2"}, {"u2", "u3"}, {"u3", "u4"}, {"u4", "u0"}}, {1, 0, 4, 3, 2});
}

QuasiEmbedding fig3_right() {
  const auto host = Hypergraph::from_names({"v0", "v1", "v2", "v3", "v4", "v5"},
                                           {{"v0", "v1"}, {"v1", "v2"}, {"v3", "v4"}, {"v4", "v5"}, {"v0", "v2", "v3", "v5"}},
                                           {"c0", "c1", "c2", "c3", "e''"});
  return embed(host, {{"v0", "v1"}, {"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}, {"v5", "v0"}}, {0, 1, 4, 2, 3, 4});
}

MixedHypergraph fig4_left() {
  return MixedHypergraph::from_names({"v0", "v1", "v2", "v3"},
                                     {Named{{"v0"}, {"v1"}}, Named{{"v1"}, {"v2"}}, Named{{"v3"}, {"v2"}}, Named{{"v0", "v3"}, {}}},
                                     {"a0", "a1", "a2", "a3"});
}

Hypergraph fig4_right() {
  return Hypergraph::from_names(
      {"v0", "v01", "v1", "v12", "v2", "v23", "v3"},
      {{"v0", "v01"}, {"v01", "v1"}, {"v1", "v12"}, {"v12", "v2"}, {"v2", "v23"}, {"v23", "v3"}, {"v0", "v3"}});
}

MixedHypergraph fig5() {
  return MixedHypergraph::from_names({"r", "l1", "v", "l2", "l3"},
                                     {Named{{"r"}, {"l1"}}, Named{{"v"}, {"r"}}, Named{{"v", "l2"}, {}}, Named{{}, {"r", "l3"}},
                                      Named{{"r", "l2", "l3"}, {"l1"}}},
                                     {"a1", "a2", "a3", "a4", "h"});
}

Hypergraph c3() { return Hypergraph::from_indices(3, {{0, 1}, {1, 2}, {2, 0}}); }

Hypergraph c4() { return Hypergraph::from_indices(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

MixedHypergraph dir4() { return MixedHypergraph::from_signed(4, {{1, -2}, {2, -3}, {3, -4}, {4, -1}}); }

std::vector<std::string> names() {
  return {"fig1", "fig2", "fig3-left", "fig3-right", "fig4-left", "fig4-right", "fig5", "c3", "c4", "dir4"};
}

Instance by_name(const std::string& name) {
  if (name == "fig1") return fig1();
  if (name == "fig2") return fig2();
  if (name == "fig3-left") return fig3_left().sub();
  if (name == "fig3-right") return fig3_right().sub();
  if (name == "fig4-left") return fig4_left();
  if (name == "fig4-right") return fig4_right();
  if (name == "fig5") return fig5();
  if (name == "c3") return c3();
  if (name == "c4") return c4();
  if (name == "dir4") return dir4();
  throw InvalidInput("unknown fixture '" + name + "'");
}

}  // namespace tuhyper::fixtures
