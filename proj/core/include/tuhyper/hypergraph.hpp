#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tuhyper/ids.hpp"
#include "tuhyper/matrix.hpp"

namespace tuhyper {

// Names shared by a hypergraph and everything derived from it.
struct Symbols {
  std::vector<std::string> vertex_names;  // indexed by raw(VertexId)
  std::vector<std::string> edge_names;    // indexed by raw(EdgeId); may be shorter

  [[nodiscard]] std::string vertex_name(VertexId v) const;
  [[nodiscard]] std::string edge_name(EdgeId e) const;
  [[nodiscard]] std::optional<VertexId> find_vertex(std::string_view name) const;
};

struct Edge {
  EdgeId id;
  std::vector<VertexId> vertices;  // sorted by id, nonempty

  [[nodiscard]] std::size_t size() const noexcept { return vertices.size(); }
  [[nodiscard]] bool contains(VertexId v) const;
};

struct Arc {
  ArcId id;
  std::vector<VertexId> plus;   // S(a), sorted
  std::vector<VertexId> minus;  // T(a), sorted, disjoint from plus

  [[nodiscard]] std::size_t size() const noexcept { return plus.size() + minus.size(); }
  [[nodiscard]] std::vector<VertexId> support() const;
  // +1, -1, or 0.
  [[nodiscard]] int sign(VertexId v) const;
};

// U and F for G[U, F].
struct SubSelection {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

namespace detail {

// Maps a raw id to its position in an ordered sequence.
class IdIndex {
 public:
  void assign(std::uint32_t id, std::size_t pos);
  [[nodiscard]] std::optional<std::size_t> find(std::uint32_t id) const noexcept;
  [[nodiscard]] bool contains(std::uint32_t id) const noexcept { return find(id).has_value(); }

 private:
  std::vector<std::int32_t> pos_;
};

}  // namespace detail

class Hypergraph {
 public:
  Hypergraph();
  Hypergraph(std::shared_ptr<const Symbols> symbols, std::vector<VertexId> vertices, std::vector<Edge> edges);

  // Vertices get ids 0..n-1 in the given order; edges get ids 0..m-1.
  static Hypergraph from_names(std::vector<std::string> vertex_names,
                               const std::vector<std::vector<std::string>>& edges,
                               std::vector<std::string> edge_names = {});
  // Vertices named v0..v{n-1}.
  static Hypergraph from_indices(std::size_t n, const std::vector<std::vector<std::uint32_t>>& edges);

  [[nodiscard]] const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] std::size_t num_vertices() const noexcept { return vertices_.size(); }
  [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }

  [[nodiscard]] bool has_vertex(VertexId v) const noexcept { return vpos_.contains(raw(v)); }
  [[nodiscard]] bool has_edge(EdgeId e) const noexcept { return epos_.contains(raw(e)); }
  [[nodiscard]] std::size_t vertex_position(VertexId v) const;
  [[nodiscard]] std::size_t edge_position(EdgeId e) const;
  [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_[edge_position(e)]; }

  [[nodiscard]] const std::shared_ptr<const Symbols>& symbols() const noexcept { return symbols_; }
  [[nodiscard]] std::string vertex_name(VertexId v) const { return symbols_->vertex_name(v); }
  [[nodiscard]] std::string edge_name(EdgeId e) const { return symbols_->edge_name(e); }

  // Edges incident to v, in edge order.
  [[nodiscard]] std::vector<EdgeId> incident_edges(VertexId v) const;
  [[nodiscard]] std::size_t degree(VertexId v) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b);

 private:
  std::shared_ptr<const Symbols> symbols_;
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  detail::IdIndex vpos_;
  detail::IdIndex epos_;
};

class MixedHypergraph {
 public:
  MixedHypergraph();
  MixedHypergraph(std::shared_ptr<const Symbols> symbols, std::vector<VertexId> vertices, std::vector<Arc> arcs);

  struct NamedArc {
    std::vector<std::string> plus;
    std::vector<std::string> minus;
  };
  static MixedHypergraph from_names(std::vector<std::string> vertex_names, const std::vector<NamedArc>& arcs,
                                    std::vector<std::string> arc_names = {});
  // Signed index lists: +k+1 puts vertex k in S(a), -(k+1) puts it in T(a).
  static MixedHypergraph from_signed(std::size_t n, const std::vector<std::vector<int>>& arcs);
  // Every column must have entries in {0, +1, -1}.
  static MixedHypergraph from_matrix(const IntMatrix& m);

  [[nodiscard]] const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  [[nodiscard]] std::size_t num_vertices() const noexcept { return vertices_.size(); }
  [[nodiscard]] std::size_t num_arcs() const noexcept { return arcs_.size(); }

  [[nodiscard]] bool has_vertex(VertexId v) const noexcept { return vpos_.contains(raw(v)); }
  [[nodiscard]] bool has_arc(ArcId a) const noexcept { return apos_.contains(raw(a)); }
  [[nodiscard]] std::size_t vertex_position(VertexId v) const;
  [[nodiscard]] std::size_t arc_position(ArcId a) const;
  [[nodiscard]] const Arc& arc(ArcId a) const { return arcs_[arc_position(a)]; }

  [[nodiscard]] const std::shared_ptr<const Symbols>& symbols() const noexcept { return symbols_; }
  [[nodiscard]] std::string vertex_name(VertexId v) const { return symbols_->vertex_name(v); }
  [[nodiscard]] std::string arc_name(ArcId a) const { return symbols_->edge_name(a); }

  // Same vertices and ids, edges S(a) u T(a).
  [[nodiscard]] Hypergraph underlying() const;
  // All tails empty.
  [[nodiscard]] bool is_unsigned() const;
  // Arcs with empty tails, as a hypergraph.
  [[nodiscard]] static MixedHypergraph from_hypergraph(const Hypergraph& g);

  friend bool operator==(const MixedHypergraph& a, const MixedHypergraph& b);

 private:
  std::shared_ptr<const Symbols> symbols_;
  std::vector<VertexId> vertices_;
  std::vector<Arc> arcs_;
  detail::IdIndex vpos_;
  detail::IdIndex apos_;
};

[[nodiscard]] IntMatrix incidence_matrix(const Hypergraph& g);
[[nodiscard]] IntMatrix incidence_matrix(const MixedHypergraph& d);

// G[U, F]: edges f & U for f in F (host order), dropping empty ones; ids kept.
[[nodiscard]] Hypergraph induce(const Hypergraph& g, const SubSelection& sel);
[[nodiscard]] MixedHypergraph induce(const MixedHypergraph& d, const SubSelection& sel);

[[nodiscard]] bool is_disjoint(const Hypergraph& g);
[[nodiscard]] bool is_disjoint(const MixedHypergraph& d);
// First overlapping pair of proper edges, if any.
[[nodiscard]] std::optional<std::pair<EdgeId, EdgeId>> first_overlap(const Hypergraph& g);
// Throws NotDisjoint naming the first overlapping pair.
void require_disjoint(const Hypergraph& g);
void require_disjoint(const MixedHypergraph& d);

[[nodiscard]] bool is_eulerian(const Hypergraph& g);
[[nodiscard]] bool is_eulerian(const MixedHypergraph& d);

[[nodiscard]] bool is_graph(const Hypergraph& g);  // every edge has size 2

}  // namespace tuhyper
