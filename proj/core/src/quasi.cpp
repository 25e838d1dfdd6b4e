#include "tuhyper/quasi.hpp"

#include <algorithm>
#include <set>

#include "tuhyper/error.hpp"

namespace tuhyper {

namespace {

std::set<VertexId> meet(const Edge& e, const std::set<VertexId>& u) {
  std::set<VertexId> out;
  for (auto v : e.vertices)
    if (u.contains(v)) out.insert(v);
  return out;
}

std::set<VertexId> vertex_set(const Hypergraph& g) { return {g.vertices().begin(), g.vertices().end()}; }

}  // namespace

QuasiEmbedding::QuasiEmbedding(std::shared_ptr<const Hypergraph> host, Hypergraph sub,
                               const std::vector<std::pair<EdgeId, EdgeId>>& phi)
    : host_(std::move(host)), sub_(std::move(sub)) {
  if (!host_) throw InvalidInput("quasi-embedding without a host");
  for (auto v : sub_.vertices())
    if (!host_->has_vertex(v)) throw InvalidInput("sub vertex " + sub_.vertex_name(v) + " is not a host vertex");
  for (const auto& [f, e] : phi) {
    if (!sub_.has_edge(f)) throw InvalidInput("phi names unknown sub edge " + std::to_string(raw(f)));
    if (!host_->has_edge(e)) throw InvalidInput("phi maps to unknown host edge " + std::to_string(raw(e)));
    if (!phi_.emplace(f, e).second) throw InvalidInput("phi assigns sub edge " + std::to_string(raw(f)) + " twice");
    inverse_[e].push_back(f);
  }
  for (const auto& f : sub_.edges())
    if (!phi_.contains(f.id)) throw InvalidInput("phi is undefined on sub edge " + std::to_string(raw(f.id)));
  for (auto& [e, fs] : inverse_) std::sort(fs.begin(), fs.end());
}

QuasiEmbedding QuasiEmbedding::inclusion(std::shared_ptr<const Hypergraph> host, const SubSelection& sel) {
  auto sub = induce(*host, sel);
  std::vector<std::pair<EdgeId, EdgeId>> phi;
  for (const auto& f : sub.edges()) phi.emplace_back(f.id, f.id);
  return QuasiEmbedding(std::move(host), std::move(sub), phi);
}

EdgeId QuasiEmbedding::phi(EdgeId f) const {
  auto it = phi_.find(f);
  if (it == phi_.end()) throw InvalidInput("phi is undefined on " + std::to_string(raw(f)));
  return it->second;
}

const std::vector<EdgeId>& QuasiEmbedding::preimage(EdgeId e) const {
  static const std::vector<EdgeId> none;
  auto it = inverse_.find(e);
  return it == inverse_.end() ? none : it->second;
}

std::vector<std::pair<EdgeId, EdgeId>> QuasiEmbedding::phi_pairs() const { return {phi_.begin(), phi_.end()}; }

bool verify_quasi(const QuasiEmbedding& q) {
  for (const auto& f : q.sub().edges()) {
    const auto& e = q.host().edge(q.phi(f.id));
    if (!std::includes(e.vertices.begin(), e.vertices.end(), f.vertices.begin(), f.vertices.end())) return false;
  }
  for (const auto& e : q.host().edges()) {
    std::set<VertexId> seen;
    for (auto f : q.preimage(e.id))
      for (auto v : q.sub().edge(f).vertices)
        if (!seen.insert(v).second) return false;
  }
  return true;
}

bool ConflictReport::contains(EdgeId e) const {
  return std::any_of(conflicts.begin(), conflicts.end(), [e](const Entry& c) { return c.host_edge == e; });
}

ConflictReport conflicts(const QuasiEmbedding& q) {
  ConflictReport out;
  const auto u = vertex_set(q.sub());
  std::vector<EdgeId> host_ids;
  for (const auto& e : q.host().edges()) host_ids.push_back(e.id);
  std::sort(host_ids.begin(), host_ids.end());
  for (auto id : host_ids) {
    const auto& pre = q.preimage(id);
    if (pre.empty()) continue;
    const auto full = meet(q.host().edge(id), u);
    for (auto f : pre) {
      const auto& fv = q.sub().edge(f).vertices;
      if (fv.size() < full.size()) {
        out.conflicts.push_back({id, f});
        break;
      }
    }
  }
  return out;
}

bool is_partial(const QuasiEmbedding& q) { return conflicts(q).empty(); }

QuasiEmbedding restrict(const QuasiEmbedding& q, const SubSelection& sel) {
  auto sub = induce(q.sub(), sel);
  std::vector<std::pair<EdgeId, EdgeId>> phi;
  for (const auto& f : sub.edges()) phi.emplace_back(f.id, q.phi(f.id));
  return QuasiEmbedding(q.host_ptr(), std::move(sub), phi);
}

QuasiEmbedding add_edge(const QuasiEmbedding& q, EdgeId e, std::optional<EdgeId> new_id) {
  if (!q.host().has_edge(e)) throw InvalidInput("unknown host edge " + std::to_string(raw(e)));
  if (q.in_image(e)) throw PreconditionViolated("addition: host edge " + q.host().edge_name(e) + " is already in the image");
  const auto u = vertex_set(q.sub());
  const auto m = meet(q.host().edge(e), u);
  if (m.empty()) throw PreconditionViolated("addition: host edge " + q.host().edge_name(e) + " misses V(H)");
  EdgeId id = new_id.value_or(e);
  if (q.sub().has_edge(id)) {
    if (new_id) throw InvalidInput("addition: sub edge id " + std::to_string(raw(id)) + " is taken");
    std::uint32_t top = 0;
    for (const auto& f : q.sub().edges()) top = std::max(top, raw(f.id) + 1);
    id = eid(top);
  }
  auto edges = q.sub().edges();
  edges.push_back(Edge{id, {m.begin(), m.end()}});
  Hypergraph sub(q.sub().symbols(), q.sub().vertices(), std::move(edges));
  auto phi = q.phi_pairs();
  phi.emplace_back(id, e);
  return QuasiEmbedding(q.host_ptr(), std::move(sub), phi);
}

Json to_json(const QuasiEmbedding& q) {
  Json phi = Json::object();
  for (const auto& [f, e] : q.phi_pairs()) phi[std::to_string(raw(f))] = raw(e);
  return Json{{"sub", to_json(q.sub())}, {"phi", std::move(phi)}};
}

OddCycleFreeHost::OddCycleFreeHost(std::shared_ptr<const Hypergraph> host, const SearchLimits& limits)
    : host_(std::move(host)) {
  if (!host_) throw InvalidInput("missing host");
  if (search::odd_cycle(search::SignedIncidence(*host_), limits))
    throw PreconditionViolated("parity lemma: the host contains an odd cycle");
}

namespace {

void require(bool ok, const std::string& clause) {
  if (!ok) throw PreconditionViolated("parity lemma: " + clause);
}

// Checks the walks embed conflict-free into g and returns V(H) and the used edges.
std::pair<std::set<VertexId>, std::set<EdgeId>> check_walks(const Hypergraph& g,
                                                            std::initializer_list<const WalkEmbedding*> walks) {
  std::set<VertexId> u;
  std::set<EdgeId> used;
  for (const auto* w : walks) {
    require(w->vertices.size() >= 2 && w->host_edges.size() + 1 == w->vertices.size(),
            "a walk needs k >= 1 edges and k + 1 vertices");
    for (auto v : w->vertices) {
      require(g.has_vertex(v), "walk vertex outside the host");
      u.insert(v);
    }
    for (auto e : w->host_edges) {
      require(g.has_edge(e), "walk edge outside the host");
      require(used.insert(e).second, "walks reuse a host edge");
    }
  }
  for (const auto* w : walks)
    for (std::size_t i = 0; i < w->host_edges.size(); ++i) {
      const auto a = w->vertices[i];
      const auto b = w->vertices[i + 1];
      require(a != b, "walk step is a loop");
      require(meet(g.edge(w->host_edges[i]), u) == std::set<VertexId>{a, b},
              "walk embedding is not conflict-free at host edge " + g.edge_name(w->host_edges[i]));
    }
  return {u, used};
}

void require_closing(const Hypergraph& g, EdgeId e, const std::set<VertexId>& u, const std::set<EdgeId>& used,
                     std::set<VertexId> ends, const char* which) {
  require(g.has_edge(e), std::string(which) + " is not a host edge");
  require(!used.contains(e), std::string(which) + " is already used by the walks");
  require(meet(g.edge(e), u) == ends, std::string(which) + " does not meet V(H) exactly in the required pair");
}

}  // namespace

Parity walk_parity_closed(const OddCycleFreeHost& g, const WalkEmbedding& walk, EdgeId e) {
  const auto& host = g.host();
  const auto [u, used] = check_walks(host, {&walk});
  const auto a = walk.vertices.front();
  const auto b = walk.vertices.back();
  require(a != b, "case (i) needs distinct endpoints");
  require_closing(host, e, u, used, {a, b}, "closing edge e");
  if (walk.host_edges.size() % 2 == 0)
    throw InternalConsistencyError("parity lemma (i)", "closed walk of odd length in a host without odd cycles");
  return Parity::Odd;
}

Parity walk_parity_closed(const OddCycleFreeHost& g, const WalkEmbedding& p, const WalkEmbedding& q, EdgeId e,
                          EdgeId f) {
  const auto& host = g.host();
  const auto [u, used] = check_walks(host, {&p, &q});
  const auto a = p.vertices.front();
  const auto b = p.vertices.back();
  const auto c = q.vertices.front();
  const auto d = q.vertices.back();
  require(std::set<VertexId>{a, b, c, d}.size() == 4, "case (ii) needs four distinct endpoints");
  require_closing(host, e, u, used, {a, c}, "closing edge e");
  require_closing(host, f, u, used, {b, d}, "closing edge f");
  if ((p.host_edges.size() + q.host_edges.size()) % 2 != 0)
    throw InternalConsistencyError("parity lemma (ii)", "closed walk of odd length in a host without odd cycles");
  return Parity::Even;
}

}  // namespace tuhyper
