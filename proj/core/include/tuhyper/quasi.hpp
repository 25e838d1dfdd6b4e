#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "tuhyper/hypergraph.hpp"
#include "tuhyper/io.hpp"
#include "tuhyper/search.hpp"

namespace tuhyper {

// (H, Phi): H has its own edge ids; Phi maps them to host edge ids.
class QuasiEmbedding {
 public:
  // Throws InvalidInput for dangling ids, a Phi that is not total on E(H), or V(H) outside V(host).
  QuasiEmbedding(std::shared_ptr<const Hypergraph> host, Hypergraph sub, const std::vector<std::pair<EdgeId, EdgeId>>& phi);

  // G[U, F] embedded by inclusion; sub edges keep their host ids.
  static QuasiEmbedding inclusion(std::shared_ptr<const Hypergraph> host, const SubSelection& sel);

  [[nodiscard]] const Hypergraph& host() const noexcept { return *host_; }
  [[nodiscard]] const std::shared_ptr<const Hypergraph>& host_ptr() const noexcept { return host_; }
  [[nodiscard]] const Hypergraph& sub() const noexcept { return sub_; }
  [[nodiscard]] EdgeId phi(EdgeId f) const;
  // Sub edges mapped to host edge e, ascending by id.
  [[nodiscard]] const std::vector<EdgeId>& preimage(EdgeId e) const;
  [[nodiscard]] bool in_image(EdgeId e) const { return !preimage(e).empty(); }
  [[nodiscard]] std::vector<std::pair<EdgeId, EdgeId>> phi_pairs() const;

 private:
  std::shared_ptr<const Hypergraph> host_;
  Hypergraph sub_;
  std::map<EdgeId, EdgeId> phi_;
  std::map<EdgeId, std::vector<EdgeId>> inverse_;
};

// Q1: f is contained in Phi(f). Q2: preimages of each host edge are pairwise disjoint.
[[nodiscard]] bool verify_quasi(const QuasiEmbedding& q);

struct ConflictReport {
  struct Entry {
    EdgeId host_edge;
    EdgeId witness;  // lowest-id sub edge f with Phi(f) = host_edge and f a proper subset of host_edge & V(H)
  };
  std::vector<Entry> conflicts;  // ascending by host edge id

  [[nodiscard]] bool empty() const noexcept { return conflicts.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return conflicts.size(); }
  [[nodiscard]] bool contains(EdgeId e) const;
};

[[nodiscard]] ConflictReport conflicts(const QuasiEmbedding& q);
// Conflict-free; then Phi is injective and certifies H as a partial subhypergraph.
[[nodiscard]] bool is_partial(const QuasiEmbedding& q);

// (H[U, F], Phi restricted); sub edges keep their ids.
[[nodiscard]] QuasiEmbedding restrict(const QuasiEmbedding& q, const SubSelection& sel);

// Adds e & V(H) mapped to e. The new sub edge takes `new_id`, or the host id when free.
// Throws PreconditionViolated if e is already in the image or misses V(H).
[[nodiscard]] QuasiEmbedding add_edge(const QuasiEmbedding& q, EdgeId e, std::optional<EdgeId> new_id = std::nullopt);

[[nodiscard]] Json to_json(const QuasiEmbedding& q);

enum class Parity { Even, Odd };

// A host checked to contain no odd cycle as a partial subhypergraph.
class OddCycleFreeHost {
 public:
  // Throws PreconditionViolated if the host contains an odd cycle.
  explicit OddCycleFreeHost(std::shared_ptr<const Hypergraph> host, const SearchLimits& limits = {});
  [[nodiscard]] const Hypergraph& host() const noexcept { return *host_; }

 private:
  std::shared_ptr<const Hypergraph> host_;
};

// A walk v_0 .. v_k whose i-th step uses host edge host_edges[i]; the embedding of the
// walk into the host must be conflict-free.
struct WalkEmbedding {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> host_edges;
};

// Closing a walk a..b by an unused host edge e with e & V(H) = {a, b} forces odd length.
// Throws PreconditionViolated naming the failed hypothesis, and InternalConsistencyError
// if the walk length contradicts the forced parity.
Parity walk_parity_closed(const OddCycleFreeHost& g, const WalkEmbedding& walk, EdgeId e);

// Edge-disjoint walks a..b and c..d (a, b, c, d distinct) joined by unused e & V(H) = {a, c}
// and f & V(H) = {b, d} force an even total length.
Parity walk_parity_closed(const OddCycleFreeHost& g, const WalkEmbedding& p, const WalkEmbedding& q, EdgeId e,
                          EdgeId f);

}  // namespace tuhyper
