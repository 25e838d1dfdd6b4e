#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "tuhyper/hypergraph.hpp"
#include "tuhyper/io.hpp"
#include "tuhyper/witness.hpp"

namespace tuhyper {

// xoshiro256** 1.0 seeded by four SplitMix64 outputs. bounded(n) draws by rejection:
// values below 2^64 mod n are discarded, then r mod n is returned.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  std::uint64_t bounded(std::uint64_t n);  // uniform in [0, n), n > 0
  std::size_t between(std::size_t lo, std::size_t hi);  // uniform in [lo, hi]
  bool coin();
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[bounded(i)]);
  }

 private:
  std::array<std::uint64_t, 4> s_{};
};

struct Plant {
  WitnessKind kind = WitnessKind::OddCycle;
  std::size_t cycle_length = 3;              // cycles
  std::array<std::size_t, 3> paths{1, 1, 1};  // tree houses
};

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t n_vertices = 0;
  std::size_t n_small_edges = 0;           // random edges of size 2 or 3
  std::vector<std::size_t> proper_edge_sizes;  // extra edges of these sizes (>= 3)
  bool disjoint = true;  // edges of size >= 4 pairwise disjoint
  bool mixed = false;    // random signs on every non-planted arc
  std::optional<Plant> plant;
  std::size_t plant_padding = 0;  // up to this many outside vertices added to each planted edge
};

struct Generated {
  Instance instance;
  std::optional<Witness> planted;
};

// Deterministic in the config. Throws InvalidInput for infeasible configs. Planted
// witnesses are verified before returning.
[[nodiscard]] Generated generate(const GenConfig& cfg);

// Random disjoint hypergraph: 1..max_vertices vertices, 1..max_edges edges of random
// sizes; edges of size >= 4 are kept pairwise disjoint.
[[nodiscard]] Hypergraph sample_disjoint(Rng& rng, std::size_t max_vertices, std::size_t max_edges,
                                         std::size_t max_edge_size = 64);
// Same, with independent random signs.
[[nodiscard]] MixedHypergraph sample_disjoint_mixed(Rng& rng, std::size_t max_vertices, std::size_t max_edges);
// G(n, p) with n uniform in [1, max_vertices] and p uniform in {1/8, ..., 7/8}; when
// more than max_edges edges come up, a uniform subset of max_edges of them is kept.
[[nodiscard]] Hypergraph sample_graph(Rng& rng, std::size_t max_vertices,
                                      std::size_t max_edges = std::numeric_limits<std::size_t>::max());

[[nodiscard]] Json to_json(const GenConfig& cfg);
[[nodiscard]] GenConfig gen_config_from_json(const Json& j);

}  // namespace tuhyper
