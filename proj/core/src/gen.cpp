#include "tuhyper/gen.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "tuhyper/error.hpp"

namespace tuhyper {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  for (auto& s : s_) s = splitmix64(seed);
}

std::uint64_t Rng::next() {
  const auto result = std::rotl(s_[1] * 5, 7) * 9;
  const auto t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::bounded(std::uint64_t n) {
  if (n == 0) throw InvalidInput("bounded draw from an empty range");
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const auto r = next();
    if (r >= threshold) return r % n;
  }
}

std::size_t Rng::between(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(bounded(hi - lo + 1)); }

bool Rng::coin() { return (next() >> 63) != 0; }

namespace {

// Signed incidence during construction: vertex position -> sign.
struct Draft {
  std::map<std::size_t, int> signs;
  [[nodiscard]] std::size_t size() const { return signs.size(); }
};

std::vector<std::size_t> pick(Rng& rng, std::vector<std::size_t> pool, std::size_t k) {
  rng.shuffle(pool);
  pool.resize(k);
  return pool;
}

std::vector<std::size_t> all_positions(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

int pair_parity(const Draft& e, std::size_t a, std::size_t b) { return e.signs.at(a) == e.signs.at(b) ? 1 : 0; }

struct Builder {
  Rng& rng;
  std::size_t n;
  bool disjoint;
  std::vector<Draft> edges;
  std::set<std::size_t> in_proper;  // vertices covered by edges of size >= 4

  std::size_t add(Draft d) {
    if (d.size() >= 4)
      for (const auto& [v, s] : d.signs) in_proper.insert(v);
    edges.push_back(std::move(d));
    return edges.size() - 1;
  }

  // Adds up to `extra` random vertices outside `avoid`; keeps the size at most 3 when disjointness would break.
  void pad(Draft& d, std::size_t extra, const std::set<std::size_t>& avoid, bool is_house) {
    if (extra == 0) return;
    std::vector<std::size_t> pool;
    for (std::size_t v = 0; v < n; ++v)
      if (!avoid.contains(v) && !d.signs.contains(v) && !(disjoint && is_house && in_proper.contains(v))) pool.push_back(v);
    auto k = std::min<std::size_t>(rng.between(0, extra), pool.size());
    if (disjoint && !is_house) k = std::min<std::size_t>(k, d.size() >= 3 ? 0 : 3 - d.size());
    for (auto v : pick(rng, pool, k)) d.signs[v] = 1;
  }
};

Draft pair_edge(std::size_t a, std::size_t b) { return Draft{{{a, 1}, {b, 1}}}; }

void randomize_signs(Rng& rng, Draft& d) {
  for (auto& [v, s] : d.signs) s = rng.coin() ? 1 : -1;
}

void flip(Draft& d, std::size_t v) { d.signs.at(v) = -d.signs.at(v); }

bool is_mixed_kind(WitnessKind k) { return k == WitnessKind::MixedOddCycle || k == WitnessKind::MixedOddTreeHouse; }

}  // namespace

Generated generate(const GenConfig& cfg) {
  const auto n = cfg.n_vertices;
  if (n == 0 || n > 64) throw InvalidInput("gen: n_vertices must be in [1, 64]");
  const bool mixed = cfg.mixed || (cfg.plant && is_mixed_kind(cfg.plant->kind));
  Rng rng(cfg.seed);
  Builder b{rng, n, cfg.disjoint, {}, {}};

  // Planted structure: positions and edge indices before shuffling.
  std::optional<Witness> planted;
  if (cfg.plant) {
    const auto& p = *cfg.plant;
    const bool cycle = p.kind == WitnessKind::OddCycle || p.kind == WitnessKind::MixedOddCycle;
    if (cycle) {
      const auto k = p.cycle_length;
      if (k < 2 || (!mixed && (k < 3 || k % 2 == 0))) throw InvalidInput("gen: infeasible odd cycle length " + std::to_string(k));
      if (k > n) throw InvalidInput("gen: not enough vertices for the planted cycle");
      const auto vs = pick(rng, all_positions(n), k);
      const std::set<std::size_t> u(vs.begin(), vs.end());
      std::vector<Draft> ds;
      for (std::size_t i = 0; i < k; ++i) {
        auto d = pair_edge(vs[i], vs[(i + 1) % k]);
        if (mixed) randomize_signs(rng, d);
        ds.push_back(std::move(d));
      }
      if (mixed) {
        int par = 0;
        for (std::size_t i = 0; i < k; ++i) par += pair_parity(ds[i], vs[i], vs[(i + 1) % k]);
        if (par % 2 == 0) flip(ds[k - 1], vs[0]);
      }
      CycleData c;
      for (std::size_t i = 0; i < k; ++i) {
        b.pad(ds[i], cfg.plant_padding, u, false);
        if (mixed)
          for (auto& [v, s] : ds[i].signs)
            if (!u.contains(v)) s = rng.coin() ? 1 : -1;
        c.vertices.push_back(vid(static_cast<std::uint32_t>(vs[i])));
        c.edges.push_back(eid(static_cast<std::uint32_t>(b.add(std::move(ds[i])))));
      }
      planted = Witness{mixed ? WitnessKind::MixedOddCycle : WitnessKind::OddCycle, std::move(c)};
    } else {
      for (auto l : p.paths)
        if (l == 0 || (!mixed && l % 2 == 0)) throw InvalidInput("gen: infeasible tree-house path length " + std::to_string(l));
      const auto need = 1 + p.paths[0] + p.paths[1] + p.paths[2];
      if (need > n) throw InvalidInput("gen: not enough vertices for the planted tree house");
      const auto vs = pick(rng, all_positions(n), need);
      const std::set<std::size_t> u(vs.begin(), vs.end());
      const auto root = vs[0];
      std::size_t next = 1;
      std::array<std::vector<std::size_t>, 3> path_vs;
      for (std::size_t i = 0; i < 3; ++i) {
        path_vs[i].push_back(root);
        for (std::size_t j = 0; j < p.paths[i]; ++j) path_vs[i].push_back(vs[next++]);
      }
      Draft house{{{root, 1}}};
      for (const auto& pv : path_vs) house.signs[pv.back()] = 1;
      if (mixed) randomize_signs(rng, house);
      std::array<std::vector<Draft>, 3> path_ds;
      for (std::size_t i = 0; i < 3; ++i) {
        const auto& pv = path_vs[i];
        for (std::size_t j = 0; j + 1 < pv.size(); ++j) {
          auto d = pair_edge(pv[j], pv[j + 1]);
          if (mixed) randomize_signs(rng, d);
          path_ds[i].push_back(std::move(d));
        }
        if (mixed) {
          int par = pair_parity(house, root, pv.back());
          for (std::size_t j = 0; j + 1 < pv.size(); ++j) par += pair_parity(path_ds[i][j], pv[j], pv[j + 1]);
          if (par % 2 == 1) flip(path_ds[i].back(), pv.back());
        }
      }
      b.pad(house, cfg.plant_padding, u, true);
      if (mixed)
        for (auto& [v, s] : house.signs)
          if (!u.contains(v)) s = rng.coin() ? 1 : -1;
      TreeHouseData th;
      th.root = vid(static_cast<std::uint32_t>(root));
      th.house = eid(static_cast<std::uint32_t>(b.add(std::move(house))));
      for (std::size_t i = 0; i < 3; ++i) {
        PathData pd;
        for (auto v : path_vs[i]) pd.vertices.push_back(vid(static_cast<std::uint32_t>(v)));
        for (auto& d : path_ds[i]) {
          b.pad(d, cfg.plant_padding, u, false);
          if (mixed)
            for (auto& [v, s] : d.signs)
              if (!u.contains(v)) s = rng.coin() ? 1 : -1;
          pd.edges.push_back(eid(static_cast<std::uint32_t>(b.add(std::move(d)))));
        }
        th.leaves[i] = pd.vertices.back();
        th.paths[i] = std::move(pd);
      }
      planted = Witness{mixed ? WitnessKind::MixedOddTreeHouse : WitnessKind::OddTreeHouse, std::move(th)};
    }
  }

  for (std::size_t i = 0; i < cfg.n_small_edges; ++i) {
    const auto size = std::min<std::size_t>(rng.coin() ? 2 : 3, n);
    Draft d;
    for (auto v : pick(rng, all_positions(n), size)) d.signs[v] = mixed ? (rng.coin() ? 1 : -1) : 1;
    b.add(std::move(d));
  }
  for (auto size : cfg.proper_edge_sizes) {
    if (size < 3 || size > n) throw InvalidInput("gen: proper edge size " + std::to_string(size) + " is infeasible");
    std::vector<std::size_t> pool;
    for (std::size_t v = 0; v < n; ++v)
      if (!(cfg.disjoint && size >= 4 && b.in_proper.contains(v))) pool.push_back(v);
    if (pool.size() < size) throw InvalidInput("gen: no room for a disjoint edge of size " + std::to_string(size));
    Draft d;
    for (auto v : pick(rng, pool, size)) d.signs[v] = mixed ? (rng.coin() ? 1 : -1) : 1;
    b.add(std::move(d));
  }

  // Shuffle the edge order; ids follow the final positions.
  std::vector<std::size_t> order = all_positions(b.edges.size());
  rng.shuffle(order);
  std::vector<std::uint32_t> new_id(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<std::uint32_t>(i);

  auto sym = std::make_shared<Symbols>();
  std::vector<VertexId> vertices;
  for (std::size_t v = 0; v < n; ++v) {
    sym->vertex_names.push_back("v" + std::to_string(v));
    vertices.push_back(vid(static_cast<std::uint32_t>(v)));
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Arc a{eid(static_cast<std::uint32_t>(i)), {}, {}};
    for (const auto& [v, s] : b.edges[order[i]].signs) (s > 0 ? a.plus : a.minus).push_back(vid(static_cast<std::uint32_t>(v)));
    arcs.push_back(std::move(a));
  }
  MixedHypergraph d(sym, vertices, std::move(arcs));

  if (planted) {
    auto remap = [&](EdgeId& e) { e = eid(new_id[raw(e)]); };
    if (planted->is_cycle()) {
      auto c = planted->cycle();
      for (auto& e : c.edges) remap(e);
      planted->data = std::move(c);
    } else {
      auto th = planted->tree_house();
      remap(th.house);
      for (auto& p : th.paths)
        for (auto& e : p.edges) remap(e);
      planted->data = std::move(th);
    }
  }

  Generated out{mixed ? Instance{d} : Instance{d.underlying()}, planted};
  if (planted) {
    const auto why = mixed ? witness_defect(std::get<MixedHypergraph>(out.instance), *planted)
                           : witness_defect(std::get<Hypergraph>(out.instance), *planted);
    if (why) throw InternalConsistencyError("planted witness", *why);
  }
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> sample_supports(Rng& rng, std::size_t n, std::size_t m, std::size_t max_edge_size) {
  std::vector<std::vector<std::size_t>> out;
  std::set<std::size_t> in_proper;
  for (std::size_t i = 0; i < m; ++i) {
    const auto r = rng.bounded(16);
    std::size_t size = r == 0 ? 1 : r < 8 ? 2 : r < 12 ? 3 : 4;
    std::vector<std::size_t> pool = all_positions(n);
    if (size >= 4) {
      std::vector<std::size_t> free;
      for (auto v : pool)
        if (!in_proper.contains(v)) free.push_back(v);
      const auto top = std::min(free.size(), max_edge_size);
      if (top >= 4) {
        size = rng.between(4, top);
        pool = std::move(free);
      } else {
        size = 3;
      }
    }
    size = std::min({size, n, max_edge_size});
    auto vs = pick(rng, pool, size);
    std::sort(vs.begin(), vs.end());
    if (vs.size() >= 4) in_proper.insert(vs.begin(), vs.end());
    out.push_back(std::move(vs));
  }
  return out;
}

}  // namespace

Hypergraph sample_disjoint(Rng& rng, std::size_t max_vertices, std::size_t max_edges, std::size_t max_edge_size) {
  const auto n = rng.between(1, max_vertices);
  const auto m = rng.between(1, max_edges);
  std::vector<std::vector<std::uint32_t>> edges;
  for (const auto& s : sample_supports(rng, n, m, max_edge_size)) edges.emplace_back(s.begin(), s.end());
  return Hypergraph::from_indices(n, edges);
}

MixedHypergraph sample_disjoint_mixed(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  const auto n = rng.between(1, max_vertices);
  const auto m = rng.between(1, max_edges);
  std::vector<std::vector<int>> arcs;
  for (const auto& s : sample_supports(rng, n, m, 64)) {
    std::vector<int> a;
    for (auto v : s) a.push_back((rng.coin() ? 1 : -1) * static_cast<int>(v + 1));
    arcs.push_back(std::move(a));
  }
  return MixedHypergraph::from_signed(n, arcs);
}

Hypergraph sample_graph(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
  const auto n = rng.between(1, max_vertices);
  const auto p = rng.between(1, 7);
  std::vector<std::vector<std::uint32_t>> edges;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t c = a + 1; c < n; ++c)
      if (rng.bounded(8) < p) edges.push_back({a, c});
  if (edges.size() > max_edges) {
    rng.shuffle(edges);
    edges.resize(max_edges);
    std::sort(edges.begin(), edges.end());
  }
  return Hypergraph::from_indices(n, edges);
}

Json to_json(const GenConfig& cfg) {
  Json j{{"seed", cfg.seed},
         {"n_vertices", cfg.n_vertices},
         {"n_small_edges", cfg.n_small_edges},
         {"proper_edge_sizes", cfg.proper_edge_sizes},
         {"disjoint", cfg.disjoint},
         {"mixed", cfg.mixed},
         {"plant_padding", cfg.plant_padding}};
  if (cfg.plant) {
    j["plant"] = {{"kind", to_string(cfg.plant->kind)},
                  {"cycle_length", cfg.plant->cycle_length},
                  {"paths", cfg.plant->paths}};
  }
  return j;
}

GenConfig gen_config_from_json(const Json& j) {
  try {
    GenConfig cfg;
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.n_vertices = j.at("n_vertices").get<std::size_t>();
    cfg.n_small_edges = j.value("n_small_edges", std::size_t{0});
    cfg.proper_edge_sizes = j.value("proper_edge_sizes", std::vector<std::size_t>{});
    cfg.disjoint = j.value("disjoint", true);
    cfg.mixed = j.value("mixed", false);
    cfg.plant_padding = j.value("plant_padding", std::size_t{0});
    if (j.contains("plant") && !j.at("plant").is_null()) {
      const auto& p = j.at("plant");
      Plant plant;
      plant.kind = witness_kind_from_string(p.at("kind").get<std::string>());
      plant.cycle_length = p.value("cycle_length", std::size_t{3});
      plant.paths = p.value("paths", std::array<std::size_t, 3>{1, 1, 1});
      cfg.plant = plant;
    }
    return cfg;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("gen config: ") + e.what());
  }
}

}  // namespace tuhyper
