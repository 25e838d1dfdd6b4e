#include "tuhyper/search.hpp"

#include <algorithm>
#include <bit>

#include "tuhyper/error.hpp"

namespace tuhyper::search {

namespace {

constexpr std::uint64_t bit(unsigned p) noexcept { return std::uint64_t{1} << p; }

void require_small(std::size_t n) {
  if (n > 64) throw GuardExceeded("forbidden-structure search supports at most 64 vertices, got " + std::to_string(n));
}

}  // namespace

SignedIncidence::SignedIncidence(const Hypergraph& g) : vertex_ids_(g.vertices()) {
  require_small(g.num_vertices());
  for (const auto& e : g.edges()) {
    std::uint64_t s = 0;
    for (auto v : e.vertices) s |= bit(static_cast<unsigned>(g.vertex_position(v)));
    edge_ids_.push_back(e.id);
    support_.push_back(s);
    negative_.push_back(0);
  }
  finish();
}

SignedIncidence::SignedIncidence(const MixedHypergraph& d) : vertex_ids_(d.vertices()) {
  require_small(d.num_vertices());
  for (const auto& a : d.arcs()) {
    std::uint64_t s = 0;
    std::uint64_t neg = 0;
    for (auto v : a.plus) s |= bit(static_cast<unsigned>(d.vertex_position(v)));
    for (auto v : a.minus) neg |= bit(static_cast<unsigned>(d.vertex_position(v)));
    edge_ids_.push_back(a.id);
    support_.push_back(s | neg);
    negative_.push_back(neg);
  }
  finish();
}

void SignedIncidence::finish() {
  by_id_.resize(edge_ids_.size());
  for (std::uint32_t i = 0; i < by_id_.size(); ++i) by_id_[i] = i;
  std::sort(by_id_.begin(), by_id_.end(), [&](auto a, auto b) { return edge_ids_[a] < edge_ids_[b]; });
  incident_.assign(vertex_ids_.size(), {});
  for (auto e : by_id_)
    for (std::uint64_t s = support_[e]; s != 0; s &= s - 1) incident_[std::countr_zero(s)].push_back(e);
}

namespace {

class Budget {
 public:
  explicit Budget(std::uint64_t max) : max_(max) {}
  void tick() {
    if (++nodes_ > max_) throw BudgetExceeded("search exceeded " + std::to_string(max_) + " node expansions");
  }

 private:
  std::uint64_t max_;
  std::uint64_t nodes_ = 0;
};

// Shared state for growing paths whose edges stay exact on the growing vertex set U.
struct Walk {
  const SignedIncidence& s;
  Budget& budget;
  std::uint64_t in_u = 0;       // U
  std::uint64_t blocked = 0;    // union of supports of committed edges
  std::vector<bool> used;       // committed edges
  std::vector<unsigned> verts;  // current path positions
  std::vector<std::uint32_t> edges;
  int parity = 0;

  Walk(const SignedIncidence& si, Budget& b) : s(si), budget(b), used(si.num_edges(), false) {}

  void push(std::uint32_t e, unsigned from, unsigned x) {
    in_u |= bit(x);
    used[e] = true;
    verts.push_back(x);
    edges.push_back(e);
    parity += s.pair_parity(e, from, x);
  }
  void pop(std::uint32_t e, unsigned from, unsigned x, std::uint64_t saved_blocked) {
    in_u &= ~bit(x);
    used[e] = false;
    verts.pop_back();
    edges.pop_back();
    parity -= s.pair_parity(e, from, x);
    blocked = saved_blocked;
  }
};

class CycleSearch {
 public:
  CycleSearch(const SignedIncidence& s, Budget& b, std::function<bool(const CycleData&, int)> visit)
      : walk_(s, b), visit_(std::move(visit)) {}

  void run() {
    const auto n = static_cast<unsigned>(walk_.s.num_vertices());
    for (unsigned v1 = 0; v1 < n && !stop_; ++v1) {
      walk_.in_u = bit(v1);
      walk_.blocked = 0;
      walk_.verts = {v1};
      walk_.edges.clear();
      walk_.parity = 0;
      extend(v1);
    }
  }

 private:
  void extend(unsigned cur) {
    auto& w = walk_;
    const unsigned v1 = w.verts.front();
    for (auto e : w.s.incident(cur)) {
      if (stop_) return;
      if (w.used[e]) continue;
      w.budget.tick();
      const auto sup = w.s.support(e);
      const auto meet = sup & w.in_u;
      if (w.verts.size() >= 2 && meet == (bit(cur) | bit(v1)) && canonical(cur, e)) {
        const int parity = w.parity + w.s.pair_parity(e, cur, v1);
        CycleData c;
        for (auto p : w.verts) c.vertices.push_back(w.s.vertex_id(p));
        for (auto f : w.edges) c.edges.push_back(w.s.edge_id(f));
        c.edges.push_back(w.s.edge_id(e));
        if (!visit_(c, parity % 2)) {
          stop_ = true;
          return;
        }
      }
      if (meet != bit(cur)) continue;
      for (std::uint64_t cand = sup & ~w.in_u & ~w.blocked; cand != 0; cand &= cand - 1) {
        const auto x = static_cast<unsigned>(std::countr_zero(cand));
        if (x < v1) continue;
        const auto saved = w.blocked;
        w.push(e, cur, x);
        w.blocked |= sup;
        extend(x);
        w.pop(e, cur, x, saved);
        if (stop_) return;
      }
    }
  }

  // Each cycle is met once per direction; keep the one with (v2, e1) < (vk, ek).
  bool canonical(unsigned last, std::uint32_t closing) const {
    const auto& w = walk_;
    const unsigned v2 = w.verts[1];
    if (v2 != last) return v2 < last;
    return w.s.edge_id(w.edges.front()) < w.s.edge_id(closing);
  }

  Walk walk_;
  std::function<bool(const CycleData&, int)> visit_;
  bool stop_ = false;
};

class TreeHouseSearch {
 public:
  TreeHouseSearch(const SignedIncidence& s, Budget& b) : walk_(s, b) {}

  std::optional<TreeHouseData> run() {
    const auto& s = walk_.s;
    for (auto h : s.edges_by_id()) {
      const auto sup = s.support(h);
      if (std::popcount(sup) < 4) continue;
      std::vector<unsigned> members;
      for (auto m = sup; m != 0; m &= m - 1) members.push_back(static_cast<unsigned>(std::countr_zero(m)));
      for (auto r : members) {
        std::vector<unsigned> others;
        for (auto x : members)
          if (x != r) others.push_back(x);
        const auto k = others.size();
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = a + 1; b < k; ++b)
            for (std::size_t c = b + 1; c < k; ++c) {
              house_ = h;
              root_ = r;
              leaves_ = {others[a], others[b], others[c]};
              walk_.in_u = bit(r) | bit(leaves_[0]) | bit(leaves_[1]) | bit(leaves_[2]);
              walk_.blocked = sup;
              std::fill(walk_.used.begin(), walk_.used.end(), false);
              walk_.used[h] = true;
              if (grow(0)) return found_;
            }
      }
    }
    return std::nullopt;
  }

 private:
  // Start path i from the root.
  bool grow(std::size_t i) {
    if (i == 3) {
      record();
      return true;
    }
    walk_.verts = {root_};
    walk_.edges.clear();
    walk_.parity = 0;
    return extend(i, root_);
  }

  bool extend(std::size_t i, unsigned cur) {
    auto& w = walk_;
    const unsigned leaf = leaves_[i];
    for (auto e : w.s.incident(cur)) {
      if (w.used[e]) continue;
      w.budget.tick();
      const auto sup = w.s.support(e);
      const auto meet = sup & w.in_u;
      if (meet == (bit(cur) | bit(leaf))) {
        const int parity = w.parity + w.s.pair_parity(e, cur, leaf) + w.s.pair_parity(house_, root_, leaf);
        if (parity % 2 == 0) {
          const auto saved_blocked = w.blocked;
          const auto saved_verts = w.verts;
          const auto saved_edges = w.edges;
          const int saved_parity = w.parity;
          w.used[e] = true;
          w.blocked |= sup;
          paths_[i].vertices = w.verts;
          paths_[i].vertices.push_back(leaf);
          paths_[i].edges = w.edges;
          paths_[i].edges.push_back(e);
          if (grow(i + 1)) return true;
          w.used[e] = false;
          w.blocked = saved_blocked;
          w.verts = saved_verts;
          w.edges = saved_edges;
          w.parity = saved_parity;
        }
      }
      if (meet != bit(cur)) continue;
      for (std::uint64_t cand = sup & ~w.in_u & ~w.blocked; cand != 0; cand &= cand - 1) {
        const auto x = static_cast<unsigned>(std::countr_zero(cand));
        const auto saved = w.blocked;
        w.push(e, cur, x);
        w.blocked |= sup;
        if (extend(i, x)) return true;
        w.pop(e, cur, x, saved);
      }
    }
    return false;
  }

  void record() {
    const auto& s = walk_.s;
    TreeHouseData t;
    t.root = s.vertex_id(root_);
    t.house = s.edge_id(house_);
    for (std::size_t i = 0; i < 3; ++i) {
      t.leaves[i] = s.vertex_id(leaves_[i]);
      for (auto p : paths_[i].vertices) t.paths[i].vertices.push_back(s.vertex_id(p));
      for (auto e : paths_[i].edges) t.paths[i].edges.push_back(s.edge_id(e));
    }
    found_ = std::move(t);
  }

  struct RawPath {
    std::vector<unsigned> vertices;
    std::vector<std::uint32_t> edges;
  };

  Walk walk_;
  std::uint32_t house_ = 0;
  unsigned root_ = 0;
  std::array<unsigned, 3> leaves_{};
  std::array<RawPath, 3> paths_;
  std::optional<TreeHouseData> found_;
};

}  // namespace

std::optional<CycleData> odd_cycle(const SignedIncidence& s, const SearchLimits& limits) {
  Budget budget(limits.max_nodes);
  std::optional<CycleData> found;
  CycleSearch search(s, budget, [&](const CycleData& c, int parity) {
    if (parity == 0) return true;
    found = c;
    return false;
  });
  search.run();
  return found;
}

std::optional<TreeHouseData> odd_tree_house(const SignedIncidence& s, const SearchLimits& limits) {
  Budget budget(limits.max_nodes);
  return TreeHouseSearch(s, budget).run();
}

void for_each_cycle(const SignedIncidence& s, const SearchLimits& limits,
                    const std::function<bool(const CycleData&, int parity)>& visit) {
  Budget budget(limits.max_nodes);
  CycleSearch(s, budget, visit).run();
}

}  // namespace tuhyper::search
