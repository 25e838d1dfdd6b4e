#include <gtest/gtest.h>

#include <set>

#include "tuhyper/error.hpp"
#include "tuhyper/gen.hpp"
#include "tuhyper/mixed.hpp"

using namespace tuhyper;

TEST(Rng, DeterministicAndSeedSensitive) {
  Rng a(1), b(1), c(2);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    (void)c;
  }
  EXPECT_NE(Rng(1).next(), Rng(2).next());
}

TEST(Rng, BoundedStaysInRange) {
  Rng r(9);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto x = r.bounded(7);
    ASSERT_LT(x, 7U);
    seen.insert(x);
    const auto y = r.between(3, 5);
    ASSERT_GE(y, 3U);
    ASSERT_LE(y, 5U);
  }
  EXPECT_EQ(seen.size(), 7U);
}

TEST(Rng, ShuffleIsPermutation) {
  Rng r(5);
  std::vector<int> v{1, 2, 3, 4, 5, 6, 7, 8};
  r.shuffle(v);
  std::sort(v.begin(), v.end());
  EXPECT_EQ(v, (std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(Generate, SameConfigSameInstance) {
  GenConfig cfg;
  cfg.seed = 1234;
  cfg.n_vertices = 10;
  cfg.n_small_edges = 5;
  cfg.proper_edge_sizes = {4};
  cfg.plant = Plant{WitnessKind::OddTreeHouse, 3, {1, 3, 1}};
  const auto a = generate(cfg);
  const auto b = generate(cfg);
  EXPECT_EQ(std::get<Hypergraph>(a.instance), std::get<Hypergraph>(b.instance));
  ASSERT_TRUE(a.planted);
  EXPECT_EQ(*a.planted, *b.planted);
  EXPECT_TRUE(verify_witness(std::get<Hypergraph>(a.instance), *a.planted));
}

TEST(Generate, PlantsVerify) {
  Rng rng(55);
  int made = 0;
  for (int i = 0; i < 200; ++i) {
    GenConfig cfg;
    cfg.seed = rng.next();
    cfg.mixed = rng.coin();
    Plant p;
    p.kind = rng.coin() ? WitnessKind::OddCycle : WitnessKind::OddTreeHouse;
    if (cfg.mixed) p.kind = p.kind == WitnessKind::OddCycle ? WitnessKind::MixedOddCycle : WitnessKind::MixedOddTreeHouse;
    p.cycle_length = 2 * rng.between(1, 4) + 1;
    for (auto& l : p.paths) l = 2 * rng.between(0, 2) + 1;
    cfg.plant = p;
    cfg.n_vertices = 6 + rng.between(0, 8);
    cfg.n_small_edges = rng.between(0, 6);
    cfg.plant_padding = rng.between(0, 2);
    Generated g;
    try {
      g = generate(cfg);
    } catch (const InvalidInput&) {
      continue;
    }
    ++made;
    ASSERT_TRUE(g.planted);
    if (cfg.mixed)
      EXPECT_TRUE(verify_witness(std::get<MixedHypergraph>(g.instance), *g.planted));
    else
      EXPECT_TRUE(verify_witness(std::get<Hypergraph>(g.instance), *g.planted));
  }
  EXPECT_GT(made, 100);
}

TEST(Generate, DisjointFlagHolds) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto g = sample_disjoint(rng, 9, 9);
    EXPECT_NO_THROW(require_disjoint(g));
    EXPECT_GE(g.num_vertices(), 1U);
    EXPECT_LE(g.num_vertices(), 9U);
    EXPECT_LE(g.num_edges(), 9U);
  }
}

TEST(Generate, GraphEdgeCap) {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto g = sample_graph(rng, 10, 12);
    EXPECT_LE(g.num_edges(), 12U);
    for (const auto& e : g.edges()) EXPECT_EQ(e.size(), 2U);
  }
}

TEST(Generate, ConfigJsonRoundTrip) {
  GenConfig cfg;
  cfg.seed = 99;
  cfg.n_vertices = 12;
  cfg.n_small_edges = 4;
  cfg.proper_edge_sizes = {4, 5};
  cfg.mixed = true;
  cfg.plant = Plant{WitnessKind::MixedOddCycle, 5, {1, 1, 1}};
  cfg.plant_padding = 1;
  const auto back = gen_config_from_json(to_json(cfg));
  EXPECT_EQ(to_json(back), to_json(cfg));
  const auto a = generate(cfg);
  const auto b = generate(back);
  EXPECT_EQ(std::get<MixedHypergraph>(a.instance), std::get<MixedHypergraph>(b.instance));
}

TEST(Generate, InfeasibleConfigThrows) {
  GenConfig cfg;
  cfg.seed = 1;
  cfg.n_vertices = 3;
  cfg.plant = Plant{WitnessKind::OddCycle, 7, {1, 1, 1}};
  EXPECT_THROW((void)generate(cfg), InvalidInput);
  EXPECT_THROW((void)gen_config_from_json(Json{{"seed", "x"}}), InvalidInput);
}
