#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tuhyper/detect.hpp"
#include "tuhyper/error.hpp"
#include "tuhyper/extract.hpp"
#include "tuhyper/fixtures.hpp"
#include "tuhyper/gen.hpp"

using namespace tuhyper;

namespace {

VertexId vid(const Hypergraph& g, const std::string& name) { return *g.symbols()->find_vertex(name); }

EulerianCore as_core(std::size_t n, const std::vector<std::vector<std::uint32_t>>& edges) {
  return EulerianCore{std::make_shared<const Hypergraph>(Hypergraph::from_indices(n, edges))};
}

// Cores whose single reduction step leaves a tree house but no odd cycle.
struct Staged {
  ReducedPair rp;
  Witness house;
};

Staged stage(const EulerianCore& core) {
  const auto forest = enforce_forest(core);
  EXPECT_FALSE(forest.witness);
  EXPECT_EQ(forest.cycles_removed, 0U);
  EXPECT_FALSE(find_odd_cycle(*core.graph));
  auto rp = reduce_by_cycle(core, almost_nice_cycle(core));
  EXPECT_FALSE(rp.conflict_free);
  EXPECT_FALSE(find_odd_cycle(rp.reduced()));
  auto t = find_odd_tree_house(rp.reduced());
  EXPECT_TRUE(t);
  return {std::move(rp), t.value_or(Witness{})};
}

}  // namespace

TEST(Extract, Fig1CoreIsWholeHypergraph) {
  const auto g = fixtures::fig1();
  const auto core = find_eulerian_core(g);
  EXPECT_EQ(core.support(), 10U);
  EXPECT_EQ(core.graph->num_vertices(), 4U);
  EXPECT_EQ(core.graph->num_edges(), 4U);
  EXPECT_EQ(core.support() % 4, 2U);
}

TEST(Extract, UnimodularInputHasNoCore) {
  EXPECT_THROW((void)find_eulerian_core(fixtures::c4()), PreconditionViolated);
  EXPECT_THROW((void)extract_witness(fixtures::c4()), PreconditionViolated);
}

TEST(Extract, NonDisjointInputIsRejected) {
  EXPECT_THROW((void)extract_witness(fixtures::fig2()), NotDisjoint);
}

TEST(Extract, Fig1NiceCycleAndReduction) {
  const auto g = fixtures::fig1();
  const auto forest = enforce_forest(find_eulerian_core(g));
  EXPECT_FALSE(forest.witness);
  EXPECT_EQ(forest.cycles_removed, 0U);

  const auto nc = almost_nice_cycle(forest.core);
  ASSERT_EQ(nc.cycle.length(), 2U);
  EXPECT_EQ(nc.cycle.edges, (std::vector<EdgeId>{EdgeId{0}, EdgeId{3}}));
  EXPECT_EQ(nc.g_star, EdgeId{3});
  const std::set<VertexId> cyc(nc.cycle.vertices.begin(), nc.cycle.vertices.end());
  EXPECT_EQ(cyc, (std::set<VertexId>{vid(g, "r"), vid(g, "l1")}));

  const auto rp = reduce_by_cycle(forest.core, nc);
  EXPECT_FALSE(rp.conflict_free);
  EXPECT_LT(rp.reduced().num_edges() + rp.reduced().num_vertices(), 8U);
  const auto k = find_odd_cycle(rp.reduced());
  ASSERT_TRUE(k);
  EXPECT_EQ(k->cycle().length(), 3U);

  const auto lifted = lift_odd_cycle(rp, *k);
  EXPECT_EQ(lifted.witness.kind, WitnessKind::OddTreeHouse);
  EXPECT_TRUE(verify_witness(*rp.core, lifted.witness));
  EXPECT_FALSE(lifted.steps.empty());
}

TEST(Extract, ForestRemovesEvenGraphCycle) {
  // Four-cycle next to the tree house of fig1.
  const auto core = find_eulerian_core(
      Hypergraph::from_indices(8, {{0, 1}, {0, 2}, {0, 3}, {0, 1, 2, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}}), {},
      CoreOrder::Largest);
  EXPECT_EQ(core.support(), 18U);
  const auto forest = enforce_forest(core, {}, CoreOrder::Largest);
  EXPECT_EQ(forest.cycles_removed, 1U);
  EXPECT_FALSE(forest.witness);
  EXPECT_EQ(forest.core.support(), 10U);
  EXPECT_FALSE(forest.core.graph->has_vertex(VertexId{4}));
}

TEST(Extract, ForestFindsOddGraphCycle) {
  const auto g = Hypergraph::from_indices(4, {{0, 1}, {1, 2}, {0, 2}, {0, 1, 2, 3}, {3, 0}});
  const auto forest = enforce_forest(find_eulerian_core(g));
  ASSERT_TRUE(forest.witness);
  EXPECT_EQ(forest.witness->kind, WitnessKind::OddCycle);
}

TEST(Extract, NiceCycleOnLongerTreeHouse) {
  const auto core = as_core(6, {{0, 1}, {0, 2}, {0, 4}, {4, 5}, {5, 3}, {0, 1, 2, 3}});
  const auto nc = almost_nice_cycle(core);
  // Counted as an alternating vertex/edge sequence.
  const auto seq = 2 * nc.cycle.length();
  EXPECT_TRUE(seq == 4 || seq == 6) << seq;
  EXPECT_EQ(nc.cycle.edges.back(), nc.g_star);
  EXPECT_EQ(nc.g_star, EdgeId{5});
  const auto rp = reduce_by_cycle(core, nc);
  std::size_t after = 0;
  for (const auto& e : rp.reduced().edges()) after += e.size();
  EXPECT_EQ(after + 2 * nc.cycle.length(), core.support());
}

TEST(Extract, MatchingEdgeBranch) {
  const auto core = as_core(13, {{4, 5, 7, 9}, {0, 1, 2, 10}, {2, 6}, {2, 3}, {2, 9}, {6, 8}, {1, 2}, {3, 11}, {0, 11},
                                 {8, 10}, {2, 12}, {7, 12}, {4, 5}});
  const auto forest = enforce_forest(core);
  ASSERT_FALSE(forest.witness);
  const auto nc = almost_nice_cycle(forest.core);
  EXPECT_FALSE(nc.crossable);
  const auto rp = reduce_by_cycle(forest.core, nc);
  EXPECT_TRUE(verify_quasi(rp.embedding));
}

TEST(Extract, ConflictFreeReduction) {
  const auto core = as_core(11, {{3, 4, 5, 8}, {0, 1, 2, 6}, {1, 6}, {2, 4}, {4, 8}, {4, 5}, {4, 9}, {3, 7}, {0, 9},
                                 {4, 10}, {7, 10}});
  const auto forest = enforce_forest(core);
  ASSERT_FALSE(forest.witness);
  const auto rp = reduce_by_cycle(forest.core, almost_nice_cycle(forest.core));
  EXPECT_TRUE(rp.conflict_free);
  EXPECT_TRUE(conflicts(rp.embedding).empty());
}

TEST(Extract, TreeHouseLiftCase1) {
  const auto core = as_core(10, {{2, 4, 6, 7}, {0, 1, 3, 5, 8, 9}, {2, 4}, {1, 7}, {1, 8}, {0, 9}, {3, 9}, {5, 9}, {3, 6},
                                 {1, 3}});
  const auto s = stage(core);
  const auto lifted = lift_tree_house(s.rp, s.house);
  EXPECT_EQ(lifted.steps, std::vector<std::string>{"case 1"});
  EXPECT_EQ(lifted.witness.kind, WitnessKind::OddTreeHouse);
  EXPECT_TRUE(verify_witness(*core.graph, lifted.witness));
}

TEST(Extract, TreeHouseLiftCase2) {
  const auto core = as_core(14, {{0, 1, 2, 5, 6, 8}, {3, 4, 7, 9}, {3, 7}, {2, 5}, {5, 7}, {3, 9}, {3, 8}, {4, 7}, {1, 10},
                                 {10, 11}, {5, 11}, {6, 12}, {12, 13}, {0, 13}});
  const auto s = stage(core);
  const auto lifted = lift_tree_house(s.rp, s.house);
  EXPECT_EQ(lifted.steps, std::vector<std::string>{"case 2"});
  EXPECT_TRUE(verify_witness(*core.graph, lifted.witness));
}

TEST(Extract, ConflictFreeTreeHouseIsKept) {
  const auto core = as_core(14, {{6, 7, 8, 9}, {0, 1, 2, 3, 4, 5}, {2, 8}, {6, 9}, {7, 8}, {6, 8}, {0, 4}, {4, 5}, {4, 10},
                                 {10, 11}, {3, 11}, {6, 12}, {12, 13}, {1, 13}});
  const auto s = stage(core);
  const auto lifted = lift_tree_house(s.rp, s.house);
  EXPECT_TRUE(lifted.steps.empty());
  EXPECT_EQ(lifted.witness.selection().vertices, s.house.selection().vertices);
  EXPECT_EQ(lifted.witness.selection().edges, s.house.selection().edges);
  EXPECT_TRUE(verify_witness(*core.graph, lifted.witness));
}

TEST(Extract, Fig1TraceShape) {
  const auto g = fixtures::fig1();
  const auto ex = extract_with_trace(g);
  EXPECT_TRUE(verify_witness(g, ex.witness));
  EXPECT_EQ(ex.witness.kind, WitnessKind::OddTreeHouse);
  for (const char* key : {"levels", "base", "lifts", "witness"}) EXPECT_TRUE(ex.trace.contains(key)) << key;
  ASSERT_EQ(ex.trace["levels"].size(), 2U);
  EXPECT_EQ(ex.trace["levels"][0]["support"], 10);
  EXPECT_TRUE(ex.trace["levels"][0].contains("nice_cycle"));
  ASSERT_EQ(ex.trace["lifts"].size(), 1U);
  EXPECT_EQ(ex.trace["lifts"][0]["method"], "odd cycle to tree house");
}

TEST(Extract, Deterministic) {
  const auto g = fixtures::fig1();
  EXPECT_EQ(extract_with_trace(g).trace, extract_with_trace(g).trace);
}

TEST(Extract, SmallestCoreIsWitnessSized) {
  Rng rng(404);
  for (int i = 0; i < 300; ++i) {
    const auto g = sample_disjoint(rng, 7, 7);
    const auto d = decide_unimodular_disjoint(g);
    if (d.unimodular) continue;
    const auto core = find_eulerian_core(g);
    const auto w = extract_witness(g);
    EXPECT_EQ(core.graph->num_vertices() + core.graph->num_edges(),
              w.selection().vertices.size() + w.selection().edges.size())
        << to_json(g).dump();
  }
}

class ExtractCorpus : public ::testing::TestWithParam<CoreOrder> {};

TEST_P(ExtractCorpus, WitnessesVerifyAndMatchOracle) {
  Rng rng(GetParam() == CoreOrder::Smallest ? 77 : 78);
  ExtractLimits limits;
  limits.linalg.max_dimension_sum = 40;
  limits.core_order = GetParam();
  int non_tu = 0;
  for (int i = 0; i < 400; ++i) {
    const auto g = sample_disjoint(rng, 7, 8);
    const bool tu = oracle::is_tu(incidence_matrix(g));
    if (tu) {
      EXPECT_THROW((void)extract_witness(g, limits), PreconditionViolated);
      continue;
    }
    ++non_tu;
    const auto ex = extract_with_trace(g, limits);
    EXPECT_FALSE(witness_defect(g, ex.witness)) << to_json(g).dump();
  }
  EXPECT_GT(non_tu, 50);
}

TEST_P(ExtractCorpus, PlantedLargerInstances) {
  Rng rng(GetParam() == CoreOrder::Smallest ? 91 : 92);
  ExtractLimits limits;
  limits.linalg.max_dimension_sum = 60;
  limits.core_order = GetParam();
  int done = 0;
  for (int i = 0; i < 40; ++i) {
    GenConfig cfg;
    cfg.seed = rng.next();
    Plant p;
    p.kind = rng.coin() ? WitnessKind::OddTreeHouse : WitnessKind::OddCycle;
    for (auto& l : p.paths) l = 2 * rng.between(0, 1) + 1;
    p.cycle_length = 2 * rng.between(1, 3) + 1;
    cfg.plant = p;
    cfg.n_vertices = 12 + rng.between(0, 3);
    cfg.n_small_edges = rng.between(0, 3);
    cfg.plant_padding = rng.between(0, 2);
    Generated gen;
    try {
      gen = generate(cfg);
    } catch (const InvalidInput&) {
      continue;
    }
    const auto& g = std::get<Hypergraph>(gen.instance);
    EXPECT_FALSE(witness_defect(g, extract_witness(g, limits))) << to_json(g).dump();
    ++done;
  }
  EXPECT_GT(done, 20);
}

INSTANTIATE_TEST_SUITE_P(Orders, ExtractCorpus, ::testing::Values(CoreOrder::Smallest, CoreOrder::Largest),
                         [](const auto& info) {
                           return std::string(info.param == CoreOrder::Smallest ? "Smallest" : "Largest");
                         });

TEST(Extract, GuardOnLargeInput) {
  std::vector<std::vector<std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < 15; ++i) edges.push_back({i, (i + 1) % 15});
  const auto g = Hypergraph::from_indices(15, edges);
  ExtractLimits limits;
  limits.linalg.max_dimension_sum = 10;
  EXPECT_THROW((void)extract_witness(g, limits), GuardExceeded);
}
