#include <gtest/gtest.h>

#include "tuhyper/error.hpp"
#include "tuhyper/fixtures.hpp"
#include "tuhyper/gen.hpp"
#include "tuhyper/mixed.hpp"

using namespace tuhyper;

TEST(Mixed, ArcParity) {
  const auto d = MixedHypergraph::from_signed(2, {{1, -2}, {1, 2}, {-1, -2}});
  EXPECT_EQ(arc_parity(d.arcs()[0]), 0);
  EXPECT_EQ(arc_parity(d.arcs()[1]), 1);
  EXPECT_EQ(arc_parity(d.arcs()[2]), 1);
  EXPECT_EQ(path_or_cycle_parity(fixtures::dir4()), Parity::Even);
}

TEST(Mixed, NegationsAreInvolutions) {
  const auto d = fixtures::fig5();
  EXPECT_EQ(negate_row(negate_row(d, vid(0)), vid(0)), d);
  EXPECT_EQ(negate_column(negate_column(d, eid(1)), eid(1)), d);
  const auto m = incidence_matrix(negate_row(d, vid(0)));
  const auto orig = incidence_matrix(d);
  for (std::size_t c = 0; c < m.cols(); ++c) EXPECT_EQ(m(0, c), -orig(0, c));
}

TEST(Mixed, Fig4SplitReproducesPrintedMatrix) {
  const auto n = normalize_to_hypergraph(fixtures::fig4_left());
  ASSERT_TRUE(n.complete);
  EXPECT_EQ(incidence_matrix(n.hypergraph), incidence_matrix(fixtures::fig4_right()));
  EXPECT_EQ(abs(det_exact(incidence_matrix(n.hypergraph))), abs(det_exact(incidence_matrix(fixtures::fig4_left()))));
  EXPECT_EQ(undo(n.reduced, n.transcript), fixtures::fig4_left());
  EXPECT_EQ(replay(fixtures::fig4_left(), n.transcript), n.reduced);
}

TEST(Mixed, NormalizationPreservesTuAndRoundTrips) {
  Rng rng(41);
  int complete = 0;
  for (int i = 0; i < 300; ++i) {
    const auto d = sample_disjoint_mixed(rng, 6, 7);
    const auto n = normalize_to_hypergraph(d);
    EXPECT_EQ(undo(n.reduced, n.transcript), d);
    if (!n.complete) continue;
    ++complete;
    EXPECT_TRUE(n.reduced.is_unsigned());
    EXPECT_EQ(is_tu_bruteforce(incidence_matrix(n.hypergraph)), is_tu_bruteforce(incidence_matrix(d)))
        << to_json(d).dump();
  }
  EXPECT_GT(complete, 0);
}

TEST(Mixed, SplitNeedsOneHeadOneTail) {
  EXPECT_THROW((void)split_arc(fixtures::fig5(), eid(2)), PreconditionViolated);
  const auto [d, step] = split_arc(fixtures::dir4(), eid(0));
  EXPECT_EQ(d.num_vertices(), 5u);
  EXPECT_EQ(d.vertex_name(step.w), "w#0");
}

TEST(Mixed, EvenCycleNullVector) {
  const auto d = fixtures::dir4();
  const auto u = even_cycle_nullvector(d);
  const auto mu = incidence_matrix(d) * std::span<const std::int64_t>(u);
  EXPECT_TRUE(std::all_of(mu.begin(), mu.end(), [](auto x) { return x == 0; }));
  EXPECT_THROW((void)even_cycle_nullvector(MixedHypergraph::from_hypergraph(fixtures::c3())), PreconditionViolated);
}

TEST(Mixed, Classification) {
  EXPECT_EQ(classify_almost_tu_disjoint(fixtures::fig5()).kind, AlmostTuClass::MixedOddTreeHouse);
  EXPECT_EQ(classify_almost_tu_disjoint(MixedHypergraph::from_hypergraph(fixtures::c3())).kind,
            AlmostTuClass::MixedOddCycle);
  EXPECT_EQ(classify_almost_tu_disjoint(fixtures::dir4()).kind, AlmostTuClass::NotAlmostTU);
}

TEST(Mixed, BuildRForFig5BothSides) {
  const auto a = incidence_matrix(fixtures::fig5());
  for (auto side : {Side::Right, Side::Left}) {
    const auto r = build_r_matrix(a, side);
    EXPECT_TRUE(is_tu_bruteforce(r.r));
    EXPECT_EQ(r.product, side == Side::Right ? a * r.r : r.r * a);
    EXPECT_TRUE(is_unbalanced_hole(r.product));
  }
}

TEST(Mixed, BuildRIdentityForCyclesAndRejectsOthers) {
  const auto a = incidence_matrix(fixtures::c3());
  const auto r = build_r_matrix(a);
  EXPECT_EQ(r.r, IntMatrix::identity(3));
  EXPECT_THROW((void)build_r_matrix(incidence_matrix(fixtures::c4())), PreconditionViolated);
  EXPECT_FALSE(is_unbalanced_hole(incidence_matrix(fixtures::c4())));
}

TEST(Mixed, BuildROnPlantedTreeHouses) {
  Rng rng(42);
  for (int i = 0; i < 60; ++i) {
    GenConfig cfg;
    cfg.seed = rng.next();
    Plant p;
    p.kind = WitnessKind::MixedOddTreeHouse;
    for (auto& len : p.paths) len = 2 * rng.between(0, 1) + 1;
    cfg.plant = p;
    cfg.n_vertices = 1 + p.paths[0] + p.paths[1] + p.paths[2];
    const auto g = generate(cfg);
    const auto a = incidence_matrix(std::get<MixedHypergraph>(g.instance));
    const auto r = build_r_matrix(a);
    EXPECT_TRUE(is_tu_bruteforce(r.r));
    EXPECT_TRUE(is_unbalanced_hole(r.product));
  }
}
