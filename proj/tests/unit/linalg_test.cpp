#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tuhyper/error.hpp"
#include "tuhyper/fixtures.hpp"
#include "tuhyper/gen.hpp"
#include "tuhyper/linalg.hpp"

using namespace tuhyper;

TEST(Linalg, DeltaOfFixtures) {
  EXPECT_EQ(max_abs_subdet(incidence_matrix(fixtures::fig1())).delta, 2);
  EXPECT_EQ(max_abs_subdet(incidence_matrix(fixtures::c3())).delta, 2);
  EXPECT_EQ(max_abs_subdet(incidence_matrix(fixtures::c4())).delta, 1);
  EXPECT_EQ(max_abs_subdet(IntMatrix(2, 2)).delta, 0);
}

TEST(Linalg, DeltaWitnessAttainsDelta) {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto m = incidence_matrix(sample_disjoint_mixed(rng, 5, 5));
    const auto r = max_abs_subdet(m);
    EXPECT_EQ(r.delta, oracle::delta(m));
    if (r.delta > 0) EXPECT_EQ(abs(det_exact(m.submatrix(r.witness.rows, r.witness.cols))), r.delta);
  }
}

TEST(Linalg, BruteForceTuMatchesOracle) {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const auto g = sample_disjoint(rng, 5, 6);
    const auto m = incidence_matrix(g);
    EXPECT_EQ(is_tu_bruteforce(m), oracle::is_tu(m)) << to_json(g).dump();
  }
}

TEST(Linalg, WorkersDoNotChangeAnswers) {
  Rng rng(10);
  LinalgLimits two;
  two.workers = 2;
  for (int i = 0; i < 100; ++i) {
    const auto m = incidence_matrix(sample_disjoint_mixed(rng, 7, 7));
    EXPECT_EQ(max_abs_subdet(m).delta, max_abs_subdet(m, two).delta);
    EXPECT_EQ(first_non_unimodular_minor(m), first_non_unimodular_minor(m, two));
  }
}

TEST(Linalg, AlmostTu) {
  EXPECT_TRUE(is_almost_tu(incidence_matrix(fixtures::c3())));
  EXPECT_TRUE(is_almost_tu(incidence_matrix(fixtures::fig1())));
  EXPECT_TRUE(is_almost_tu(incidence_matrix(fixtures::fig2())));
  EXPECT_FALSE(is_almost_tu(incidence_matrix(fixtures::c4())));
  EXPECT_FALSE(is_almost_tu(incidence_matrix(Hypergraph::from_indices(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}))));
}

TEST(Linalg, GuardAndMaxOrder) {
  EXPECT_THROW((void)max_abs_subdet(IntMatrix(12, 12)), GuardExceeded);
  LinalgLimits capped;
  capped.max_order = 1;
  EXPECT_EQ(max_abs_subdet(incidence_matrix(fixtures::c3()), capped).delta, 1);
}

TEST(Linalg, CamionOnFixtures) {
  const auto r = camion_unimodular(fixtures::fig1());
  EXPECT_FALSE(r.unimodular);
  EXPECT_EQ(r.support, 10u);
  EXPECT_TRUE(camion_unimodular(fixtures::c4()).unimodular);
  EXPECT_EQ(camion_unimodular(fixtures::c3()).support, 6u);
  EXPECT_TRUE(camion_unimodular_mixed(fixtures::dir4()).unimodular);
  EXPECT_FALSE(camion_unimodular_mixed(fixtures::fig5()).unimodular);
}

TEST(Linalg, CamionMatchesOracle) {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const auto g = sample_disjoint(rng, 6, 6);
    const auto r = camion_unimodular(g);
    EXPECT_EQ(!r.unimodular, oracle::camion_violated(g)) << to_json(g).dump();
    EXPECT_EQ(r.unimodular, oracle::is_tu(incidence_matrix(g))) << to_json(g).dump();
    if (!r.unimodular) {
      const auto h = induce(g, r.witness);
      EXPECT_TRUE(is_eulerian(h));
      EXPECT_EQ(support_size(incidence_matrix(h)) % 4, 2u);
    }
  }
}
