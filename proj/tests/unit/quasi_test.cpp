#include <gtest/gtest.h>

#include "tuhyper/error.hpp"
#include "tuhyper/fixtures.hpp"
#include "tuhyper/quasi.hpp"

using namespace tuhyper;

namespace {

std::shared_ptr<const Hypergraph> share(Hypergraph g) { return std::make_shared<const Hypergraph>(std::move(g)); }

}  // namespace

TEST(Quasi, Fig3LeftHasConflictAtEPrime) {
  const auto q = fixtures::fig3_left();
  EXPECT_TRUE(verify_quasi(q));
  const auto c = conflicts(q);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(q.host().edge_name(c.conflicts[0].host_edge), "e'");
  EXPECT_FALSE(is_partial(q));
}

TEST(Quasi, Fig3RightSplitIsAConflict) {
  const auto q = fixtures::fig3_right();
  EXPECT_TRUE(verify_quasi(q));
  const auto c = conflicts(q);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(q.host().edge_name(c.conflicts[0].host_edge), "e''");
  EXPECT_EQ(q.preimage(c.conflicts[0].host_edge).size(), 2u);
}

TEST(Quasi, InclusionIsPartial) {
  const auto host = share(fixtures::fig2());
  const SubSelection sel{{vid(1), vid(2), vid(3)}, {eid(0), eid(2), eid(3)}};
  const auto q = QuasiEmbedding::inclusion(host, sel);
  EXPECT_TRUE(verify_quasi(q));
  EXPECT_TRUE(is_partial(q));
}

TEST(Quasi, Q1AndQ2Violations) {
  const auto host = share(Hypergraph::from_indices(3, {{0, 1, 2}}));
  const auto sub_sym = host->symbols();
  Hypergraph outside(sub_sym, {vid(0), vid(1), vid(2)}, {Edge{eid(0), {vid(0), vid(1)}}, Edge{eid(1), {vid(1), vid(2)}}});
  const QuasiEmbedding overlapping(host, outside, {{eid(0), eid(0)}, {eid(1), eid(0)}});
  EXPECT_FALSE(verify_quasi(overlapping));
  EXPECT_THROW(QuasiEmbedding(host, outside, {{eid(0), eid(0)}}), InvalidInput);
  EXPECT_THROW(QuasiEmbedding(host, outside, {{eid(0), eid(5)}, {eid(1), eid(0)}}), InvalidInput);
}

TEST(Quasi, RestrictionAndAddition) {
  const auto q = fixtures::fig3_left();
  const auto& sub = q.sub();
  // Dropping u0 and its two edges removes the conflict.
  SubSelection sel;
  for (auto v : sub.vertices())
    if (sub.vertex_name(v) != "u0") sel.vertices.push_back(v);
  for (const auto& e : sub.edges()) sel.edges.push_back(e.id);
  const auto r = restrict(q, sel);
  EXPECT_TRUE(verify_quasi(r));
  EXPECT_LT(r.sub().num_vertices(), sub.num_vertices());

  const auto host = share(Hypergraph::from_indices(3, {{0, 1}, {1, 2}, {0, 2}}));
  const auto path = QuasiEmbedding::inclusion(host, {{vid(0), vid(1), vid(2)}, {eid(0), eid(1)}});
  const auto closed = add_edge(path, eid(2));
  EXPECT_EQ(closed.sub().num_edges(), 3u);
  EXPECT_TRUE(is_partial(closed));
  EXPECT_THROW((void)add_edge(closed, eid(2)), PreconditionViolated);
}

TEST(Quasi, ParityLemmaCaseOne) {
  // Even 4-cycle host: the 3-edge path closed by the fourth edge.
  const auto host = share(Hypergraph::from_indices(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  const OddCycleFreeHost h(host);
  const WalkEmbedding walk{{vid(0), vid(1), vid(2), vid(3)}, {eid(0), eid(1), eid(2)}};
  EXPECT_EQ(walk_parity_closed(h, walk, eid(3)), Parity::Odd);
  const WalkEmbedding wrong{{vid(0), vid(1), vid(2)}, {eid(0), eid(1)}};
  EXPECT_THROW((void)walk_parity_closed(h, wrong, eid(3)), PreconditionViolated);
}

TEST(Quasi, ParityLemmaCaseTwo) {
  const auto host = share(Hypergraph::from_indices(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}));
  const OddCycleFreeHost h(host);
  const WalkEmbedding p{{vid(0), vid(1)}, {eid(0)}};
  const WalkEmbedding q{{vid(2), vid(3)}, {eid(1)}};
  EXPECT_EQ(walk_parity_closed(h, p, q, eid(2), eid(3)), Parity::Even);
}

TEST(Quasi, OddHostIsRejected) {
  EXPECT_THROW(OddCycleFreeHost(share(fixtures::c3())), PreconditionViolated);
}
