#include <gtest/gtest.h>

#include "support/graphs.hpp"
#include "tbc/errors.hpp"
#include "tbc/oracle.hpp"

using namespace tbc;

namespace {
const NodeId a = 0, b = 1, c = 2, d = 3, e = 4;
}

TEST(Enumerate, ToyShortestAtoC) {
  const auto walks = enumerate_optimal_walks(fixtures::toy(), a, c, VariantConfig::shortest(WalkType::kPassive));
  ASSERT_EQ(walks.size(), 2u);
  EXPECT_EQ(walks[0].transitions, (std::vector<TemporalArc>{{a, b, 1}, {b, c, 2}}));
  EXPECT_EQ(walks[1].transitions, (std::vector<TemporalArc>{{a, b, 1}, {b, c, 5}}));
  EXPECT_EQ(walks[0].visited, (std::vector<TemporalNode>{{a, 1}, {b, 1}, {c, 2}}));
}

TEST(Enumerate, ToyForemostAtoC) {
  const auto walks = enumerate_optimal_walks(fixtures::toy(), a, c, VariantConfig::foremost());
  ASSERT_EQ(walks.size(), 1u);
  EXPECT_EQ(walks[0].transitions, (std::vector<TemporalArc>{{a, b, 1}, {b, c, 2}}));
}

TEST(Enumerate, ActiveVisitsWaitAndExtendToHorizon) {
  const auto walks = enumerate_optimal_walks(fixtures::toy(), a, c, VariantConfig::shortest(WalkType::kActive));
  ASSERT_EQ(walks.size(), 2u);
  EXPECT_EQ(walks[0].visited, (std::vector<TemporalNode>{{a, 1}, {b, 1}, {b, 2}, {c, 2}, {c, 3}, {c, 4}, {c, 5}, {c, 6}, {c, 7}}));
}

TEST(Enumerate, SameEndpointsAndUnreachable) {
  const auto g = fixtures::toy();
  EXPECT_TRUE(enumerate_optimal_walks(g, a, a, VariantConfig::shortest(WalkType::kPassive)).empty());
  EXPECT_TRUE(enumerate_optimal_walks(g, a, e, VariantConfig::shortest(WalkType::kPassive)).empty());
  EXPECT_TRUE(enumerate_optimal_walks(g, d, a, VariantConfig::shortest(WalkType::kPassive)).empty());
}

TEST(Enumerate, RestlessMayRevisitANode) {
  // with k = 1 the only way on from b is a detour through c that resets the wait
  const auto g = parse_edge_list("a b 1\nb c 2\nc b 2\nb d 3\nb d 4");
  const auto walks = enumerate_optimal_walks(g, 0, 3, VariantConfig::restless(1, WalkType::kPassive));
  ASSERT_EQ(walks.size(), 1u);
  EXPECT_EQ(walks[0].transitions.size(), 4u);
  const auto direct = enumerate_optimal_walks(g, 0, 3, VariantConfig::restless(2, WalkType::kPassive));
  ASSERT_EQ(direct.size(), 1u);
  EXPECT_EQ(direct[0].transitions.size(), 2u);
}

TEST(Enumerate, ActiveVisitSetIsDistinct) {
  const auto g = parse_edge_list("a b 1\nb c 2\nc b 2\nb d 3");
  const auto walks = enumerate_optimal_walks(g, 0, 3, VariantConfig::restless(1, WalkType::kActive));
  ASSERT_EQ(walks.size(), 1u);
  const auto& vis = walks[0].visited;
  EXPECT_EQ(std::count(vis.begin(), vis.end(), TemporalNode{1, 2}), 1);
}

TEST(OracleBetweenness, Toy) {
  const auto g = fixtures::toy();
  const auto pas = oracle_betweenness(g, VariantConfig::shortest(WalkType::kPassive));
  EXPECT_EQ(pas.b_vt.at(b, 1), 2.0);
  for (Time t = 2; t <= 7; ++t) EXPECT_EQ(pas.b_vt.at(b, t), 0.0);
  const auto act = oracle_betweenness(g, VariantConfig::shortest(WalkType::kActive));
  EXPECT_EQ(act.b_vt.at(b, 1), 2.0);
  EXPECT_EQ(act.b_vt.at(b, 2), 2.0);
  EXPECT_EQ(act.b_vt.at(b, 3), 1.0);
  EXPECT_EQ(act.b_vt.at(b, 4), 1.0);
  for (Time t = 0; t <= 7; ++t) EXPECT_EQ(act.b_vt.at(e, t), 0.0);
}

TEST(OracleBetweenness, SizeGuard) {
  const auto g = parse_edge_list("a b 1\nb c 9");
  EXPECT_THROW(oracle_betweenness(g, VariantConfig::shortest(WalkType::kPassive)), SizeGuardError);
  EXPECT_NO_THROW(oracle_betweenness(g, VariantConfig::shortest(WalkType::kPassive), {8, 9}));
}

TEST(OracleCounts, Toy) {
  const auto oc = oracle_counts(fixtures::toy(), a, VariantConfig::shortest(WalkType::kActive));
  EXPECT_EQ(oc.pair[c], 2u);
  EXPECT_EQ(oc.total.at(c, 5), 2u);
  EXPECT_EQ(oc.exact.at(b, 5), 0u);  // (b,1) is cheaper
  EXPECT_EQ(oc.pair[e], 0u);
}
