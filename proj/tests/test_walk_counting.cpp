#include <gtest/gtest.h>

#include <random>

#include "support/graphs.hpp"
#include "tbc/errors.hpp"
#include "tbc/oracle.hpp"
#include "tbc/walk_counting.hpp"

using namespace tbc;

namespace {

WalkCounts counts_for(const TemporalGraph& g, NodeId s, const VariantConfig& cfg) {
  return count_walks(temporal_bfs(g, s, cfg), cfg);
}

const NodeId a = 0, b = 1, c = 2, d = 3, e = 4;

}  // namespace

TEST(WalkCount, CheckedArithmetic) {
  WalkCount x{~std::uint64_t{0}};
  const auto big = x * x;  // < 2^128
  EXPECT_EQ(big.to_string(), "340282366920938463426481119284349108225");
  EXPECT_THROW(big * WalkCount{2}, OverflowError);
  EXPECT_THROW(big + big + big, OverflowError);
  EXPECT_EQ(WalkCount{0}.to_string(), "0");
  EXPECT_LT(WalkCount{3}, WalkCount{4});
}

TEST(WalkCount, OverflowSurfacesFromCounting) {
  // 130 diamonds in a row at one time: 2^130 exact walks
  std::vector<TemporalArc> arcs;
  const NodeId layers = 130;
  for (NodeId i = 0; i < layers; ++i) {
    const NodeId hub = 3 * i;
    arcs.push_back({hub, hub + 1, 1});
    arcs.push_back({hub, hub + 2, 1});
    arcs.push_back({hub + 1, hub + 3, 1});
    arcs.push_back({hub + 2, hub + 3, 1});
  }
  const TemporalGraph g(fixtures::labels(3 * layers + 1), arcs, true);
  const auto cfg = VariantConfig::shortest(WalkType::kPassive);
  EXPECT_THROW(count_exact(temporal_bfs(g, 0, cfg)), OverflowError);
}

TEST(CountExact, ToyPassive) {
  const auto wc = counts_for(fixtures::toy(), a, VariantConfig::shortest(WalkType::kPassive));
  EXPECT_EQ(wc.sigma_bar.at(c, 2), WalkCount{1});
  EXPECT_EQ(wc.sigma_bar.at(c, 5), WalkCount{1});
  // via (c,2) and via (c,5)
  EXPECT_EQ(wc.sigma_bar.at(b, 5), WalkCount{2});
  EXPECT_EQ(oracle_counts(fixtures::toy(), a, VariantConfig::shortest(WalkType::kPassive)).exact.at(b, 5), 2u);
  EXPECT_EQ(wc.sigma_bar.at(a, 1), WalkCount{1});
  EXPECT_EQ(wc.sigma_bar.at(d, 6), WalkCount{2});
}

TEST(CountExact, Diamond) {
  const auto g = parse_edge_list("a b 1\na c 1\nb d 2\nc d 2");
  const auto wc = counts_for(g, 0, VariantConfig::shortest(WalkType::kPassive));
  EXPECT_EQ(wc.sigma_bar.at(3, 2), WalkCount{2});
}

TEST(CountTotal, ToyActiveSumsOptimalArrivals) {
  const auto g = fixtures::toy();
  const auto act = counts_for(g, a, VariantConfig::shortest(WalkType::kActive));
  EXPECT_EQ(act.sigma.at(c, 5), WalkCount{2});
  EXPECT_EQ(act.sigma.at(c, 3), WalkCount{1});
  EXPECT_EQ(act.sigma.at(b, 7), WalkCount{1});
  EXPECT_EQ(act.sigma.at(c, 1), WalkCount{0});
  const auto pas = counts_for(g, a, VariantConfig::shortest(WalkType::kPassive));
  EXPECT_EQ(pas.sigma.at(c, 5), WalkCount{1});
  EXPECT_EQ(pas.sigma.at(c, 3), WalkCount{0});
}

TEST(PairCounts, ToyShortest) {
  const auto wc = counts_for(fixtures::toy(), a, VariantConfig::shortest(WalkType::kPassive));
  EXPECT_EQ(wc.sigma_pair[c], WalkCount{2});
  EXPECT_EQ(wc.sigma_pair[d], WalkCount{2});
  EXPECT_EQ(wc.c_overall[c].length, Length{2});
  EXPECT_DOUBLE_EQ(wc.delta_base.at(c, 2), 0.5);
  EXPECT_DOUBLE_EQ(wc.delta_base.at(c, 5), 0.5);
  EXPECT_DOUBLE_EQ(wc.delta_base.at(b, 1), 1.0);
  EXPECT_DOUBLE_EQ(wc.delta_base.at(b, 5), 0.0);  // length 3 is not optimal for b
}

TEST(PairCounts, ToyPairCostsFromA) {
  const auto wc = counts_for(fixtures::toy(), a, VariantConfig::shortest(WalkType::kPassive));
  EXPECT_EQ(wc.c_overall[a].length, Length{0});
  EXPECT_EQ(wc.c_overall[b].length, Length{1});
  EXPECT_EQ(wc.c_overall[c].length, Length{2});
  EXPECT_EQ(wc.c_overall[d].length, Length{3});
  EXPECT_FALSE(wc.c_overall[e].reachable());
}

TEST(PairCounts, ToyForemost) {
  const auto wc = counts_for(fixtures::toy(), a, VariantConfig::foremost());
  EXPECT_EQ(wc.c_overall[c], (PairCost{2, Length{2}}));
  EXPECT_EQ(wc.sigma_pair[c], WalkCount{1});
  EXPECT_DOUBLE_EQ(wc.delta_base.at(c, 2), 1.0);
  EXPECT_DOUBLE_EQ(wc.delta_base.at(c, 5), 0.0);
}

TEST(PairCounts, UnreachableNodeHasNoBase) {
  const auto wc = counts_for(fixtures::toy(), a, VariantConfig::shortest(WalkType::kActive));
  EXPECT_TRUE(wc.sigma_pair[e].is_zero());
  for (Time t = 0; t <= 7; ++t) EXPECT_EQ(wc.delta_base.at(e, t), 0.0);
}

TEST(PairCounts, ActiveBaseCoversWaitingAfterArrival) {
  const auto wc = counts_for(fixtures::toy(), a, VariantConfig::shortest(WalkType::kActive));
  EXPECT_DOUBLE_EQ(wc.delta_base.at(c, 1), 0.0);
  EXPECT_DOUBLE_EQ(wc.delta_base.at(c, 2), 0.5);
  EXPECT_DOUBLE_EQ(wc.delta_base.at(c, 4), 0.5);
  EXPECT_DOUBLE_EQ(wc.delta_base.at(c, 7), 1.0);
}

TEST(Properties, CountsMatchOracle) {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 200; ++i) {
    const auto g = fixtures::random_small_graph(rng);
    for (const auto& cfg : fixtures::all_configs()) {
      // Bounded active waiting counts exact walks on the passive graph.
      const bool passive_graph = cfg.active() && cfg.waiting_bounded(g.horizon());
      const auto exact_cfg = passive_graph ? VariantConfig::restless(cfg.restless_bound(), WalkType::kPassive, cfg.strict()) : cfg;
      for (NodeId s = 0; s < g.num_nodes(); ++s) {
        const auto wc = counts_for(g, s, cfg);
        const auto want = oracle_counts(g, s, cfg);
        const auto want_exact = passive_graph ? oracle_counts(g, s, exact_cfg).exact : want.exact;
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
          if (v == s) continue;
          ASSERT_EQ(wc.sigma_pair[v], WalkCount{want.pair[v]}) << cfg.name();
          for (Time t = 0; t <= g.horizon(); ++t) {
            ASSERT_EQ(wc.sigma_bar.at(v, t), WalkCount{want_exact.at(v, t)}) << cfg.name();
            ASSERT_EQ(wc.sigma.at(v, t), WalkCount{want.total.at(v, t)}) << cfg.name();
            ASSERT_GE(wc.delta_base.at(v, t), 0.0);
            ASSERT_LE(wc.delta_base.at(v, t), 1.0);
          }
        }
      }
    }
  }
}
