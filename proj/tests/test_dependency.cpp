#include <gtest/gtest.h>

#include <random>

#include "support/graphs.hpp"
#include "tbc/dependency.hpp"
#include "tbc/oracle.hpp"

using namespace tbc;

namespace {

struct Run {
  PredecessorData pd;
  WalkCounts counts;
};

Run run(const TemporalGraph& g, NodeId s, const VariantConfig& cfg) {
  auto pd = temporal_bfs(g, s, cfg);
  auto counts = count_walks(pd, cfg);
  return {std::move(pd), std::move(counts)};
}

double max_diff(const TimeTable<double>& x, const TimeTable<double>& y, NodeId skip_row) {
  double worst = 0;
  for (NodeId v = 0; v < x.num_nodes(); ++v) {
    if (v == skip_row) continue;
    for (Time t = 0; t <= x.horizon(); ++t) worst = std::max(worst, std::abs(x.at(v, t) - y.at(v, t)));
  }
  return worst;
}

const NodeId a = 0, b = 1, c = 2, e = 4;

}  // namespace

TEST(BeforeTime, Cases) {
  const auto g = fixtures::toy();
  const auto act = temporal_bfs(g, a, VariantConfig::shortest(WalkType::kActive));
  EXPECT_EQ(before_time(act, b, 1), 1u);
  EXPECT_EQ(before_time(act, b, 3), 1u);
  EXPECT_EQ(before_time(act, b, 7), 1u);
  EXPECT_EQ(before_time(act, b, 0), std::nullopt);
  EXPECT_EQ(before_time(act, e, 5), std::nullopt);
  EXPECT_EQ(before_time(act, c, 4), 2u);
}

TEST(BeforeTime, TotalCountIsConstantAfterAnchor) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto g = fixtures::random_small_graph(rng);
    const auto cfg = VariantConfig::shortest(WalkType::kActive);
    const auto r = run(g, 0, cfg);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      for (Time t = 0; t <= g.horizon(); ++t) {
        if (auto anchor = before_time(r.pd, v, t)) EXPECT_EQ(r.counts.sigma.at(v, t), r.counts.sigma.at(v, *anchor));
      }
    }
  }
}

TEST(Accumulate, ToyPassive) {
  const auto g = fixtures::toy();
  const auto cfg = VariantConfig::shortest(WalkType::kPassive);
  const auto r = run(g, a, cfg);
  const auto dep = accumulate(g, r.pd, r.counts, cfg);
  EXPECT_DOUBLE_EQ(dep.cum.at(b, 1), 3.0);
  EXPECT_DOUBLE_EQ(dep.cum.at(b, 2), 0.0);
  // (d,6) is a sink: cum = base
  EXPECT_DOUBLE_EQ(dep.cum.at(3, 6), r.counts.delta_base.at(3, 6));
}

TEST(Accumulate, ToyActive) {
  const auto g = fixtures::toy();
  const auto cfg = VariantConfig::shortest(WalkType::kActive);
  const auto r = run(g, a, cfg);
  const auto dep = accumulate(g, r.pd, r.counts, cfg);
  EXPECT_DOUBLE_EQ(dep.cum.at(b, 1), 3.0);
  EXPECT_DOUBLE_EQ(dep.cum.at(b, 3), 2.0);
  EXPECT_DOUBLE_EQ(dep.cum.at(b, 6), 1.0);
}

TEST(Accumulate, VisitsEachVertexOnceAndOrdersByDecreasingTime) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    const auto g = fixtures::random_small_graph(rng);
    for (const auto& cfg : fixtures::all_configs()) {
      const auto r = run(g, 0, cfg);
      AccumulationStats stats;
      stats.record_order = true;
      accumulate(g, r.pd, r.counts, cfg, &stats);
      EXPECT_EQ(stats.visits, r.pd.num_vertices());
      EXPECT_LE(stats.max_visits_per_vertex, 1u);
      for (const auto& times : stats.successor_times) {
        EXPECT_TRUE(std::is_sorted(times.rbegin(), times.rend()));
      }
    }
  }
}

TEST(Accumulate, DecreasingOrderIsObservableOnToy) {
  const auto g = fixtures::toy();
  const auto cfg = VariantConfig::shortest(WalkType::kPassive);
  const auto r = run(g, a, cfg);
  AccumulationStats stats;
  stats.record_order = true;
  accumulate(g, r.pd, r.counts, cfg, &stats);
  EXPECT_EQ(stats.successor_times[*r.pd.vertex_index(b, 1)], (std::vector<Time>{5, 2}));
}

TEST(Properties, CumulativeDependencyMatchesOracle) {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 200; ++i) {
    const auto g = fixtures::random_small_graph(rng);
    for (const auto& cfg : fixtures::all_configs()) {
      for (NodeId s = 0; s < g.num_nodes(); ++s) {
        const auto r = run(g, s, cfg);
        const auto dep = accumulate(g, r.pd, r.counts, cfg);
        const auto want = oracle_dependencies(g, s, cfg);
        ASSERT_LE(max_diff(dep.cum, want, s), 1e-9) << cfg.name() << "\n" << write_edge_list(g);
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
          for (Time t = 0; t <= g.horizon(); ++t) {
            ASSERT_GE(dep.cum.at(v, t), r.counts.delta_base.at(v, t) - 1e-12);
            if (!cfg.active() && !r.pd.vertex_index(v, t)) ASSERT_EQ(dep.cum.at(v, t), 0.0);
          }
        }
      }
    }
  }
}

TEST(Anchored, AgreesWherePrefixAnchorsSuffice) {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 200; ++i) {
    const auto g = fixtures::random_small_graph(rng);
    for (const auto& cfg : {VariantConfig::shortest(WalkType::kPassive), VariantConfig::shortest(WalkType::kPassive, true),
                            VariantConfig::shortest(WalkType::kActive), VariantConfig::foremost()}) {
      for (NodeId s = 0; s < g.num_nodes(); ++s) {
        const auto r = run(g, s, cfg);
        const auto general = accumulate(g, r.pd, r.counts, cfg);
        const auto anchored = accumulate_anchored(r.pd, r.counts, cfg);
        ASSERT_LE(max_diff(general.cum, anchored.cum, s), 1e-9) << cfg.name();
      }
    }
  }
}

TEST(Anchored, DivergesForStrictActiveWalks) {
  std::mt19937_64 rng(56);
  const auto cfg = VariantConfig::shortest(WalkType::kActive, true);
  bool diverged = false;
  for (int i = 0; i < 300 && !diverged; ++i) {
    const auto g = fixtures::random_small_graph(rng);
    for (NodeId s = 0; s < g.num_nodes(); ++s) {
      const auto r = run(g, s, cfg);
      const auto general = accumulate(g, r.pd, r.counts, cfg);
      const auto anchored = accumulate_anchored(r.pd, r.counts, cfg);
      EXPECT_LE(max_diff(general.cum, oracle_dependencies(g, s, cfg), s), 1e-9);
      if (max_diff(general.cum, anchored.cum, s) > 1e-6) diverged = true;
    }
  }
  EXPECT_TRUE(diverged);
}
