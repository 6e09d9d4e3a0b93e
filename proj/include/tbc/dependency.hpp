#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tbc/shortest_walks.hpp"
#include "tbc/time_table.hpp"
#include "tbc/variant.hpp"
#include "tbc/walk_counting.hpp"

namespace tbc {

struct DependencyTable {
  TimeTable<double> cum;
};

struct AccumulationStats {
  std::uint64_t visits = 0;
  std::uint64_t memo_hits = 0;
  std::uint32_t max_visits_per_vertex = 0;
  // Successor times per vertex index, in processing order. Filled only when
  // record_order is set.
  std::vector<std::vector<Time>> successor_times;
  bool record_order = false;
};

// Largest t' <= t such that (v,t') is a predecessor-graph vertex.
std::optional<Time> before_time(const PredecessorData& pd, NodeId v, Time t);

// Cumulative dependencies of the source on every temporal node.
//
// Each vertex X is visited once (iterative DFS). Its successors are taken in
// decreasing time order; the partial sum after a time group is the share of
// walks through X that leave v at or after that time, which is what active
// walks contribute to the waiting interval down to the next group.
DependencyTable accumulate(const TemporalGraph& g, const PredecessorData& pd, const WalkCounts& counts,
                           const VariantConfig& cfg, AccumulationStats* stats = nullptr);

// Anchored recurrence: every (v,t) takes its successors from the vertex at
// before_time(v,t), scaled by total counts. Agrees with accumulate() for
// passive walks and for non-strict active walks with unbounded waiting.
DependencyTable accumulate_anchored(const PredecessorData& pd, const WalkCounts& counts,
                                    const VariantConfig& cfg);

}  // namespace tbc
