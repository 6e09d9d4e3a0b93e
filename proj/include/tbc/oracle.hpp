#pragma once

#include <cstdint>
#include <vector>

#include "tbc/betweenness.hpp"
#include "tbc/temporal_graph.hpp"
#include "tbc/time_table.hpp"
#include "tbc/variant.hpp"

namespace tbc {

struct OracleLimits {
  std::size_t max_nodes = 8;
  Time max_horizon = 8;
};

struct EnumeratedWalk {
  std::vector<TemporalArc> transitions;
  std::vector<TemporalNode> visited;  // distinct, in walk order
};

// All optimal s-z walks, found by explicit enumeration. Empty when s == z or
// z is unreachable.
std::vector<EnumeratedWalk> enumerate_optimal_walks(const TemporalGraph& g, NodeId s, NodeId z,
                                                    const VariantConfig& cfg,
                                                    const OracleLimits& limits = {});

// Walk counts from enumeration, for rows v != s.
struct OracleCounts {
  TimeTable<std::uint64_t> exact;  // exact optimal s-(v,t) walks
  TimeTable<std::uint64_t> total;  // optimal s-(v,t) walks
  std::vector<std::uint64_t> pair;
};

OracleCounts oracle_counts(const TemporalGraph& g, NodeId s, const VariantConfig& cfg,
                           const OracleLimits& limits = {});

// Sum over z != s of the fraction of optimal s-z walks visiting (v,t); rows v != s.
TimeTable<double> oracle_dependencies(const TemporalGraph& g, NodeId s, const VariantConfig& cfg,
                                      const OracleLimits& limits = {});

// B(v,t) from the definition, accumulated in exact rationals.
BetweennessResult oracle_betweenness(const TemporalGraph& g, const VariantConfig& cfg,
                                     const OracleLimits& limits = {});

}  // namespace tbc
