#pragma once

#include <cstdint>
#include <vector>

#include "tbc/temporal_graph.hpp"
#include "tbc/time_table.hpp"
#include "tbc/variant.hpp"

namespace tbc {

struct EngineOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  bool marginals_only = false;
  bool normalize = false;  // divide by (n-1)(n-2)
};

struct GraphFingerprint {
  std::size_t num_nodes = 0;
  std::size_t num_arcs = 0;
  Time horizon = 0;
  std::uint64_t hash = 0;

  friend bool operator==(const GraphFingerprint&, const GraphFingerprint&) = default;
};

GraphFingerprint fingerprint(const TemporalGraph& g);

struct BetweennessResult {
  VariantConfig config;
  GraphFingerprint graph;
  bool has_table = true;
  TimeTable<double> b_vt;  // empty when has_table is false
  std::vector<double> b_v;
  std::vector<double> b_t;
};

// Per-source contribution cum(v,t) - delta_base(v,t), zero on the source row.
TimeTable<double> source_contribution(const TemporalGraph& g, NodeId s, const VariantConfig& cfg);

BetweennessResult compute_betweenness(const TemporalGraph& g, const VariantConfig& cfg,
                                      const EngineOptions& options = {});

// Largest n*(T+1) the dense tables accept.
inline constexpr std::size_t kMaxDenseCells = std::size_t{1} << 27;

}  // namespace tbc
