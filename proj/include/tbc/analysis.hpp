#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tbc/betweenness.hpp"

namespace tbc {

struct RankEntry {
  std::uint32_t key;
  double value;
};

// Descending by value, ties by key ascending.
struct Ranking {
  std::vector<RankEntry> entries;
  std::size_t size() const { return entries.size(); }
};

Ranking make_ranking(std::span<const double> values);
Ranking b_node(const BetweennessResult& r);
Ranking b_time(const BetweennessResult& r);

// Kendall tau-b over the values of matching keys. If either side is
// constant the result is 1 when both are, else 0.
double kendall_tau(const Ranking& a, const Ranking& b);

std::size_t top_k_intersection(const Ranking& a, const Ranking& b, std::size_t k);

struct PrefixPoint {
  double mu;
  std::size_t intersection;
};

// Top-k overlap of B(v) on G^{<=mu} against B(v) on G, for each mu.
std::vector<PrefixPoint> prefix_scan(const TemporalGraph& g, const VariantConfig& cfg,
                                     std::span<const double> mus, std::size_t k,
                                     const EngineOptions& options = {});

struct HistogramBin {
  double lo;
  double hi;
  double mass;
};

// B(t) summed into equal-width bins over [0, T]; T itself falls in the last bin.
std::vector<HistogramBin> time_histogram(const BetweennessResult& r, std::size_t bins);

// ceil(0.1 * T), at least 1.
std::uint32_t default_restless_k(Time horizon);

}  // namespace tbc
