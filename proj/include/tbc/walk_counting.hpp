#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tbc/shortest_walks.hpp"
#include "tbc/time_table.hpp"
#include "tbc/variant.hpp"

namespace tbc {

// Unsigned 128-bit walk counter; overflow throws OverflowError.
class WalkCount {
 public:
  constexpr WalkCount() = default;
  constexpr explicit WalkCount(std::uint64_t v) : value_(v) {}

  WalkCount& operator+=(WalkCount other);
  friend WalkCount operator+(WalkCount a, WalkCount b) { return a += b; }
  friend WalkCount operator*(WalkCount a, WalkCount b);

  bool is_zero() const { return value_ == 0; }
  double to_double() const { return static_cast<double>(value_); }
  std::string to_string() const;

  friend constexpr bool operator==(WalkCount, WalkCount) = default;
  friend constexpr auto operator<=>(WalkCount a, WalkCount b) { return a.value_ <=> b.value_; }

 private:
  unsigned __int128 value_ = 0;
};

// Optimal s-v cost. Foremost costs carry the arrival time and compare
// lexicographically on (arrival, length).
struct PairCost {
  std::optional<Time> arrival;
  Length length = Length::infinite();

  bool reachable() const { return length.is_finite(); }
  friend auto operator<=>(const PairCost&, const PairCost&) = default;
};

struct WalkCounts {
  TimeTable<WalkCount> sigma_bar;
  TimeTable<WalkCount> sigma;
  std::vector<WalkCount> sigma_pair;
  TimeTable<double> delta_base;
  std::vector<PairCost> c_overall;
};

// Exact optimal walk counts by DP over the predecessor graph.
TimeTable<WalkCount> count_exact(const PredecessorData& pd);

// Optimal (v,t) walk counts. Active walks sum exact counts at earlier times
// whose length equals the running minimum.
TimeTable<WalkCount> count_total(const PredecessorData& pd, const TimeTable<WalkCount>& sigma_bar,
                                 const VariantConfig& cfg);

struct PairCounts {
  std::vector<WalkCount> sigma_pair;
  TimeTable<double> delta_base;
  std::vector<PairCost> c_overall;
};

PairCounts pair_counts_and_base(const PredecessorData& pd, const TimeTable<WalkCount>& sigma,
                                const TimeTable<WalkCount>& sigma_bar, const VariantConfig& cfg);

WalkCounts count_walks(const PredecessorData& pd, const VariantConfig& cfg);

// Foremost cost of the temporal node (v,t) as (t, dist); infinite if unreached.
inline PairCost foremost_cost(const PredecessorData& pd, NodeId v, Time t) {
  const Length d = pd.dist(v, t);
  if (!d.is_finite()) return {};
  return {t, d};
}

}  // namespace tbc
