#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "tbc/temporal_graph.hpp"

namespace tbc {

enum class CostKind { kShortest, kRestless, kForemost };
enum class WalkType { kPassive, kActive };

// Cost criterion, walk type and strictness of the walks being counted.
//
// Active foremost cannot be constructed. Restless with an infinite bound is
// stored as Shortest.
class VariantConfig {
 public:
  static VariantConfig shortest(WalkType type, bool strict = false);
  static VariantConfig restless(std::optional<std::uint32_t> k, WalkType type, bool strict = false);
  static VariantConfig foremost(bool strict = false);

  CostKind cost() const { return cost_; }
  WalkType walk_type() const { return type_; }
  bool strict() const { return strict_; }
  bool active() const { return type_ == WalkType::kActive; }

  // Maximum wait between consecutive transitions; nullopt means unbounded.
  std::optional<std::uint32_t> restless_bound() const { return k_; }
  // True if the waiting bound can bind on a graph with horizon T.
  bool waiting_bounded(Time horizon) const { return k_ && *k_ < horizon; }

  std::string name() const;

  friend bool operator==(const VariantConfig&, const VariantConfig&) = default;

 private:
  VariantConfig(CostKind cost, WalkType type, bool strict, std::optional<std::uint32_t> k)
      : cost_(cost), type_(type), strict_(strict), k_(k) {}

  CostKind cost_;
  WalkType type_;
  bool strict_;
  std::optional<std::uint32_t> k_;
};

}  // namespace tbc
