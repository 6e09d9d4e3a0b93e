#include "tbc/variant.hpp"

#include "tbc/errors.hpp"

namespace tbc {

VariantConfig VariantConfig::shortest(WalkType type, bool strict) {
  return {CostKind::kShortest, type, strict, std::nullopt};
}

VariantConfig VariantConfig::restless(std::optional<std::uint32_t> k, WalkType type, bool strict) {
  if (!k) return shortest(type, strict);
  if (*k == 0) throw ArgumentError("restless bound k must be positive");
  return {CostKind::kRestless, type, strict, k};
}

VariantConfig VariantConfig::foremost(bool strict) {
  return {CostKind::kForemost, WalkType::kPassive, strict, std::nullopt};
}

std::string VariantConfig::name() const {
  std::string s = active() ? "active" : "passive";
  s += strict_ ? " strict " : " ";
  switch (cost_) {
    case CostKind::kShortest: s += "shortest"; break;
    case CostKind::kRestless: s += "restless(k=" + std::to_string(*k_) + ")"; break;
    case CostKind::kForemost: s += "foremost"; break;
  }
  return s;
}

}  // namespace tbc
