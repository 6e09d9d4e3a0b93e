#include <gtest/gtest.h>

#include "tbc/errors.hpp"
#include "tbc/variant.hpp"

using namespace tbc;

TEST(Variant, InfiniteRestlessIsShortest) {
  const auto r = VariantConfig::restless(std::nullopt, WalkType::kActive, true);
  EXPECT_EQ(r.cost(), CostKind::kShortest);
  EXPECT_EQ(r, VariantConfig::shortest(WalkType::kActive, true));
  EXPECT_FALSE(r.restless_bound().has_value());
}

TEST(Variant, ZeroBoundRejected) {
  EXPECT_THROW(VariantConfig::restless(0, WalkType::kPassive), ArgumentError);
}

TEST(Variant, ForemostIsAlwaysPassive) {
  const auto f = VariantConfig::foremost(true);
  EXPECT_EQ(f.cost(), CostKind::kForemost);
  EXPECT_EQ(f.walk_type(), WalkType::kPassive);
  EXPECT_TRUE(f.strict());
}

TEST(Variant, WaitingBoundedOnlyBelowHorizon) {
  const auto r = VariantConfig::restless(3, WalkType::kActive);
  EXPECT_TRUE(r.waiting_bounded(4));
  EXPECT_FALSE(r.waiting_bounded(3));
  EXPECT_FALSE(VariantConfig::shortest(WalkType::kActive).waiting_bounded(100));
}

TEST(Variant, Names) {
  EXPECT_EQ(VariantConfig::shortest(WalkType::kPassive).name(), "passive shortest");
  EXPECT_EQ(VariantConfig::restless(2, WalkType::kActive, true).name(), "active strict restless(k=2)");
  EXPECT_EQ(VariantConfig::foremost().name(), "passive foremost");
}
