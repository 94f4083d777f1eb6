#include <gtest/gtest.h>

#include "golomb/bench.hpp"

namespace golomb {
namespace {

TEST(Bench, RowForFive) {
  const auto rows = compare_constructions(5);
  ASSERT_EQ(rows.size(), 4u);
  const BenchRow& r = rows.back();
  EXPECT_EQ(r.n, 5u);
  EXPECT_EQ(r.lower_bound, 10u);
  EXPECT_EQ(r.optimal, 11u);
  EXPECT_EQ(r.pow2, 15u);
  EXPECT_EQ(r.thm1, 34u);
  EXPECT_EQ(r.thm1_nminus2, 22u);  // marks 0 1 5 12 22
  EXPECT_EQ(r.thm2, 16u);
}

TEST(Bench, RowForTwoIsAllOnes) {
  const auto rows = compare_constructions(2);
  ASSERT_EQ(rows.size(), 1u);
  const BenchRow& r = rows.front();
  EXPECT_EQ(r.lower_bound, 1u);
  EXPECT_EQ(r.optimal, 1u);
  EXPECT_EQ(r.pow2, 1u);
  EXPECT_EQ(r.thm1, 1u);
  EXPECT_EQ(r.thm1_nminus2, 1u);
  EXPECT_EQ(r.thm2, 1u);
}

TEST(Bench, ExactCutoffAndPowersOfTwoLimit) {
  const auto rows = compare_constructions(BenchConfig{70, 8, 1});
  EXPECT_EQ(rows[8 - 2].optimal, 34u);
  EXPECT_FALSE(rows[9 - 2].optimal.has_value());
  EXPECT_TRUE(rows[63 - 2].pow2.has_value());
  EXPECT_FALSE(rows[64 - 2].pow2.has_value());
}

TEST(Bench, RatioApproachesHalf) {
  const auto rows = compare_constructions(BenchConfig{101, 0, 1});
  EXPECT_NEAR(rows.back().half_ratio(), 0.495, 0.001);
}

TEST(Bench, RejectsTinyTable) { EXPECT_THROW(compare_constructions(1), Error); }

}  // namespace
}  // namespace golomb
