#include <gtest/gtest.h>

#include <random>

#include "dfin/stats.hpp"
#include "support/test_support.hpp"

namespace dfin {
namespace {

TEST(ComputeStats, Example1) {
  const StatsReport report = compute_stats(testing::example1(), MiningConfig::relative(0.4));
  EXPECT_EQ(report.threshold, 4u);
  // ab ac bc de abc
  EXPECT_EQ(report.itemset_count, 5u);
  EXPECT_EQ(report.avg_diffnodeset_len, 0.0);
  EXPECT_FALSE(report.reduction_ratio.has_value());
  ASSERT_EQ(report.per_length.size(), 2u);
  EXPECT_EQ(report.per_length.at(2).itemset_count, 4u);
  EXPECT_EQ(report.per_length.at(3).itemset_count, 1u);
  // NS(ab), NS(ac), NS(bc): three nodes each; NS(de): one; NS(abc): three.
  EXPECT_DOUBLE_EQ(report.avg_nodeset_len, 13.0 / 5.0);
}

TEST(ComputeStats, NoPairsMeansEmptyReport) {
  const StatsReport report = compute_stats(testing::example1(), MiningConfig::absolute(7));
  EXPECT_EQ(report.itemset_count, 0u);
  EXPECT_FALSE(report.reduction_ratio.has_value());
  EXPECT_TRUE(report.per_length.empty());
}

TEST(ComputeStats, RatioWhenDefined) {
  // c alone in one row leaves c outside the e branch, so DN(ce) is non-empty.
  const TransactionDB db = parse_transactions("e c\ne c\nc\ne\n");
  const StatsReport report = compute_stats(db, MiningConfig::absolute(2));
  ASSERT_EQ(report.itemset_count, 1u);
  EXPECT_DOUBLE_EQ(report.avg_nodeset_len, 1.0);
  EXPECT_DOUBLE_EQ(report.avg_diffnodeset_len, 1.0);
  ASSERT_TRUE(report.reduction_ratio.has_value());
  EXPECT_DOUBLE_EQ(*report.reduction_ratio, 1.0);
}

TEST(ComputeStatsProperties, DeterministicAndBounded) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const TransactionDB db = testing::random_db(rng);
    const MiningConfig cfg = MiningConfig::absolute(1 + rng() % 6);
    const StatsReport a = compute_stats(db, cfg);
    const StatsReport b = compute_stats(db, cfg);
    EXPECT_EQ(a, b);
    EXPECT_LE(a.avg_diffnodeset_len, a.avg_first_item_nodeset_len + 1e-12);
    EXPECT_LE(a.avg_nodeset_len, a.avg_first_item_nodeset_len + 1e-12);

    std::uint64_t expected = 0;
    for (const auto& itemset : oracle_mine(db, cfg).itemsets) {
      if (itemset.items.size() >= 2) ++expected;
    }
    EXPECT_EQ(a.itemset_count, expected);
  }
}

}  // namespace
}  // namespace dfin
