#include <gtest/gtest.h>

#include <random>

#include "courtside/stats/exact.hpp"
#include "courtside/stats/ranks.hpp"

using namespace courtside::stats;

TEST(Ranks, DoubledMidranksWithTies) {
  const std::vector<double> v = {3.0, 1.0, 3.0, 2.0, 3.0};
  // Sorted: 1 2 3 3 3 -> ranks 1 2 4 4 4.
  EXPECT_EQ(doubled_midranks(v), (std::vector<std::uint64_t>{8, 2, 8, 4, 8}));
  EXPECT_EQ(tie_group_sizes(v), (std::vector<std::size_t>{3}));
}

TEST(Ranks, SumIsInvariant) {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 200; ++round) {
    std::vector<double> v(1 + rng() % 30);
    for (auto& x : v) x = static_cast<double>(rng() % 7);
    std::uint64_t sum = 0;
    for (const auto r : doubled_midranks(v)) sum += r;
    EXPECT_EQ(sum, v.size() * (v.size() + 1));
  }
}

TEST(Exact, SubsetSumTailSmallCase) {
  // 2-subsets of {1,2,3,4}: sums 3 4 5 5 6 7.
  const std::vector<std::uint64_t> values = {1, 2, 3, 4};
  const auto tail = subset_sum_tail(values, 2, 5);
  EXPECT_EQ(tail.total, 6u);
  EXPECT_EQ(tail.at_most, 4u);
  EXPECT_EQ(tail.at_least, 4u);
}

TEST(Exact, SignSumTailSmallCase) {
  // Subset sums of {1,2,3}: 0 1 2 3 3 4 5 6.
  const std::vector<std::uint64_t> values = {1, 2, 3};
  const auto tail = sign_sum_tail(values, 2);
  EXPECT_EQ(tail.total, 8u);
  EXPECT_EQ(tail.at_most, 3u);
  EXPECT_EQ(tail.at_least, 6u);
  EXPECT_DOUBLE_EQ(exact_p(tail, Sidedness::less), 3.0 / 8.0);
  EXPECT_DOUBLE_EQ(exact_p(tail, Sidedness::two_sided), 6.0 / 8.0);
}

TEST(Exact, NormalCdf) {
  EXPECT_DOUBLE_EQ(normal_cdf(0.0), 0.5);
  EXPECT_NEAR(normal_cdf(1.959963984540054), 0.975, 1e-12);
  EXPECT_NEAR(normal_cdf(-3.0), 0.0013498980316301, 1e-14);
}
