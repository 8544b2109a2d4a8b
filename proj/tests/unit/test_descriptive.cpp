#include <gtest/gtest.h>

#include <cmath>

#include "courtside/error.hpp"
#include "courtside/stats/descriptive.hpp"

using namespace courtside;
using namespace courtside::stats;

TEST(Descriptive, Summary) {
  const std::vector<double> v = {4, 1, 3, 2};
  const auto s = summarize(v);
  EXPECT_EQ(s.n, 4u);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_DOUBLE_EQ(s.median, 2.5);
  ASSERT_TRUE(s.sd);
  EXPECT_NEAR(*s.sd, std::sqrt(5.0 / 3.0), 1e-15);
  const std::vector<double> one = {7};
  EXPECT_FALSE(summarize(one).sd.has_value());
  EXPECT_THROW(summarize(std::vector<double>{}), DegenerateError);
}

TEST(Descriptive, CompensatedSum) {
  const std::vector<double> v = {1e16, 1.0, -1e16, 1.0};
  EXPECT_EQ(accurate_sum(v), 2.0);
}

TEST(Descriptive, QuantileType7) {
  const std::vector<double> v = {1, 2, 3, 4, 10};
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 1.0), 10.0);
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 0.5), 3.0);
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 0.9), 7.6);  // h = 3.6 -> 4 + 0.6 * 6
  EXPECT_DOUBLE_EQ(median(std::vector<double>{5, 1, 3}), 3.0);
}
