#include "courtside/stats/descriptive.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "courtside/error.hpp"

namespace courtside::stats {

double accurate_sum(std::span<const double> values) {
  double sum = 0.0;
  double compensation = 0.0;
  for (const double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      compensation += (sum - t) + v;
    } else {
      compensation += (v - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

double mean(std::span<const double> values) {
  if (values.empty()) return std::nan("");
  return accurate_sum(values) / static_cast<double>(values.size());
}

double median(std::span<const double> values) {
  if (values.empty()) return std::nan("");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  return n % 2 == 1 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
}

Summary summarize(std::span<const double> values) {
  if (values.empty()) throw DegenerateError("cannot summarize an empty sample");
  Summary s;
  s.n = values.size();
  s.mean = mean(values);
  s.median = median(values);
  if (s.n > 1) {
    std::vector<double> squares;
    squares.reserve(s.n);
    for (const double v : values) squares.push_back((v - s.mean) * (v - s.mean));
    s.sd = std::sqrt(accurate_sum(squares) / static_cast<double>(s.n - 1));
  }
  return s;
}

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) return std::nan("");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

nlohmann::json Summary::to_json() const {
  return {{"n", n}, {"mean", mean}, {"median", median}, {"sd", sd ? nlohmann::json(*sd) : nlohmann::json()}};
}

}  // namespace courtside::stats
