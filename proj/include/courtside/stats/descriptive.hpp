#pragma once

#include <optional>
#include <span>

#include <json.hpp>

namespace courtside::stats {

struct Summary {
  std::size_t n = 0;
  double mean = 0.0;
  double median = 0.0;
  std::optional<double> sd;  // sample standard deviation; absent for n = 1

  nlohmann::json to_json() const;
};

// Compensated (Neumaier) sum.
double accurate_sum(std::span<const double> values);
double mean(std::span<const double> values);
double median(std::span<const double> values);
// Throws DegenerateError for an empty sample.
Summary summarize(std::span<const double> values);

// Linear-interpolation quantile of sorted data (R type 7), q in [0, 1].
double quantile_sorted(std::span<const double> sorted, double q);

}  // namespace courtside::stats
