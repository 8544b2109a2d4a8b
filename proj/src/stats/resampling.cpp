#include "courtside/stats/resampling.hpp"

#include <algorithm>
#include <cmath>

#include "courtside/error.hpp"
#include "courtside/stats/descriptive.hpp"

namespace courtside::stats {
namespace {

double resampled_mean(std::span<const double> values, Rng& rng) {
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) sum += values[uniform_index(rng, values.size())];
  return sum / static_cast<double>(values.size());
}

BootstrapInterval percentile_interval(double estimate, std::vector<double>& draws, double level) {
  std::sort(draws.begin(), draws.end());
  BootstrapInterval out;
  out.estimate = estimate;
  out.level = level;
  out.resamples = draws.size();
  out.ci_low = quantile_sorted(draws, (1.0 - level) / 2.0);
  out.ci_high = quantile_sorted(draws, 1.0 - (1.0 - level) / 2.0);
  return out;
}

double subset_sum(std::span<const double> pooled, std::span<const std::size_t> picks) {
  double sum = 0.0;
  for (const auto i : picks) sum += pooled[i];
  return sum;
}

}  // namespace

nlohmann::json BootstrapInterval::to_json() const {
  return {{"estimate", estimate}, {"ci_low", ci_low},       {"ci_high", ci_high},
          {"level", level},       {"resamples", resamples}, {"method", "percentile_bootstrap"}};
}

nlohmann::json InteractionTest::to_json() const {
  return {{"method", to_string(Method::permutation)},
          {"statistic", statistic},
          {"p_value", p_value},
          {"sidedness", to_string(sidedness)},
          {"permutations", permutations}};
}

BootstrapInterval bootstrap_mean(std::span<const double> values, std::size_t resamples, Rng& rng,
                                 double level) {
  if (values.empty()) throw DegenerateError("bootstrap of an empty sample");
  std::vector<double> draws;
  draws.reserve(resamples);
  for (std::size_t r = 0; r < resamples; ++r) draws.push_back(resampled_mean(values, rng));
  return percentile_interval(mean(values), draws, level);
}

BootstrapInterval bootstrap_mean_difference(std::span<const double> a, std::span<const double> b,
                                            std::size_t resamples, Rng& rng, double level) {
  if (a.empty() || b.empty()) throw DegenerateError("bootstrap of an empty sample");
  std::vector<double> draws;
  draws.reserve(resamples);
  for (std::size_t r = 0; r < resamples; ++r) {
    const double ma = resampled_mean(a, rng);
    const double mb = resampled_mean(b, rng);
    draws.push_back(mb - ma);
  }
  return percentile_interval(mean(b) - mean(a), draws, level);
}

InteractionTest permutation_interaction_test(std::span<const double> a1, std::span<const double> b1,
                                             std::span<const double> a2, std::span<const double> b2,
                                             std::size_t permutations, Rng& rng,
                                             Sidedness sidedness) {
  if (a1.empty() || b1.empty() || a2.empty() || b2.empty()) {
    throw DegenerateError("interaction test needs four non-empty cells");
  }
  std::vector<double> pooled_a(a1.begin(), a1.end());
  pooled_a.insert(pooled_a.end(), a2.begin(), a2.end());
  std::vector<double> pooled_b(b1.begin(), b1.end());
  pooled_b.insert(pooled_b.end(), b2.begin(), b2.end());
  const double total_a = accurate_sum(pooled_a);
  const double total_b = accurate_sum(pooled_b);

  const auto statistic = [&](double sum_a1, double sum_b1) {
    const double mean_a1 = sum_a1 / static_cast<double>(a1.size());
    const double mean_a2 = (total_a - sum_a1) / static_cast<double>(a2.size());
    const double mean_b1 = sum_b1 / static_cast<double>(b1.size());
    const double mean_b2 = (total_b - sum_b1) / static_cast<double>(b2.size());
    return (mean_b2 - mean_a2) - (mean_b1 - mean_a1);
  };
  const double observed = statistic(accurate_sum(a1), accurate_sum(b1));

  // Index permutations reused across iterations; only the first cell size of
  // each is redrawn.
  std::vector<std::size_t> index_a(pooled_a.size());
  std::vector<std::size_t> index_b(pooled_b.size());
  for (std::size_t i = 0; i < index_a.size(); ++i) index_a[i] = i;
  for (std::size_t i = 0; i < index_b.size(); ++i) index_b[i] = i;
  const auto redraw = [&rng](std::vector<std::size_t>& index, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(index[i], index[i + uniform_index(rng, index.size() - i)]);
    }
  };

  const double tolerance = 1e-12 * std::max(1.0, std::abs(observed));
  std::size_t extreme = 0;
  for (std::size_t p = 0; p < permutations; ++p) {
    redraw(index_a, a1.size());
    redraw(index_b, b1.size());
    const double value =
        statistic(subset_sum(pooled_a, std::span(index_a).first(a1.size())),
                  subset_sum(pooled_b, std::span(index_b).first(b1.size())));
    bool hit = false;
    switch (sidedness) {
      case Sidedness::two_sided:
        hit = std::abs(value) >= std::abs(observed) - tolerance;
        break;
      case Sidedness::less:
        hit = value <= observed + tolerance;
        break;
      case Sidedness::greater:
        hit = value >= observed - tolerance;
        break;
    }
    if (hit) ++extreme;
  }
  InteractionTest out;
  out.statistic = observed;
  out.sidedness = sidedness;
  out.permutations = permutations;
  out.p_value = static_cast<double>(1 + extreme) / static_cast<double>(1 + permutations);
  return out;
}

MicroAverage micro_average_by_player(const std::vector<PlayerValue>& values,
                                     std::size_t min_questions) {
  if (min_questions == 0) throw ConfigError("min_questions must be at least 1");
  std::map<std::pair<std::string, std::string>, std::vector<double>> per_player;
  for (const auto& v : values) per_player[{v.group, v.player}].push_back(v.value);

  MicroAverage out;
  for (auto& [key, player_values] : per_player) {
    if (player_values.size() < min_questions) {
      ++out.excluded_players;
      continue;
    }
    std::sort(player_values.begin(), player_values.end());
    auto& sample = out.by_group[key.first];
    sample.label = key.first;
    sample.values.push_back(mean(player_values));
  }
  return out;
}

}  // namespace courtside::stats
