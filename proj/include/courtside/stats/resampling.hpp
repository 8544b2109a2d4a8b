#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "courtside/random.hpp"
#include "courtside/stats/hypothesis.hpp"

namespace courtside::stats {

inline constexpr std::size_t kDefaultResamples = 10000;

struct BootstrapInterval {
  double estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double level = 0.95;
  std::size_t resamples = 0;

  nlohmann::json to_json() const;
};

// Percentile bootstrap of the sample mean.
BootstrapInterval bootstrap_mean(std::span<const double> values, std::size_t resamples, Rng& rng,
                                 double level = 0.95);

// Percentile bootstrap of mean(b) - mean(a), resampling each side separately.
BootstrapInterval bootstrap_mean_difference(std::span<const double> a, std::span<const double> b,
                                            std::size_t resamples, Rng& rng,
                                            double level = 0.95);

struct InteractionTest {
  double statistic = 0.0;  // (mean b2 - mean a2) - (mean b1 - mean a1)
  double p_value = 1.0;
  Sidedness sidedness = Sidedness::two_sided;
  std::size_t permutations = 0;

  nlohmann::json to_json() const;
};

// Difference in mean differences between two conditions. Under the null the
// condition labels are exchangeable within each group, so they are permuted
// inside group a (a1 with a2) and group b (b1 with b2) independently;
// p = (1 + #extreme) / (1 + permutations).
InteractionTest permutation_interaction_test(std::span<const double> a1, std::span<const double> b1,
                                             std::span<const double> a2, std::span<const double> b2,
                                             std::size_t permutations, Rng& rng,
                                             Sidedness sidedness = Sidedness::two_sided);

struct PlayerValue {
  std::string player;
  std::string group;
  double value = 0.0;
};

struct MicroAverage {
  std::map<std::string, Sample> by_group;  // one value per qualifying player
  std::size_t excluded_players = 0;
};

// Mean value per player, kept when the player has at least `min_questions`
// values. Output is ordered by group and player, independent of input order.
MicroAverage micro_average_by_player(const std::vector<PlayerValue>& values,
                                     std::size_t min_questions);

}  // namespace courtside::stats
