#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "courtside/error.hpp"
#include "courtside/stats/descriptive.hpp"
#include "courtside/stats/exact.hpp"
#include "courtside/stats/hypothesis.hpp"
#include "courtside/stats/ranks.hpp"

namespace courtside::stats {

ExactTail subset_sum_tail(std::span<const std::uint64_t> values, std::size_t k,
                          std::uint64_t observed) {
  const std::uint64_t max_sum = std::accumulate(values.begin(), values.end(), std::uint64_t{0});
  // ways[j][s]: number of j-subsets of the values seen so far summing to s.
  std::vector<std::vector<std::uint64_t>> ways(k + 1, std::vector<std::uint64_t>(max_sum + 1, 0));
  ways[0][0] = 1;
  std::size_t seen = 0;
  for (const auto v : values) {
    ++seen;
    for (std::size_t j = std::min(k, seen); j >= 1; --j) {
      auto& row = ways[j];
      const auto& prev = ways[j - 1];
      for (std::uint64_t s = max_sum; s >= v; --s) {
        row[s] += prev[s - v];
        if (s == v) break;
      }
    }
  }
  ExactTail tail;
  for (std::uint64_t s = 0; s <= max_sum; ++s) {
    const auto count = ways[k][s];
    tail.total += count;
    if (s <= observed) tail.at_most += count;
    if (s >= observed) tail.at_least += count;
  }
  return tail;
}

ExactTail sign_sum_tail(std::span<const std::uint64_t> values, std::uint64_t observed) {
  const std::uint64_t max_sum = std::accumulate(values.begin(), values.end(), std::uint64_t{0});
  std::vector<std::uint64_t> ways(max_sum + 1, 0);
  ways[0] = 1;
  std::uint64_t reach = 0;
  for (const auto v : values) {
    reach += v;
    for (std::uint64_t s = reach; s >= v; --s) {
      ways[s] += ways[s - v];
      if (s == v) break;
    }
  }
  ExactTail tail;
  for (std::uint64_t s = 0; s <= max_sum; ++s) {
    tail.total += ways[s];
    if (s <= observed) tail.at_most += ways[s];
    if (s >= observed) tail.at_least += ways[s];
  }
  return tail;
}

TestResult wilcoxon_signed_rank(const PairedSample& sample, Sidedness sidedness,
                                ExactPolicy policy, ZeroHandling zeros) {
  std::vector<double> first;
  std::vector<double> second;
  first.reserve(sample.pairs.size());
  second.reserve(sample.pairs.size());
  for (const auto& [x, y] : sample.pairs) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw DataError("paired sample '" + sample.pairing_key + "' contains a non-finite value");
    }
    first.push_back(x);
    second.push_back(y);
  }

  std::vector<double> magnitudes;
  std::vector<bool> positive;
  std::vector<bool> zero;
  for (std::size_t i = 0; i < first.size(); ++i) {
    const double d = first[i] - second[i];
    if (d == 0.0 && zeros == ZeroHandling::drop) continue;
    magnitudes.push_back(std::abs(d));
    positive.push_back(d > 0.0);
    zero.push_back(d == 0.0);
  }
  const auto all_ranks = doubled_midranks(magnitudes);
  std::vector<std::uint64_t> ranks;
  std::vector<double> nonzero_magnitudes;
  std::uint64_t w_plus2 = 0;
  for (std::size_t i = 0; i < all_ranks.size(); ++i) {
    if (zero[i]) continue;
    ranks.push_back(all_ranks[i]);
    nonzero_magnitudes.push_back(magnitudes[i]);
    if (positive[i]) w_plus2 += all_ranks[i];
  }
  const std::size_t m = ranks.size();
  if (m == 0) {
    throw DegenerateError("Wilcoxon signed-rank: every paired difference is zero ('" +
                          sample.pairing_key + "')");
  }

  TestResult result;
  result.statistic = static_cast<double>(w_plus2) / 2.0;
  result.sidedness = sidedness;
  result.n1 = result.n2 = sample.pairs.size();
  result.n_effective = m;
  result.label_a = sample.pairing_key + ":first";
  result.label_b = sample.pairing_key + ":second";
  result.mean_a = mean(first);
  result.mean_b = mean(second);
  result.median_a = median(first);
  result.median_b = median(second);

  const bool use_exact = policy == ExactPolicy::exact ||
                         (policy == ExactPolicy::automatic && m <= kWilcoxonExactMaxPairs);
  if (use_exact) {
    if (m > kExactHardLimit) {
      throw ConfigError("exact Wilcoxon is limited to " + std::to_string(kExactHardLimit) +
                        " nonzero differences");
    }
    result.method = Method::wilcoxon_exact;
    result.p_value = exact_p(sign_sum_tail(ranks, w_plus2), sidedness);
    return result;
  }

  // With fixed ranks r_i and fair signs, E[W+] = sum r/2 and Var[W+] = sum r^2/4;
  // for untied ranks this is m(m+1)/4 and m(m+1)(2m+1)/24, and midranks give the
  // usual tie correction.
  double sum_r = 0.0;
  double sum_r2 = 0.0;
  for (const auto r2 : ranks) {
    const double r = static_cast<double>(r2) / 2.0;
    sum_r += r;
    sum_r2 += r * r;
  }
  const double mu = sum_r / 2.0;
  const double sigma = std::sqrt(sum_r2 / 4.0);
  result.method = Method::wilcoxon_signed_rank;
  result.z = (result.statistic - mu) / sigma;
  result.p_value = asymptotic_p(result.statistic, mu, sigma, sidedness);
  return result;
}

}  // namespace courtside::stats
