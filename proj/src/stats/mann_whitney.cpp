#include <algorithm>
#include <cmath>

#include "courtside/error.hpp"
#include "courtside/stats/descriptive.hpp"
#include "courtside/stats/exact.hpp"
#include "courtside/stats/hypothesis.hpp"
#include "courtside/stats/ranks.hpp"

namespace courtside::stats {

std::string_view to_string(Sidedness s) {
  switch (s) {
    case Sidedness::two_sided:
      return "two_sided";
    case Sidedness::less:
      return "less";
    case Sidedness::greater:
      return "greater";
  }
  return "two_sided";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::mann_whitney_u:
      return "mann_whitney_u";
    case Method::mann_whitney_exact:
      return "mann_whitney_exact";
    case Method::wilcoxon_signed_rank:
      return "wilcoxon_signed_rank";
    case Method::wilcoxon_exact:
      return "wilcoxon_exact";
    case Method::permutation:
      return "permutation";
  }
  return "unknown";
}

Sidedness parse_sidedness(std::string_view text) {
  if (text == "two_sided" || text == "two-sided") return Sidedness::two_sided;
  if (text == "less") return Sidedness::less;
  if (text == "greater") return Sidedness::greater;
  throw ConfigError("invalid sidedness '" + std::string(text) + "' (two_sided, less, greater)");
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

std::string TestResult::direction() const {
  if (mean_a < mean_b) return "a_lower";
  if (mean_a > mean_b) return "a_higher";
  return "equal";
}

nlohmann::json TestResult::to_json() const {
  nlohmann::json j;
  j["method"] = to_string(method);
  j["label_a"] = label_a;
  j["label_b"] = label_b;
  j["statistic"] = statistic;
  j["p_value"] = p_value;
  j["sidedness"] = to_string(sidedness);
  j["n1"] = n1;
  j["n2"] = n2;
  j["mean_a"] = mean_a;
  j["mean_b"] = mean_b;
  j["median_a"] = median_a;
  j["median_b"] = median_b;
  j["direction"] = direction();
  j["z"] = z ? nlohmann::json(*z) : nlohmann::json();
  j["n_effective"] = n_effective ? nlohmann::json(*n_effective) : nlohmann::json();
  return j;
}

namespace {

void check_finite(const std::vector<double>& values, const std::string& label) {
  for (const double v : values) {
    if (!std::isfinite(v)) throw DataError("sample '" + label + "' contains a non-finite value");
  }
}

}  // namespace

double asymptotic_p(double statistic, double mu, double sigma, Sidedness sidedness) {
  switch (sidedness) {
    case Sidedness::less:
      return std::clamp(normal_cdf((statistic - mu + 0.5) / sigma), 0.0, 1.0);
    case Sidedness::greater:
      return std::clamp(normal_cdf(-(statistic - mu - 0.5) / sigma), 0.0, 1.0);
    case Sidedness::two_sided:
      break;
  }
  const double z = (std::abs(statistic - mu) - 0.5) / sigma;
  return std::clamp(2.0 * normal_cdf(-z), 0.0, 1.0);
}

double exact_p(const ExactTail& tail, Sidedness sidedness) {
  const double total = static_cast<double>(tail.total);
  const double p_less = static_cast<double>(tail.at_most) / total;
  const double p_greater = static_cast<double>(tail.at_least) / total;
  switch (sidedness) {
    case Sidedness::less:
      return p_less;
    case Sidedness::greater:
      return p_greater;
    case Sidedness::two_sided:
      break;
  }
  return std::min(1.0, 2.0 * std::min(p_less, p_greater));
}

TestResult mann_whitney_u(const Sample& a, const Sample& b, Sidedness sidedness,
                          ExactPolicy policy) {
  if (a.values.empty() || b.values.empty()) {
    throw DegenerateError("Mann-Whitney needs two non-empty samples ('" + a.label + "' has " +
                          std::to_string(a.values.size()) + ", '" + b.label + "' has " +
                          std::to_string(b.values.size()) + ")");
  }
  check_finite(a.values, a.label);
  check_finite(b.values, b.label);

  const std::size_t na = a.values.size();
  const std::size_t nb = b.values.size();
  const std::size_t n = na + nb;
  std::vector<double> pooled(a.values);
  pooled.insert(pooled.end(), b.values.begin(), b.values.end());
  const auto ranks = doubled_midranks(pooled);
  const auto ties = tie_group_sizes(pooled);
  if (!ties.empty() && ties.front() == n) {
    throw DegenerateError("Mann-Whitney: all values are identical ('" + a.label + "' vs '" +
                          b.label + "'), variance is zero");
  }

  std::uint64_t rank_sum_a2 = 0;
  for (std::size_t i = 0; i < na; ++i) rank_sum_a2 += ranks[i];
  const double u_a = static_cast<double>(rank_sum_a2) / 2.0 -
                     static_cast<double>(na) * static_cast<double>(na + 1) / 2.0;

  TestResult result;
  result.statistic = u_a;
  result.sidedness = sidedness;
  result.n1 = na;
  result.n2 = nb;
  result.label_a = a.label;
  result.label_b = b.label;
  result.mean_a = mean(a.values);
  result.mean_b = mean(b.values);
  result.median_a = median(a.values);
  result.median_b = median(b.values);

  const bool use_exact = policy == ExactPolicy::exact ||
                         (policy == ExactPolicy::automatic && n <= kMannWhitneyExactMaxTotal);
  if (use_exact) {
    if (n > kExactHardLimit) {
      throw ConfigError("exact Mann-Whitney is limited to " + std::to_string(kExactHardLimit) +
                        " observations");
    }
    result.method = Method::mann_whitney_exact;
    result.p_value = exact_p(subset_sum_tail(ranks, na, rank_sum_a2), sidedness);
    return result;
  }

  double tie_term = 0.0;
  for (const auto t : ties) {
    const double td = static_cast<double>(t);
    tie_term += td * td * td - td;
  }
  const double nd = static_cast<double>(n);
  const double mu = static_cast<double>(na) * static_cast<double>(nb) / 2.0;
  const double variance = static_cast<double>(na) * static_cast<double>(nb) / 12.0 *
                          ((nd + 1.0) - tie_term / (nd * (nd - 1.0)));
  const double sigma = std::sqrt(variance);
  result.method = Method::mann_whitney_u;
  result.z = (u_a - mu) / sigma;
  result.p_value = asymptotic_p(u_a, mu, sigma, sidedness);
  return result;
}

}  // namespace courtside::stats
