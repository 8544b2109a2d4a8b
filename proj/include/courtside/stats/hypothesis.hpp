#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace courtside::stats {

// `less`: the first sample (or first pair member) tends to be smaller.
enum class Sidedness { two_sided, less, greater };

enum class Method {
  mann_whitney_u,
  mann_whitney_exact,
  wilcoxon_signed_rank,
  wilcoxon_exact,
  permutation,
};

// When the exact null distribution is used instead of the normal
// approximation. `automatic` applies the size bounds below.
enum class ExactPolicy { automatic, exact, asymptotic };

// How zero paired differences are treated. `drop` is the classic Wilcoxon
// rule; `pratt` ranks zeros with the rest and then discards their ranks.
enum class ZeroHandling { drop, pratt };

inline constexpr std::size_t kMannWhitneyExactMaxTotal = 12;
inline constexpr std::size_t kWilcoxonExactMaxPairs = 20;
// Largest size for which exact enumeration counts still fit in 64 bits.
inline constexpr std::size_t kExactHardLimit = 60;

std::string_view to_string(Sidedness s);
std::string_view to_string(Method m);
Sidedness parse_sidedness(std::string_view text);

struct Sample {
  std::string label;
  std::vector<double> values;
};

struct PairedSample {
  std::vector<std::pair<double, double>> pairs;
  std::string pairing_key;
};

struct TestResult {
  Method method = Method::mann_whitney_u;
  double statistic = 0.0;
  double p_value = 1.0;
  Sidedness sidedness = Sidedness::two_sided;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  double mean_a = 0.0;
  double mean_b = 0.0;
  double median_a = 0.0;
  double median_b = 0.0;
  std::optional<double> z;               // normal approximation only
  std::optional<std::size_t> n_effective;  // Wilcoxon: pairs with nonzero difference
  std::string label_a;
  std::string label_b;

  // "a_lower", "a_higher" or "equal", comparing means.
  std::string direction() const;
  nlohmann::json to_json() const;
};

// U_a = R_a - n_a(n_a + 1)/2 with midranks. The exact p counts every
// assignment of the observed midranks to the first sample; the asymptotic p
// uses the tie-corrected variance and a 0.5 continuity correction. Throws
// DegenerateError for an empty sample or when all values are equal.
TestResult mann_whitney_u(const Sample& a, const Sample& b, Sidedness sidedness,
                          ExactPolicy policy = ExactPolicy::automatic);

// Differences d = first - second; W+ = sum of the ranks of |d| over d > 0.
// Throws DegenerateError when no difference is nonzero.
TestResult wilcoxon_signed_rank(const PairedSample& sample, Sidedness sidedness,
                                ExactPolicy policy = ExactPolicy::automatic,
                                ZeroHandling zeros = ZeroHandling::drop);

// Standard normal CDF.
double normal_cdf(double z);

}  // namespace courtside::stats
