#pragma once

#include <cstdint>
#include <span>

#include "courtside/stats/hypothesis.hpp"

namespace courtside::stats {

// Counts of a discrete null distribution on either side of an observed value.
struct ExactTail {
  std::uint64_t at_most = 0;   // outcomes <= observed
  std::uint64_t at_least = 0;  // outcomes >= observed
  std::uint64_t total = 0;
};

// Null distribution of the sum of `k` items drawn without replacement from
// `values`, every k-subset equally likely. Dynamic programming over sums.
ExactTail subset_sum_tail(std::span<const std::uint64_t> values, std::size_t k,
                          std::uint64_t observed);

// Null distribution of sum_i s_i v_i with independent fair signs s_i in {0, 1}.
ExactTail sign_sum_tail(std::span<const std::uint64_t> values, std::uint64_t observed);

double exact_p(const ExactTail& tail, Sidedness sidedness);
// Normal approximation with a 0.5 continuity correction.
double asymptotic_p(double statistic, double mu, double sigma, Sidedness sidedness);

}  // namespace courtside::stats
