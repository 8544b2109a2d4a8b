#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "courtside/lm/ngram_counts.hpp"
#include "courtside/lm/vocabulary.hpp"

namespace courtside::lm {

// Modified Kneser-Ney discounts for counts 1, 2 and 3+.
struct Discounts {
  double d1 = 0.5;
  double d2 = 0.5;
  double d3plus = 0.5;

  double for_count(std::uint64_t count) const {
    if (count == 0) return 0.0;
    if (count == 1) return d1;
    if (count == 2) return d2;
    return d3plus;
  }
  friend bool operator==(const Discounts&, const Discounts&) = default;
};

inline constexpr double kDefaultFallbackDiscount = 0.5;

// Chen-Goodman estimates from counts-of-counts n1..n4 (index 1..4):
//   Y = n1 / (n1 + 2 n2), D1 = 1 - 2Y n2/n1, D2 = 2 - 3Y n3/n2, D3+ = 3 - 4Y n4/n3.
// A discount whose formula is undefined (n_k = 0) or not positive takes the
// fallback value; values above k are clamped to k.
Discounts modified_kn_discounts(const std::array<std::uint64_t, 5>& counts_of_counts,
                                double fallback = kDefaultFallbackDiscount);

// Interpolated bigram model. The predicted event space is every vocabulary
// entry except <s>. For a context u with training count c(u):
//   P(w|u) = max(c(u,w) - D(c(u,w)), 0) / c(u) + gamma(u) P_uni(w)
// and contexts never seen as history use P_uni directly (gamma = 1). P_uni
// discounts continuation counts the same way and spreads its residual mass
// uniformly, which is how <unk> and other unseen events get probability.
class KneserNeyModel {
 public:
  struct BigramProb {
    WordId context;
    WordId word;
    double prob;
  };

  KneserNeyModel() = default;
  // Assembles a model from its tables; validates shapes and ranges.
  KneserNeyModel(Vocabulary vocab, std::array<Discounts, 2> discounts,
                 std::vector<double> unigram, std::vector<double> backoff,
                 std::vector<BigramProb> bigrams);

  const Vocabulary& vocab() const { return vocab_; }
  const std::array<Discounts, 2>& discounts() const { return discounts_; }
  // P_uni(w); zero for <s>.
  double unigram(WordId word) const { return unigram_[word]; }
  const std::vector<double>& unigram_table() const { return unigram_; }
  double backoff(WordId context) const { return backoff_[context]; }
  const std::vector<double>& backoff_table() const { return backoff_; }
  std::vector<BigramProb> bigram_table() const;
  std::size_t bigram_count() const { return followers_.size(); }

  // P(word | context); zero when word is <s>.
  double prob(WordId context, WordId word) const;
  double log_prob(WordId context, WordId word) const;

  friend bool operator==(const KneserNeyModel& a, const KneserNeyModel& b);

 private:
  Vocabulary vocab_;
  std::array<Discounts, 2> discounts_{};
  std::vector<double> unigram_;
  std::vector<double> backoff_;
  // Seen bigrams in CSR layout: followers_[offsets_[u] .. offsets_[u+1]) sorted.
  std::vector<std::uint64_t> offsets_;
  std::vector<WordId> followers_;
  std::vector<double> bigram_prob_;
};

KneserNeyModel estimate_kn(const BigramCounts& counts,
                           double fallback_discount = kDefaultFallbackDiscount);

}  // namespace courtside::lm
