#include "courtside/lm/kneser_ney.hpp"

#include <algorithm>
#include <cmath>

#include "courtside/error.hpp"

namespace courtside::lm {

Discounts modified_kn_discounts(const std::array<std::uint64_t, 5>& n, double fallback) {
  const double n1 = static_cast<double>(n[1]);
  const double n2 = static_cast<double>(n[2]);
  const double n3 = static_cast<double>(n[3]);
  const double n4 = static_cast<double>(n[4]);
  const bool have_y = n1 + 2.0 * n2 > 0.0;
  const double y = have_y ? n1 / (n1 + 2.0 * n2) : 0.0;

  const auto settle = [fallback](bool defined, double value, double k) {
    if (!defined || !(value > 0.0)) return fallback;
    return std::min(value, k);
  };
  Discounts d;
  d.d1 = settle(n[1] > 0, 1.0 - 2.0 * y * n2 / n1, 1.0);
  d.d2 = settle(n[2] > 0 && have_y, 2.0 - 3.0 * y * n3 / n2, 2.0);
  d.d3plus = settle(n[3] > 0 && have_y, 3.0 - 4.0 * y * n4 / n3, 3.0);
  return d;
}

KneserNeyModel::KneserNeyModel(Vocabulary vocab, std::array<Discounts, 2> discounts,
                               std::vector<double> unigram, std::vector<double> backoff,
                               std::vector<BigramProb> bigrams)
    : vocab_(std::move(vocab)),
      discounts_(discounts),
      unigram_(std::move(unigram)),
      backoff_(std::move(backoff)) {
  const std::size_t v = vocab_.size();
  if (unigram_.size() != v || backoff_.size() != v) {
    throw DataError("language model tables do not match the vocabulary size");
  }
  for (std::size_t w = 0; w < v; ++w) {
    if (!std::isfinite(unigram_[w]) || unigram_[w] < 0.0 || unigram_[w] > 1.0 ||
        !std::isfinite(backoff_[w]) || backoff_[w] < 0.0 || backoff_[w] > 1.0) {
      throw DataError("language model probability out of range");
    }
  }
  std::sort(bigrams.begin(), bigrams.end(), [](const BigramProb& a, const BigramProb& b) {
    return std::pair{a.context, a.word} < std::pair{b.context, b.word};
  });
  offsets_.assign(v + 1, 0);
  followers_.reserve(bigrams.size());
  bigram_prob_.reserve(bigrams.size());
  for (std::size_t i = 0; i < bigrams.size(); ++i) {
    const auto& b = bigrams[i];
    if (b.context >= v || b.word >= v) throw DataError("bigram refers to an unknown word id");
    if (i > 0 && bigrams[i - 1].context == b.context && bigrams[i - 1].word == b.word) {
      throw DataError("duplicate bigram in language model");
    }
    if (!(b.prob > 0.0 && b.prob <= 1.0)) throw DataError("bigram probability out of range");
    ++offsets_[b.context + 1];
    followers_.push_back(b.word);
    bigram_prob_.push_back(b.prob);
  }
  for (std::size_t u = 0; u < v; ++u) offsets_[u + 1] += offsets_[u];
}

std::vector<KneserNeyModel::BigramProb> KneserNeyModel::bigram_table() const {
  std::vector<BigramProb> out;
  out.reserve(followers_.size());
  for (WordId u = 0; u + 1 < offsets_.size(); ++u) {
    for (auto i = offsets_[u]; i < offsets_[u + 1]; ++i) {
      out.push_back({u, followers_[i], bigram_prob_[i]});
    }
  }
  return out;
}

double KneserNeyModel::prob(WordId context, WordId word) const {
  if (word == Vocabulary::kBeginId) return 0.0;
  const auto first = followers_.begin() + static_cast<std::ptrdiff_t>(offsets_[context]);
  const auto last = followers_.begin() + static_cast<std::ptrdiff_t>(offsets_[context + 1]);
  const auto it = std::lower_bound(first, last, word);
  if (it != last && *it == word) {
    return bigram_prob_[static_cast<std::size_t>(it - followers_.begin())];
  }
  return backoff_[context] * unigram_[word];
}

double KneserNeyModel::log_prob(WordId context, WordId word) const {
  return std::log(prob(context, word));
}

bool operator==(const KneserNeyModel& a, const KneserNeyModel& b) {
  return a.vocab_ == b.vocab_ && a.discounts_ == b.discounts_ && a.unigram_ == b.unigram_ &&
         a.backoff_ == b.backoff_ && a.offsets_ == b.offsets_ && a.followers_ == b.followers_ &&
         a.bigram_prob_ == b.bigram_prob_;
}

KneserNeyModel estimate_kn(const BigramCounts& counts, double fallback_discount) {
  const Vocabulary& vocab = counts.vocab;
  const std::size_t v = vocab.size();
  const std::array<Discounts, 2> discounts = {
      modified_kn_discounts(counts.counts_of_counts[0], fallback_discount),
      modified_kn_discounts(counts.counts_of_counts[1], fallback_discount)};

  // Lower order: discounted continuation counts plus a uniform share of the
  // residual over the event space (all words but <s>).
  double continuation_total = 0.0;
  double unigram_residual = 0.0;
  for (WordId w = 0; w < v; ++w) {
    if (w == Vocabulary::kBeginId) continue;
    continuation_total += static_cast<double>(counts.continuation[w]);
    unigram_residual += discounts[0].for_count(counts.continuation[w]);
  }
  if (continuation_total <= 0.0) throw DataError("no bigram continuations to estimate from");
  const double uniform_share = unigram_residual / continuation_total / static_cast<double>(v - 1);

  std::vector<double> unigram(v, 0.0);
  for (WordId w = 0; w < v; ++w) {
    if (w == Vocabulary::kBeginId) continue;
    const double cc = static_cast<double>(counts.continuation[w]);
    const double discounted = std::max(cc - discounts[0].for_count(counts.continuation[w]), 0.0);
    unigram[w] = discounted / continuation_total + uniform_share;
  }

  std::vector<double> backoff(v, 1.0);
  std::vector<double> residual(v, 0.0);
  for (const auto& e : counts.bigrams) residual[e.context] += discounts[1].for_count(e.count);
  for (WordId u = 0; u < v; ++u) {
    if (counts.context_total[u] > 0) {
      backoff[u] = residual[u] / static_cast<double>(counts.context_total[u]);
    }
  }

  std::vector<KneserNeyModel::BigramProb> bigrams;
  bigrams.reserve(counts.bigrams.size());
  for (const auto& e : counts.bigrams) {
    const double total = static_cast<double>(counts.context_total[e.context]);
    const double direct =
        std::max(static_cast<double>(e.count) - discounts[1].for_count(e.count), 0.0) / total;
    bigrams.push_back({e.context, e.word, direct + backoff[e.context] * unigram[e.word]});
  }
  return KneserNeyModel(vocab, discounts, std::move(unigram), std::move(backoff),
                        std::move(bigrams));
}

}  // namespace courtside::lm
