#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "courtside/lm/vocabulary.hpp"

namespace courtside::lm {

using Sentence = std::vector<std::string>;

struct BigramEntry {
  WordId context;
  WordId word;
  std::uint64_t count;
};

// Exact bigram statistics of a padded corpus (<s> w1 .. wN </s> per sentence).
struct BigramCounts {
  Vocabulary vocab;
  std::vector<std::uint64_t> unigram;       // c(w), token occurrences including <s> and </s>
  std::vector<BigramEntry> bigrams;         // c(u,w) > 0, sorted by (context, word)
  std::vector<std::uint64_t> context_total; // sum over w of c(u,w)
  std::vector<std::uint64_t> continuation;  // N1+(., w): distinct left contexts of w
  std::vector<std::uint64_t> followers;     // N1+(u, .): distinct successors of u
  // counts_of_counts[order-1][k] = number of n-gram types of that order with
  // count k (k = 1..4); the unigram order counts continuation counts.
  std::array<std::array<std::uint64_t, 5>, 2> counts_of_counts{};
  std::size_t sentences = 0;
  std::size_t skipped_empty = 0;

  std::uint64_t bigram(WordId context, WordId word) const;
};

// Empty sentences are skipped and counted. Throws DataError when nothing is
// left to count.
BigramCounts count_ngrams(const std::vector<Sentence>& corpus);

}  // namespace courtside::lm
