#include "courtside/lm/ngram_counts.hpp"

#include <algorithm>
#include <map>

#include "courtside/error.hpp"

namespace courtside::lm {

std::uint64_t BigramCounts::bigram(WordId context, WordId word) const {
  const auto it = std::lower_bound(
      bigrams.begin(), bigrams.end(), std::pair{context, word},
      [](const BigramEntry& e, const std::pair<WordId, WordId>& key) {
        return std::pair{e.context, e.word} < key;
      });
  if (it == bigrams.end() || it->context != context || it->word != word) return 0;
  return it->count;
}

BigramCounts count_ngrams(const std::vector<Sentence>& corpus) {
  std::vector<std::string> words;
  for (const auto& sentence : corpus) words.insert(words.end(), sentence.begin(), sentence.end());

  BigramCounts counts;
  counts.vocab = Vocabulary::from_words(std::move(words));
  const std::size_t v = counts.vocab.size();
  counts.unigram.assign(v, 0);

  std::map<std::pair<WordId, WordId>, std::uint64_t> pairs;
  std::vector<WordId> ids;
  for (const auto& sentence : corpus) {
    if (sentence.empty()) {
      ++counts.skipped_empty;
      continue;
    }
    ++counts.sentences;
    ids.clear();
    ids.push_back(Vocabulary::kBeginId);
    for (const auto& word : sentence) ids.push_back(counts.vocab.id(word));
    ids.push_back(Vocabulary::kEndId);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      ++counts.unigram[ids[i]];
      if (i > 0) ++pairs[{ids[i - 1], ids[i]}];
    }
  }
  if (counts.sentences == 0) throw DataError("training corpus has no non-empty sentences");

  counts.context_total.assign(v, 0);
  counts.continuation.assign(v, 0);
  counts.followers.assign(v, 0);
  counts.bigrams.reserve(pairs.size());
  for (const auto& [key, count] : pairs) {
    counts.bigrams.push_back({key.first, key.second, count});
    counts.context_total[key.first] += count;
    ++counts.followers[key.first];
    ++counts.continuation[key.second];
    if (count <= 4) ++counts.counts_of_counts[1][count];
  }
  for (WordId w = 0; w < v; ++w) {
    const auto cc = counts.continuation[w];
    if (cc >= 1 && cc <= 4) ++counts.counts_of_counts[0][cc];
  }
  return counts;
}

}  // namespace courtside::lm
