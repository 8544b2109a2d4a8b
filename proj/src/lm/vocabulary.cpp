#include "courtside/lm/vocabulary.hpp"

#include <algorithm>

namespace courtside::lm {

Vocabulary::Vocabulary() {
  for (const auto reserved : {kBegin, kEnd, kUnknown, kMask}) {
    ids_.emplace(std::string(reserved), static_cast<WordId>(words_.size()));
    words_.emplace_back(reserved);
  }
}

Vocabulary Vocabulary::from_words(std::vector<std::string> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  Vocabulary vocab;
  for (auto& word : words) {
    if (vocab.ids_.count(word)) continue;
    vocab.ids_.emplace(word, static_cast<WordId>(vocab.words_.size()));
    vocab.words_.push_back(std::move(word));
  }
  return vocab;
}

WordId Vocabulary::id(std::string_view word) const {
  const auto it = ids_.find(std::string(word));
  return it == ids_.end() ? kUnknownId : it->second;
}

bool Vocabulary::contains(std::string_view word) const { return ids_.count(std::string(word)) != 0; }

}  // namespace courtside::lm
