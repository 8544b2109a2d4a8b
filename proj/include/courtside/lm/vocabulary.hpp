#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace courtside::lm {

using WordId = std::uint32_t;

inline constexpr std::string_view kBegin = "<s>";
inline constexpr std::string_view kEnd = "</s>";
inline constexpr std::string_view kUnknown = "<unk>";
inline constexpr std::string_view kMask = "<NOUN>";

// Dense word ids. The four reserved tokens hold ids 0..3; the remaining words
// follow in byte order so that equal corpora give equal ids.
class Vocabulary {
 public:
  static constexpr WordId kBeginId = 0;
  static constexpr WordId kEndId = 1;
  static constexpr WordId kUnknownId = 2;
  static constexpr WordId kMaskId = 3;

  Vocabulary();
  // Reserved tokens in `words` are ignored; duplicates collapse.
  static Vocabulary from_words(std::vector<std::string> words);

  // Unseen words resolve to <unk>.
  WordId id(std::string_view word) const;
  bool contains(std::string_view word) const;
  const std::string& word(WordId id) const { return words_.at(id); }
  std::size_t size() const { return words_.size(); }
  const std::vector<std::string>& words() const { return words_; }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) { return a.words_ == b.words_; }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, WordId> ids_;
};

}  // namespace courtside::lm
