#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace courtside::corpus {

inline constexpr std::string_view kEntityMask = "<NOUN>";

struct Token {
  std::string surface;
  std::string normalized;
  std::string stem;
  bool is_stop = false;
  bool is_entity_mask = false;
  bool is_punct = false;

  // Words and entity masks; punctuation is excluded from language-model
  // scoring and from IDF documents.
  bool is_scorable() const { return !is_punct; }
};

// A set of lowercase words loaded from a one-word-per-line file. Blank lines
// and lines starting with '#' are ignored.
class WordList {
 public:
  WordList() = default;
  explicit WordList(std::unordered_set<std::string> words) : words_(std::move(words)) {}

  static WordList load(const std::filesystem::path& path);

  bool contains(std::string_view word) const { return words_.count(std::string(word)) != 0; }
  bool empty() const { return words_.empty(); }
  std::size_t size() const { return words_.size(); }
  void insert(std::string word) { words_.insert(std::move(word)); }

 private:
  std::unordered_set<std::string> words_;
};

std::filesystem::path default_dictionary_path();
std::filesystem::path default_stopwords_path();

// Sentences split at '.', '!' and '?'. Decimal points, common abbreviations
// ("Mr.", "vs.") and single-letter initials do not end a sentence. Each entry
// keeps its terminal punctuation; trailing text without one is returned too.
std::vector<std::string> split_sentences(std::string_view text);

// The '?'-terminated sentences of a snippet, each trimmed and ending with the
// last '?' of its terminal punctuation run. Sentences without a word character
// are skipped.
std::vector<std::string> extract_question_texts(std::string_view snippet);

// Replaces maximal runs of capitalized words with a single "<NOUN>". A
// sentence-initial capitalized word stays unless its lowercase form is absent
// from the dictionary, in which case it is masked and may start a run. The
// pronoun "I" is never masked; a possessive "'s" on the last word of a run
// survives the mask.
std::string mask_entities(std::string_view text, const WordList& dictionary);

std::vector<Token> tokenize(std::string_view text, const WordList& stop_words);

}  // namespace courtside::corpus
