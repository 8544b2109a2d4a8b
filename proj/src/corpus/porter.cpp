#include "courtside/corpus/porter.hpp"

#include <array>
#include <utility>

namespace courtside::corpus {
namespace {

class PorterStemmer {
 public:
  explicit PorterStemmer(std::string_view word) : b_(word) {}

  std::string run() {
    step1a();
    step1b();
    step1c();
    step2();
    step3();
    step4();
    step5a();
    step5b();
    return b_;
  }

 private:
  bool is_consonant(std::size_t i) const {
    switch (b_[i]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 || !is_consonant(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b_[0, end).
  int measure(std::size_t end) const {
    int m = 0;
    std::size_t i = 0;
    while (i < end && is_consonant(i)) ++i;
    while (i < end) {
      while (i < end && !is_consonant(i)) ++i;
      if (i >= end) break;
      while (i < end && is_consonant(i)) ++i;
      ++m;
    }
    return m;
  }

  bool has_vowel(std::size_t end) const {
    for (std::size_t i = 0; i < end; ++i) {
      if (!is_consonant(i)) return true;
    }
    return false;
  }

  bool ends_double_consonant(std::size_t end) const {
    return end >= 2 && b_[end - 1] == b_[end - 2] && is_consonant(end - 1);
  }

  // *o: stem ends consonant-vowel-consonant, final consonant not w, x or y.
  bool ends_cvc(std::size_t end) const {
    if (end < 3) return false;
    if (!is_consonant(end - 1) || is_consonant(end - 2) || !is_consonant(end - 3)) return false;
    const char last = b_[end - 1];
    return last != 'w' && last != 'x' && last != 'y';
  }

  bool ends_with(std::string_view suffix) const {
    return b_.size() >= suffix.size() &&
           std::string_view(b_).substr(b_.size() - suffix.size()) == suffix;
  }

  std::size_t stem_end(std::string_view suffix) const { return b_.size() - suffix.size(); }

  void replace_suffix(std::string_view suffix, std::string_view replacement) {
    b_.resize(stem_end(suffix));
    b_ += replacement;
  }

  void step1a() {
    if (ends_with("sses")) {
      replace_suffix("sses", "ss");
    } else if (ends_with("ies")) {
      replace_suffix("ies", "i");
    } else if (ends_with("ss")) {
      // unchanged
    } else if (ends_with("s")) {
      replace_suffix("s", "");
    }
  }

  void step1b() {
    if (ends_with("eed")) {
      if (measure(stem_end("eed")) > 0) replace_suffix("eed", "ee");
      return;
    }
    bool stripped = false;
    if (ends_with("ed") && has_vowel(stem_end("ed"))) {
      replace_suffix("ed", "");
      stripped = true;
    } else if (ends_with("ing") && has_vowel(stem_end("ing"))) {
      replace_suffix("ing", "");
      stripped = true;
    }
    if (!stripped) return;

    if (ends_with("at")) {
      b_ += 'e';
    } else if (ends_with("bl")) {
      b_ += 'e';
    } else if (ends_with("iz")) {
      b_ += 'e';
    } else if (ends_double_consonant(b_.size())) {
      const char last = b_.back();
      if (last != 'l' && last != 's' && last != 'z') b_.pop_back();
    } else if (measure(b_.size()) == 1 && ends_cvc(b_.size())) {
      b_ += 'e';
    }
  }

  void step1c() {
    if (ends_with("y") && has_vowel(stem_end("y"))) b_.back() = 'i';
  }

  using Rule = std::pair<std::string_view, std::string_view>;

  // Applies the longest matching rule; the measure condition is checked
  // only for that rule.
  template <std::size_t N>
  void apply_longest(const std::array<Rule, N>& rules, int min_measure) {
    const Rule* best = nullptr;
    for (const auto& rule : rules) {
      if (ends_with(rule.first) && (best == nullptr || rule.first.size() > best->first.size())) {
        best = &rule;
      }
    }
    if (best != nullptr && measure(stem_end(best->first)) > min_measure) {
      replace_suffix(best->first, best->second);
    }
  }

  void step2() {
    static constexpr std::array<Rule, 20> kRules = {{
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},   {"anci", "ance"},
        {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},     {"entli", "ent"},
        {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
        {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
    }};
    apply_longest(kRules, 0);
  }

  void step3() {
    static constexpr std::array<Rule, 7> kRules = {{
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},   {"ness", ""},
    }};
    apply_longest(kRules, 0);
  }

  void step4() {
    static constexpr std::array<std::string_view, 19> kSuffixes = {
        "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement", "ment",
        "ent", "ion",  "ou",   "ism", "ate", "iti",  "ous",  "ive", "ize"};
    std::string_view best;
    for (const auto suffix : kSuffixes) {
      if (ends_with(suffix) && suffix.size() > best.size()) best = suffix;
    }
    if (best.empty()) return;
    const std::size_t end = stem_end(best);
    if (measure(end) <= 1) return;
    if (best == "ion" && (end == 0 || (b_[end - 1] != 's' && b_[end - 1] != 't'))) return;
    b_.resize(end);
  }

  void step5a() {
    if (!ends_with("e")) return;
    const std::size_t end = stem_end("e");
    const int m = measure(end);
    if (m > 1 || (m == 1 && !ends_cvc(end))) b_.pop_back();
  }

  void step5b() {
    if (measure(b_.size()) > 1 && ends_double_consonant(b_.size()) && b_.back() == 'l') {
      b_.pop_back();
    }
  }

  std::string b_;
};

}  // namespace

std::string porter_stem(std::string_view word) {
  if (word.empty()) return {};
  return PorterStemmer(word).run();
}

}  // namespace courtside::corpus
