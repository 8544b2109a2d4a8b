#include "courtside/corpus/text.hpp"

#include <array>
#include <fstream>

#include "courtside/corpus/porter.hpp"
#include "courtside/corpus/unicode.hpp"
#include "courtside/error.hpp"

namespace courtside::corpus {
namespace {

constexpr std::array<std::string_view, 22> kAbbreviations = {
    "mr", "mrs", "ms", "dr", "st", "vs", "jr", "sr", "prof", "mt", "no", "etc",
    "gen", "gov", "sen", "rep", "lt", "col", "capt", "sgt", "approx", "ft"};

bool is_apostrophe(char32_t c) { return c == '\'' || c == 0x2019; }
bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }
bool starts_with_mask(std::string_view text, std::size_t pos) {
  return text.substr(pos, kEntityMask.size()) == kEntityMask;
}

// End of the word starting at `pos`: word characters joined by single
// internal apostrophes or hyphens.
std::size_t scan_word(std::string_view text, std::size_t pos) {
  std::size_t end = pos;
  while (end < text.size()) {
    const auto ch = decode_utf8(text, end);
    if (is_word_char(ch.code)) {
      end += ch.length;
      continue;
    }
    if ((is_apostrophe(ch.code) || ch.code == '-') && end + ch.length < text.size()) {
      const auto next = decode_utf8(text, end + ch.length);
      if (is_word_char(next.code)) {
        end += ch.length;
        continue;
      }
    }
    break;
  }
  return end;
}

std::string normalize_word(std::string_view word) {
  std::string lower = lowercase(word);
  std::string out;
  out.reserve(lower.size());
  for (std::size_t pos = 0; pos < lower.size();) {
    const auto ch = decode_utf8(lower, pos);
    if (ch.code == 0x2019) {
      out.push_back('\'');
    } else {
      out.append(lower, pos, ch.length);
    }
    pos += ch.length;
  }
  return out;
}

// Whether the '.', '!' or '?' at `pos` ends a sentence.
bool is_boundary(std::string_view text, std::size_t pos) {
  if (text[pos] != '.') return true;
  const bool digit_before = pos > 0 && text[pos - 1] >= '0' && text[pos - 1] <= '9';
  const bool digit_after =
      pos + 1 < text.size() && text[pos + 1] >= '0' && text[pos + 1] <= '9';
  if (digit_before && digit_after) return false;

  std::size_t start = pos;
  while (start > 0) {
    const unsigned char prev = static_cast<unsigned char>(text[start - 1]);
    if (!((prev >= 'a' && prev <= 'z') || (prev >= 'A' && prev <= 'Z'))) break;
    --start;
  }
  if (start == pos) return true;
  if (start > 0 && static_cast<unsigned char>(text[start - 1]) >= 0x80) return true;
  const std::string_view word = text.substr(start, pos - start);
  if (word.size() == 1 && word[0] >= 'A' && word[0] <= 'Z') return false;
  const std::string lower = lowercase(word);
  for (const auto abbreviation : kAbbreviations) {
    if (lower == abbreviation) return false;
  }
  return true;
}

bool is_capitalized(std::string_view word) {
  return !word.empty() && is_uppercase(decode_utf8(word, 0).code);
}

bool is_first_person(std::string_view word) {
  if (word == "I") return true;
  if (word.size() > 1 && word[0] == 'I') {
    return is_apostrophe(decode_utf8(word, 1).code);
  }
  return false;
}

bool in_dictionary(std::string_view word, const WordList& dictionary) {
  const std::string lower = normalize_word(word);
  if (dictionary.contains(lower)) return true;
  if (const auto apostrophe = lower.find('\''); apostrophe != std::string::npos) {
    return apostrophe > 0 && dictionary.contains(lower.substr(0, apostrophe));
  }
  if (lower.find('-') != std::string::npos) {
    std::size_t start = 0;
    while (start <= lower.size()) {
      const auto dash = lower.find('-', start);
      const auto part = lower.substr(start, dash == std::string::npos ? dash : dash - start);
      if (!dictionary.contains(part)) return false;
      if (dash == std::string::npos) break;
      start = dash + 1;
    }
    return true;
  }
  return false;
}

// Length of a trailing possessive "'s" (ASCII or typographic apostrophe).
std::size_t possessive_length(std::string_view word) {
  if (word.size() >= 3 && word.substr(word.size() - 2) == "'s") return 2;
  if (word.size() >= 5 && word.substr(word.size() - 4) == "\xE2\x80\x99s") return 4;
  return 0;
}

}  // namespace

WordList WordList::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open word list: " + path.string());
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto word = trim(line);
    if (word.empty() || word.front() == '#') continue;
    words.insert(normalize_word(word));
  }
  return WordList(std::move(words));
}

std::filesystem::path default_dictionary_path() {
  return std::filesystem::path(COURTSIDE_DATA_DIR) / "english_dictionary.txt";
}

std::filesystem::path default_stopwords_path() {
  return std::filesystem::path(COURTSIDE_DATA_DIR) / "stopwords_en.txt";
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (starts_with_mask(text, pos)) {
      pos += kEntityMask.size();
      continue;
    }
    if (!is_terminal(text[pos]) || !is_boundary(text, pos)) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && is_terminal(text[end])) ++end;
    const auto sentence = trim(text.substr(start, end - start));
    if (!sentence.empty()) sentences.emplace_back(sentence);
    start = pos = end;
  }
  const auto rest = trim(text.substr(start));
  if (!rest.empty()) sentences.emplace_back(rest);
  return sentences;
}

std::vector<std::string> extract_question_texts(std::string_view snippet) {
  std::vector<std::string> questions;
  for (const auto& sentence : split_sentences(snippet)) {
    const auto last_question = sentence.find_last_of('?');
    if (last_question == std::string::npos) continue;
    // '?' must sit in the terminal punctuation run.
    bool terminal_run = true;
    for (std::size_t i = last_question + 1; i < sentence.size(); ++i) {
      if (!is_terminal(sentence[i])) terminal_run = false;
    }
    if (!terminal_run) continue;
    std::string question = sentence.substr(0, last_question + 1);
    bool has_word = false;
    for (std::size_t pos = 0; pos < question.size() && !has_word;) {
      const auto ch = decode_utf8(question, pos);
      has_word = is_word_char(ch.code);
      pos += ch.length;
    }
    if (has_word) questions.push_back(std::move(question));
  }
  return questions;
}

std::string mask_entities(std::string_view text, const WordList& dictionary) {
  std::string out;
  out.reserve(text.size());
  bool sentence_start = true;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (starts_with_mask(text, pos)) {
      out += kEntityMask;
      pos += kEntityMask.size();
      sentence_start = false;
      continue;
    }
    const auto ch = decode_utf8(text, pos);
    if (!is_word_char(ch.code)) {
      out.append(text, pos, ch.length);
      if (ch.length == 1 && is_terminal(text[pos]) && is_boundary(text, pos)) {
        sentence_start = true;
      }
      pos += ch.length;
      continue;
    }

    const std::size_t word_end = scan_word(text, pos);
    const std::string_view word = text.substr(pos, word_end - pos);
    const bool initial = sentence_start;
    sentence_start = false;
    if (!is_capitalized(word) || is_first_person(word) ||
        (initial && in_dictionary(word, dictionary))) {
      out += word;
      pos = word_end;
      continue;
    }

    std::size_t run_end = word_end;
    std::string_view last = word;
    while (possessive_length(last) == 0) {
      std::size_t next = run_end;
      while (next < text.size() && (text[next] == ' ' || text[next] == '\t')) ++next;
      if (next == run_end || next >= text.size() || starts_with_mask(text, next)) break;
      if (!is_word_char(decode_utf8(text, next).code)) break;
      const std::size_t next_end = scan_word(text, next);
      const std::string_view candidate = text.substr(next, next_end - next);
      if (!is_capitalized(candidate) || is_first_person(candidate)) break;
      run_end = next_end;
      last = candidate;
    }
    out += kEntityMask;
    out += last.substr(last.size() - possessive_length(last));
    pos = run_end;
  }
  return out;
}

std::vector<Token> tokenize(std::string_view text, const WordList& stop_words) {
  std::vector<Token> tokens;
  std::size_t previous_end = std::string_view::npos;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (starts_with_mask(text, pos)) {
      Token token;
      token.surface = token.normalized = token.stem = std::string(kEntityMask);
      token.is_entity_mask = true;
      tokens.push_back(std::move(token));
      pos += kEntityMask.size();
      previous_end = pos;
      continue;
    }
    const auto ch = decode_utf8(text, pos);
    if (is_space(ch.code)) {
      pos += ch.length;
      continue;
    }

    Token token;
    std::size_t end = pos + ch.length;
    bool word = is_word_char(ch.code);
    if (word) {
      end = scan_word(text, pos);
    } else if (is_apostrophe(ch.code) && previous_end == pos && end < text.size() &&
               is_word_char(decode_utf8(text, end).code)) {
      // Clitic attached to the previous token, e.g. the "'s" in "<NOUN>'s".
      end = scan_word(text, end);
      word = true;
    }
    token.surface = std::string(text.substr(pos, end - pos));
    if (word) {
      token.normalized = normalize_word(token.surface);
      token.stem = porter_stem(token.normalized);
      if (token.stem.empty()) token.stem = token.normalized;
      token.is_stop = stop_words.contains(token.normalized);
    } else {
      token.normalized = token.stem = token.surface;
      token.is_punct = true;
    }
    tokens.push_back(std::move(token));
    pos = previous_end = end;
  }
  return tokens;
}

}  // namespace courtside::corpus
