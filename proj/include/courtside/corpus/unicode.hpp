#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace courtside::corpus {

// Minimal UTF-8 support. Case mapping and accent folding cover ASCII, Latin-1
// Supplement and Latin Extended-A, which is what player names and English
// text need. Invalid bytes decode as U+FFFD and advance by one byte.

struct DecodedChar {
  char32_t code;
  std::size_t length;
};

DecodedChar decode_utf8(std::string_view text, std::size_t pos);
void append_utf8(std::string& out, char32_t code);

bool is_uppercase(char32_t code);
char32_t to_lower(char32_t code);
bool is_punctuation(char32_t code);
bool is_space(char32_t code);
// Letters and digits, including every non-ASCII code point outside the
// punctuation and space blocks.
bool is_word_char(char32_t code);

std::string lowercase(std::string_view text);
// Lowercases and replaces accented Latin letters by their ASCII base form.
// Combining diacritics are dropped.
std::string fold_accents_lower(std::string_view text);

std::string_view trim(std::string_view text);

}  // namespace courtside::corpus
