#include <gtest/gtest.h>

#include "courtside/corpus/unicode.hpp"

using namespace courtside::corpus;

TEST(Unicode, DecodeAndAppendRoundTrip) {
  const std::string text = "a\xC3\xA9\xE2\x80\x99\xF0\x9F\x8E\xBE";  // a é ’ 🎾
  std::string rebuilt;
  std::size_t pos = 0;
  std::vector<char32_t> codes;
  while (pos < text.size()) {
    const auto ch = decode_utf8(text, pos);
    codes.push_back(ch.code);
    append_utf8(rebuilt, ch.code);
    pos += ch.length;
  }
  EXPECT_EQ(codes, (std::vector<char32_t>{U'a', U'é', U'’', U'\U0001F3BE'}));
  EXPECT_EQ(rebuilt, text);
}

TEST(Unicode, InvalidBytesBecomeReplacementCharacter) {
  const auto ch = decode_utf8("\xFF" "a", 0);
  EXPECT_EQ(ch.code, 0xFFFDu);
  EXPECT_EQ(ch.length, 1u);
  const auto truncated = decode_utf8("\xC3", 0);
  EXPECT_EQ(truncated.code, 0xFFFDu);
}

TEST(Unicode, CaseMapping) {
  EXPECT_TRUE(is_uppercase(U'Q'));
  EXPECT_TRUE(is_uppercase(U'É'));   // É
  EXPECT_TRUE(is_uppercase(U'Š'));   // Š
  EXPECT_FALSE(is_uppercase(U'ß'));  // ß
  EXPECT_EQ(lowercase("ÉLODIE Šafářová"), "élodie šafářová");
  EXPECT_EQ(to_lower(U'×'), U'×');  // multiplication sign stays
}

TEST(Unicode, AccentFolding) {
  EXPECT_EQ(fold_accents_lower("José Müller"), "jose muller");
  EXPECT_EQ(fold_accents_lower("Garbiñe Muguruza"), "garbine muguruza");
  EXPECT_EQ(fold_accents_lower("Dominika Cibulková"), "dominika cibulkova");
  EXPECT_EQ(fold_accents_lower("Barbora Strýcová"), "barbora strycova");
  EXPECT_EQ(fold_accents_lower("Lucie Šafářová"), "lucie safarova");
  EXPECT_EQ(fold_accents_lower("Zoe\xCC\x88"), "zoe");  // combining diaeresis
}

TEST(Unicode, CharacterClasses) {
  EXPECT_TRUE(is_punctuation(U'?'));
  EXPECT_TRUE(is_punctuation(U'“'));
  EXPECT_TRUE(is_punctuation(U'¿'));
  EXPECT_FALSE(is_punctuation(U'a'));
  EXPECT_TRUE(is_space(U' '));
  EXPECT_TRUE(is_word_char(U'ñ'));
  EXPECT_FALSE(is_word_char(U','));
  EXPECT_EQ(trim("  \t serve \r\n"), "serve");
  EXPECT_EQ(trim("   "), "");
}
