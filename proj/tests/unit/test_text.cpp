#include <gtest/gtest.h>

#include <random>

#include "courtside/corpus/text.hpp"
#include "courtside/corpus/unicode.hpp"
#include "test_util.hpp"

using namespace courtside::corpus;

namespace {

std::vector<std::string> normalized(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.normalized);
  return out;
}

const WordList& dictionary() { return testutil::text().dictionary; }
const WordList& stops() { return testutil::text().stop_words; }

}  // namespace

TEST(SplitSentences, TerminalPunctuation) {
  EXPECT_EQ(split_sentences("Good match. Really? Yes!"),
            (std::vector<std::string>{"Good match.", "Really?", "Yes!"}));
}

TEST(SplitSentences, GuardsDecimalsAbbreviationsAndInitials) {
  EXPECT_EQ(split_sentences("He served at 2.5 seconds. Then what?"),
            (std::vector<std::string>{"He served at 2.5 seconds.", "Then what?"}));
  EXPECT_EQ(split_sentences("Did Mr. Smith and Dr. Jones watch Federer vs. Nadal?"),
            (std::vector<std::string>{"Did Mr. Smith and Dr. Jones watch Federer vs. Nadal?"}));
  EXPECT_EQ(split_sentences("Was J. Smith there? No."),
            (std::vector<std::string>{"Was J. Smith there?", "No."}));
}

TEST(SplitSentences, GroupsTerminalRunsAndKeepsTail) {
  EXPECT_EQ(split_sentences("Really?! Wow... and then"),
            (std::vector<std::string>{"Really?!", "Wow...", "and then"}));
}

TEST(ExtractQuestions, Examples) {
  EXPECT_EQ(extract_question_texts("What happened? I mean."),
            (std::vector<std::string>{"What happened?"}));
  EXPECT_TRUE(extract_question_texts("Good match.").empty());
  EXPECT_EQ(extract_question_texts("Tiebreak key? And the serve?"),
            (std::vector<std::string>{"Tiebreak key?", "And the serve?"}));
}

TEST(ExtractQuestions, KeepsTextUpToLastQuestionMark) {
  EXPECT_EQ(extract_question_texts("Are you serious?! Yes."),
            (std::vector<std::string>{"Are you serious?"}));
  EXPECT_TRUE(extract_question_texts("??? ...").empty());
}

TEST(MaskEntities, Examples) {
  EXPECT_EQ(mask_entities("Did Rafa serve well?", dictionary()), "Did <NOUN> serve well?");
  EXPECT_EQ(mask_entities("What about Roland Garros?", dictionary()), "What about <NOUN>?");
  ASSERT_FALSE(dictionary().contains("serena"));
  EXPECT_EQ(mask_entities("Serena, how do you feel?", dictionary()), "<NOUN>, how do you feel?");
}

TEST(MaskEntities, SentenceInitialDictionaryWordsStay) {
  EXPECT_EQ(mask_entities("How was Wimbledon?", dictionary()), "How was <NOUN>?");
  EXPECT_EQ(mask_entities("Good. Nadal played well.", dictionary()), "Good. <NOUN> played well.");
}

TEST(MaskEntities, PronounAndPossessive) {
  EXPECT_EQ(mask_entities("Do I think Novak Djokovic's serve is better?", dictionary()),
            "Do I think <NOUN>'s serve is better?");
  EXPECT_EQ(mask_entities("I'm asking about Andy.", dictionary()), "I'm asking about <NOUN>.");
}

TEST(MaskEntities, Idempotent) {
  const std::vector<std::string> samples = {
      "Did Rafa serve well?", "What about Roland Garros and the US Open?",
      "Serena, how do you feel?", "Novak's coach said so. Were you at Indian Wells?",
      "Can you compare Roger Federer to Pete Sampras?"};
  for (const auto& s : samples) {
    const auto once = mask_entities(s, dictionary());
    EXPECT_EQ(mask_entities(once, dictionary()), once) << s;
  }
}

TEST(Tokenize, Example) {
  EXPECT_EQ(normalized(tokenize("The tiebreak, was that the key?", stops())),
            (std::vector<std::string>{"the", "tiebreak", ",", "was", "that", "the", "key", "?"}));
}

TEST(Tokenize, MaskStaysOneToken) {
  const auto tokens = tokenize("<NOUN>'s serve?", stops());
  ASSERT_EQ(tokens.size(), 4u);
  EXPECT_TRUE(tokens[0].is_entity_mask);
  EXPECT_EQ(tokens[0].normalized, "<NOUN>");
  EXPECT_EQ(tokens[1].normalized, "'s");
  EXPECT_TRUE(tokens[1].is_stop);
  EXPECT_EQ(tokens[2].stem, "serv");
  EXPECT_TRUE(tokens[3].is_punct);
}

TEST(Tokenize, StemsStopsAndApostrophes) {
  const auto tokens = tokenize("Winning isn’t everything", stops());
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0].stem, "win");
  EXPECT_FALSE(tokens[0].is_stop);
  EXPECT_EQ(tokens[1].normalized, "isn't");
  EXPECT_TRUE(tokens[1].is_stop);
  EXPECT_EQ(tokens[2].normalized, "everything");
}

TEST(Tokenize, HyphenatedWordIsOneToken) {
  EXPECT_EQ(normalized(tokenize("a well-played set-up", stops())),
            (std::vector<std::string>{"a", "well-played", "set-up"}));
}

TEST(Tokenize, NoTokenContainsWhitespaceAfterMasking) {
  std::mt19937 rng(42);
  const std::vector<std::string> pieces = {"Roger", "Federer", "serve", " ", "  ", "\t", ",", "?",
                                           ".",     "I",       "it's",  "<NOUN>", "Open", " ",
                                           "Zoë",   "'s",      "well-played", "!", "-", "\n"};
  for (int round = 0; round < 500; ++round) {
    std::string text;
    const int n = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < n; ++i) text += pieces[rng() % pieces.size()];
    for (const auto& token : tokenize(mask_entities(text, dictionary()), stops())) {
      ASSERT_FALSE(token.surface.empty()) << text;
      std::size_t pos = 0;
      while (pos < token.surface.size()) {
        const auto ch = decode_utf8(token.surface, pos);
        ASSERT_FALSE(is_space(ch.code)) << "'" << token.surface << "' from '" << text << "'";
        pos += ch.length;
      }
      if (token.is_entity_mask) ASSERT_EQ(token.normalized, "<NOUN>");
      if (!token.is_entity_mask && !token.is_punct) ASSERT_FALSE(token.stem.empty());
    }
  }
}

TEST(WordList, LoadsAndIgnoresComments) {
  testutil::TempDir dir("wordlist");
  {
    std::ofstream out(dir / "w.txt");
    out << "# header\nServe\n\n  clay \n";
  }
  const auto list = WordList::load(dir / "w.txt");
  EXPECT_EQ(list.size(), 2u);
  EXPECT_TRUE(list.contains("serve"));
  EXPECT_TRUE(list.contains("clay"));
}

TEST(WordList, BundledResources) {
  EXPECT_GE(dictionary().size(), 20000u);
  EXPECT_GE(stops().size(), 100u);
  EXPECT_TRUE(dictionary().contains("serve"));
  EXPECT_TRUE(dictionary().contains("what"));
}
