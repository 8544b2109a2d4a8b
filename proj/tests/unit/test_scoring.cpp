#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "courtside/error.hpp"
#include "courtside/lm/scoring.hpp"
#include "lm_helpers.hpp"
#include "oracles/kn_oracle.hpp"
#include "test_util.hpp"

using namespace courtside;
using namespace courtside::lm;

TEST(Perplexity, UniformModelOfPowerOfTwoSizeIsExact) {
  for (std::size_t events : {8u, 16u, 64u, 1024u}) {
    const auto model = testutil::uniform_model(events);
    ASSERT_EQ(model.vocab().size() - 1, events);
    for (std::size_t len = 1; len < 30; ++len) {
      const Sentence words(len, "w0");
      EXPECT_EQ(perplexity(model, "q", words).perplexity, static_cast<double>(events));
    }
  }
}

TEST(Perplexity, UniformModelOfAnySizeWithinOneUlp) {
  for (std::size_t events = 5; events < 400; ++events) {
    const auto pp = perplexity(testutil::uniform_model(events), "q", {"w0", "zzz"}).perplexity;
    const double v = static_cast<double>(events);
    EXPECT_LE(std::abs(pp - v), std::nextafter(v, 2 * v) - v) << events;
  }
}

TEST(Perplexity, SingleTokenHandChain) {
  const auto model = estimate_kn(count_ngrams(testutil::split_corpus({"serve well", "ace"})));
  const auto& v = model.vocab();
  const double p1 = model.prob(Vocabulary::kBeginId, v.id("serve"));
  const double p2 = model.prob(v.id("serve"), Vocabulary::kEndId);
  const auto record = perplexity(model, "q", {"serve"});
  EXPECT_EQ(record.n_scored_tokens, 2u);
  EXPECT_NEAR(record.perplexity, 1.0 / std::sqrt(p1 * p2), 1e-12);
}

TEST(Perplexity, MatchesOracleAndIsAtLeastOne) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 100; ++round) {
    const auto corpus = testutil::random_corpus(rng, 30, 6);
    const auto model = estimate_kn(count_ngrams(corpus));
    const oracle::BruteForceKn brute(corpus);
    const auto question = testutil::random_corpus(rng, 8, 8).front();
    if (question.empty()) continue;
    const double pp = perplexity(model, "q", question).perplexity;
    EXPECT_NEAR(pp / brute.perplexity(question), 1.0, 1e-12);
    EXPECT_GE(pp, 1.0);
  }
}

TEST(Perplexity, EmptyQuestionIsUnscorable) {
  const auto model = testutil::uniform_model(8);
  EXPECT_THROW(perplexity(model, "q", {}), DataError);
}

TEST(Perplexity, PunctuationIsNotScored) {
  const auto tokens = testutil::text().tokens("Serve, <NOUN>?");
  EXPECT_EQ(lm_tokens(tokens), (Sentence{"serve", "<NOUN>"}));
}

TEST(ScoreBatch, OrderAndThreadInvariant) {
  const auto model = estimate_kn(count_ngrams(testutil::split_corpus(
      {"he hits an ace", "she hits a winner", "an ace down the tee"})));
  std::vector<ScoringInput> inputs;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 257; ++i) {
    ScoringInput in{"q" + std::to_string(i), {}};
    const auto n = rng() % 6;
    for (std::size_t k = 0; k < n; ++k) in.words.push_back(std::string(1, 'a' + rng() % 5));
    inputs.push_back(in);
  }
  const auto single = score_batch(model, inputs, 1);
  for (unsigned threads : {2u, 3u, 8u, 0u}) {
    const auto multi = score_batch(model, inputs, threads);
    ASSERT_EQ(multi.size(), single.size());
    for (std::size_t i = 0; i < single.size(); ++i) {
      ASSERT_EQ(multi[i].has_value(), single[i].has_value());
      if (single[i]) ASSERT_EQ(multi[i]->perplexity, single[i]->perplexity);
    }
  }
  auto reversed = inputs;
  std::reverse(reversed.begin(), reversed.end());
  const auto back = score_batch(model, reversed, 4);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto& a = single[i];
    const auto& b = back[inputs.size() - 1 - i];
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) ASSERT_EQ(a->perplexity, b->perplexity);
  }
}

TEST(Training, ModelPrefersRealCommentaryOverShuffledWords) {
  const auto docs = corpus::read_commentary(testutil::data_path("commentary_tennis.txt"), std::nullopt);
  const auto sentences = commentary_sentences(docs, testutil::text());
  ASSERT_GT(sentences.size(), 500u);
  const auto model = train_lm(sentences);
  std::mt19937_64 rng(8);
  double real = 0.0, shuffled = 0.0;
  for (std::size_t i = 0; i < 300; ++i) {
    auto s = sentences[i];
    real += perplexity(model, "r", s).perplexity;
    std::shuffle(s.begin(), s.end(), rng);
    shuffled += perplexity(model, "s", s).perplexity;
  }
  EXPECT_LT(real, shuffled);
}

TEST(Training, BalanceByGenderSubsamplesLargerSide) {
  std::vector<corpus::CommentaryDoc> docs;
  for (int i = 0; i < 10; ++i) {
    docs.push_back({std::to_string(i + 1), "line",
                    i < 7 ? corpus::Gender::male : corpus::Gender::female, std::nullopt});
  }
  const auto balanced = balance_by_gender(docs, 4);
  ASSERT_EQ(balanced.size(), 6u);
  EXPECT_EQ(std::count_if(balanced.begin(), balanced.end(),
                          [](const auto& d) { return d.gender == corpus::Gender::male; }),
            3);
  EXPECT_TRUE(std::is_sorted(balanced.begin(), balanced.end(), [](const auto& a, const auto& b) {
    return std::stoi(a.id) < std::stoi(b.id);
  }));
  const auto again = balance_by_gender(docs, 4);
  for (std::size_t i = 0; i < balanced.size(); ++i) EXPECT_EQ(balanced[i].id, again[i].id);
  docs[0].gender.reset();
  EXPECT_THROW(balance_by_gender(docs, 4), DataError);
}

TEST(Training, CommentaryIsMaskedAndSplit) {
  const std::vector<corpus::CommentaryDoc> docs = {
      {"1", "Nadal hits an ace. Federer saves it!", std::nullopt, std::nullopt}};
  const auto sentences = commentary_sentences(docs, testutil::text());
  ASSERT_EQ(sentences.size(), 2u);
  EXPECT_EQ(sentences[0], (Sentence{"<NOUN>", "hits", "an", "ace"}));
  EXPECT_EQ(sentences[1], (Sentence{"<NOUN>", "saves", "it"}));
}
