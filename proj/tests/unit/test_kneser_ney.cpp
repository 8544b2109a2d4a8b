#include <gtest/gtest.h>

#include <cmath>

#include "courtside/error.hpp"
#include "courtside/lm/kneser_ney.hpp"
#include "courtside/lm/ngram_counts.hpp"
#include "lm_helpers.hpp"
#include "oracles/kn_oracle.hpp"

using namespace courtside::lm;

TEST(Discounts, ChenGoodmanFormula) {
  // n1=3, n2=2, n3=1, n4=1: Y = 3/7.
  const auto d = modified_kn_discounts({0, 3, 2, 1, 1});
  const double y = 3.0 / 7.0;
  EXPECT_DOUBLE_EQ(d.d1, 1 - 2 * y * 2 / 3);
  EXPECT_DOUBLE_EQ(d.d2, 2 - 3 * y * 1 / 2);
  EXPECT_DOUBLE_EQ(d.d3plus, 3 - 4 * y * 1 / 1);
}

TEST(Discounts, DegenerateCountsFallBack) {
  const auto none = modified_kn_discounts({0, 0, 0, 0, 0});
  EXPECT_EQ(none.d1, 0.5);
  EXPECT_EQ(none.d2, 0.5);
  EXPECT_EQ(none.d3plus, 0.5);
  // n1 only: D1 = 1, D2 and D3+ undefined.
  const auto ones = modified_kn_discounts({0, 4, 0, 0, 0});
  EXPECT_EQ(ones.d1, 1.0);
  EXPECT_EQ(ones.d2, 0.5);
  // Non-positive estimate: n1=1, n2=5 gives D1 = 1 - 2*(1/11)*5 = 1/11 > 0, but
  // n1=1, n2=1, n3=9 gives D2 = 2 - 3*(1/3)*9 < 0.
  const auto negative = modified_kn_discounts({0, 1, 1, 9, 0}, 0.25);
  EXPECT_EQ(negative.d2, 0.25);
  EXPECT_GT(negative.d1, 0.0);
}

TEST(KneserNey, HandEvaluatedRecursion) {
  // <s> a b a b a c </s>: bigram types (<s>,a)1 (a,b)2 (b,a)2 (a,c)1 (c,</s>)1,
  // so n1=3, n2=2: Y=3/7, D1=3/7, D2=2, D3+=fallback.
  // Continuations a:2 b:1 c:1 </s>:1, so n1=3, n2=1: Y=3/5, D1=3/5, D2=2.
  // Sum cc = 5, |E| = 6, gamma0 = (2 + 3*3/5)/5 = 19/25.
  // P_uni(b) = (1-3/5)/5 + 19/150 = 31/150, P_uni(a) = 19/150.
  // gamma(a) = (D2 + D1)/3 = 17/21.
  const auto model = estimate_kn(count_ngrams(testutil::split_corpus({"a b a b a c"})));
  const auto& v = model.vocab();
  const auto a = v.id("a"), b = v.id("b"), c = v.id("c");
  EXPECT_NEAR(model.unigram(a), 19.0 / 150.0, 1e-15);
  EXPECT_NEAR(model.unigram(b), 31.0 / 150.0, 1e-15);
  EXPECT_NEAR(model.unigram(Vocabulary::kUnknownId), 19.0 / 150.0, 1e-15);
  EXPECT_NEAR(model.backoff(a), 17.0 / 21.0, 1e-15);
  EXPECT_NEAR(model.prob(a, b), 527.0 / 3150.0, 1e-15);
  EXPECT_NEAR(model.prob(a, c), 1127.0 / 3150.0, 1e-15);
  EXPECT_NEAR(model.prob(c, Vocabulary::kEndId),
              (1 - 3.0 / 7.0) / 1 + (3.0 / 7.0) * 31.0 / 150.0, 1e-15);
}

TEST(KneserNey, MatchesBruteForceOracle) {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 200; ++round) {
    const auto corpus = testutil::random_corpus(rng, 30, 6);
    const auto model = estimate_kn(count_ngrams(corpus));
    const oracle::BruteForceKn brute(corpus);
    const auto& v = model.vocab();
    for (WordId u = 0; u < v.size(); ++u) {
      for (WordId w = 0; w < v.size(); ++w) {
        const double expected = brute.prob(v.word(u), v.word(w));
        const double got = model.prob(u, w);
        if (expected == 0.0) {
          ASSERT_EQ(got, 0.0);
        } else {
          ASSERT_NEAR(got / expected, 1.0, 1e-12) << v.word(u) << " -> " << v.word(w);
        }
      }
    }
  }
}

TEST(KneserNey, NormalizedAndPositive) {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 200; ++round) {
    const auto model = estimate_kn(count_ngrams(testutil::random_corpus(rng, 40, 8)));
    const auto& v = model.vocab();
    for (WordId u = 0; u < v.size(); ++u) {
      double total = 0.0;
      for (WordId w = 0; w < v.size(); ++w) total += model.prob(u, w);
      ASSERT_NEAR(total, 1.0, 1e-9);
      ASSERT_GT(model.prob(u, Vocabulary::kUnknownId), 0.0);
      ASSERT_GT(model.backoff(u), 0.0);
      ASSERT_LE(model.backoff(u), 1.0);
      ASSERT_EQ(model.prob(u, Vocabulary::kBeginId), 0.0);
    }
  }
}

TEST(KneserNey, ConstructorValidates) {
  const auto v = Vocabulary::from_words({"a"});
  std::vector<double> uni(v.size(), 0.2);
  std::vector<double> back(v.size(), 1.0);
  EXPECT_THROW(KneserNeyModel(v, {}, std::vector<double>(2, 0.5), back, {}), courtside::DataError);
  EXPECT_THROW(KneserNeyModel(v, {}, uni, back, {{0, 9, 0.5}}), courtside::DataError);
  EXPECT_THROW(KneserNeyModel(v, {}, uni, back, {{0, 4, 0.5}, {0, 4, 0.5}}),
               courtside::DataError);
  EXPECT_THROW(KneserNeyModel(v, {}, uni, back, {{0, 4, 1.5}}), courtside::DataError);
}
