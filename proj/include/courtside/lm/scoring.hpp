#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "courtside/corpus/ingest.hpp"
#include "courtside/corpus/records.hpp"
#include "courtside/lm/kneser_ney.hpp"
#include "courtside/lm/ngram_counts.hpp"

namespace courtside::lm {

// Lowercased word tokens and entity masks; punctuation is dropped.
Sentence lm_tokens(const std::vector<corpus::Token>& tokens);

// Commentary documents split into sentences, entity-masked and tokenized the
// same way questions are.
std::vector<Sentence> commentary_sentences(const std::vector<corpus::CommentaryDoc>& docs,
                                           const corpus::TextResources& text);

// Subsamples the larger gender down to the smaller gender's document count
// with a seeded draw; input order is kept. Throws DataError when a document
// lacks a gender tag or a gender is missing.
std::vector<corpus::CommentaryDoc> balance_by_gender(const std::vector<corpus::CommentaryDoc>& docs,
                                                     std::uint64_t seed);

KneserNeyModel train_lm(const std::vector<Sentence>& sentences,
                        double fallback_discount = kDefaultFallbackDiscount);

struct PerplexityRecord {
  std::string question_id;
  double perplexity = 0.0;
  // Scored transitions, the closing </s> included.
  std::size_t n_scored_tokens = 0;
};

// PP = exp(-(1/N) sum ln P(w_i | w_{i-1})) over <s> w1 .. wN </s>, unknown
// words scored as <unk>. Throws DataError("unscorable question") for an empty
// sentence.
PerplexityRecord perplexity(const KneserNeyModel& model, const std::string& question_id,
                            const Sentence& words);
PerplexityRecord perplexity(const KneserNeyModel& model, const corpus::Question& question);

struct ScoringInput {
  std::string question_id;
  Sentence words;
};

// Scores every input on `threads` workers (0 = hardware concurrency).
// Output order matches input order; unscorable inputs yield nullopt.
std::vector<std::optional<PerplexityRecord>> score_batch(const KneserNeyModel& model,
                                                         const std::vector<ScoringInput>& inputs,
                                                         unsigned threads = 1);

}  // namespace courtside::lm
