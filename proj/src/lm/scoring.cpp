#include "courtside/lm/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "courtside/error.hpp"
#include "courtside/random.hpp"

namespace courtside::lm {

Sentence lm_tokens(const std::vector<corpus::Token>& tokens) {
  Sentence out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    if (token.is_scorable()) out.push_back(token.normalized);
  }
  return out;
}

std::vector<Sentence> commentary_sentences(const std::vector<corpus::CommentaryDoc>& docs,
                                           const corpus::TextResources& text) {
  std::vector<Sentence> sentences;
  for (const auto& doc : docs) {
    for (const auto& sentence : corpus::split_sentences(doc.text)) {
      auto words = lm_tokens(text.tokens(text.mask(sentence)));
      if (!words.empty()) sentences.push_back(std::move(words));
    }
  }
  return sentences;
}

std::vector<corpus::CommentaryDoc> balance_by_gender(const std::vector<corpus::CommentaryDoc>& docs,
                                                     std::uint64_t seed) {
  std::vector<std::size_t> male;
  std::vector<std::size_t> female;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (!docs[i].gender) throw DataError("commentary document " + docs[i].id + " has no gender tag");
    (*docs[i].gender == corpus::Gender::male ? male : female).push_back(i);
  }
  if (male.empty() || female.empty()) {
    throw DataError("gender balancing needs commentary for both genders");
  }
  auto& larger = male.size() > female.size() ? male : female;
  const auto& smaller = male.size() > female.size() ? female : male;
  Rng rng(seed);
  auto picks = sample_indices(larger.size(), smaller.size(), rng);
  std::vector<std::size_t> keep(smaller);
  for (const auto p : picks) keep.push_back(larger[p]);
  std::sort(keep.begin(), keep.end());

  std::vector<corpus::CommentaryDoc> out;
  out.reserve(keep.size());
  for (const auto i : keep) out.push_back(docs[i]);
  return out;
}

KneserNeyModel train_lm(const std::vector<Sentence>& sentences, double fallback_discount) {
  return estimate_kn(count_ngrams(sentences), fallback_discount);
}

PerplexityRecord perplexity(const KneserNeyModel& model, const std::string& question_id,
                            const Sentence& words) {
  if (words.empty()) throw DataError("unscorable question " + question_id);
  const auto& vocab = model.vocab();
  long double log_sum = 0.0L;
  WordId context = Vocabulary::kBeginId;
  for (const auto& word : words) {
    const WordId id = vocab.id(word);
    log_sum += std::log(static_cast<long double>(model.prob(context, id)));
    context = id;
  }
  log_sum += std::log(static_cast<long double>(model.prob(context, Vocabulary::kEndId)));
  const std::size_t n = words.size() + 1;
  PerplexityRecord record;
  record.question_id = question_id;
  record.n_scored_tokens = n;
  record.perplexity =
      static_cast<double>(std::exp(-log_sum / static_cast<long double>(n)));
  return record;
}

PerplexityRecord perplexity(const KneserNeyModel& model, const corpus::Question& question) {
  return perplexity(model, question.question_id, lm_tokens(question.tokens));
}

std::vector<std::optional<PerplexityRecord>> score_batch(const KneserNeyModel& model,
                                                         const std::vector<ScoringInput>& inputs,
                                                         unsigned threads) {
  std::vector<std::optional<PerplexityRecord>> out(inputs.size());
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (!inputs[i].words.empty()) {
        out[i] = perplexity(model, inputs[i].question_id, inputs[i].words);
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(inputs.size(), 1)));
  if (threads <= 1) {
    work(0, inputs.size());
    return out;
  }
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (inputs.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(inputs.size(), begin + chunk);
      if (begin >= end) break;
      workers.emplace_back(work, begin, end);
    }
  }
  return out;
}

}  // namespace courtside::lm
