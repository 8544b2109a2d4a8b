#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "courtside/corpus/records.hpp"
#include "courtside/random.hpp"

namespace courtside::synth {

// Word-level bigram Markov chain over a fixed set of sentences.
class MarkovChain {
 public:
  explicit MarkovChain(const std::vector<std::string_view>& sentences);

  // A random walk from the sentence start, redrawn until its length is in
  // [min_words, max_words].
  std::vector<std::string> sentence(Rng& rng, std::size_t min_words = 4,
                                    std::size_t max_words = 24) const;

 private:
  std::vector<std::string> words_;                  // index 0 is the boundary
  std::vector<std::vector<std::uint32_t>> next_;    // successors with multiplicity
};

struct SynthConfig {
  std::uint64_t seed = 1;
  // Share of female-player questions drawn from the off-court chain instead
  // of the commentary chain. Male-player questions always use the latter.
  double gap = 0.0;
  std::size_t commentary_lines = 600;
  std::size_t players_per_gender = 10;
  std::size_t interviews_per_player = 6;
  std::size_t min_questions = 1;  // per interview
  std::size_t max_questions = 4;
  int first_season = 2014;
  int seasons = 2;
  double win_rate = 0.6;
  double unmatched_rate = 0.04;     // transcripts left without a match row
  double missing_rank_rate = 0.03;  // match rows with the interviewee's rank blank

  void validate() const;
};

struct SynthCorpus {
  std::vector<corpus::CommentaryDoc> commentary;  // ids "1".."n", gender-tagged
  std::vector<corpus::TranscriptRecord> transcripts;
  std::vector<corpus::MatchRecord> matches;
};

std::vector<corpus::CommentaryDoc> generate_commentary(const SynthConfig& config);
// Transcripts and matches only.
SynthCorpus generate_interviews(const SynthConfig& config);
SynthCorpus generate(const SynthConfig& config);

// commentary.txt, commentary_genders.csv, transcripts.jsonl, matches.csv.
void write_corpus(const SynthCorpus& corpus, const std::filesystem::path& dir);

}  // namespace courtside::synth
