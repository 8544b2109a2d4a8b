#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "courtside/corpus/records.hpp"
#include "courtside/corpus/text.hpp"

namespace courtside::corpus {

// Dictionary and stop list shared by every text-processing stage.
struct TextResources {
  WordList dictionary;
  WordList stop_words;

  static TextResources load(const std::filesystem::path& dictionary_path,
                            const std::filesystem::path& stop_words_path);

  std::string mask(std::string_view text) const { return mask_entities(text, dictionary); }
  std::vector<Token> tokens(std::string_view masked) const { return tokenize(masked, stop_words); }
  Question make_question(std::string id, std::string raw_text, int snippet_index,
                         int position) const;
  // Masked, tokenized questions of one snippet, ids "<prefix>:<snippet>:<position>".
  std::vector<Question> extract_questions(std::string_view snippet, const std::string& id_prefix,
                                          int snippet_index) const;
};

// Transcripts: JSONL with fields id, player, date, snippets.
std::vector<TranscriptRecord> read_transcripts_jsonl(std::istream& in,
                                                     const std::string& source_name);
std::vector<TranscriptRecord> read_transcripts_jsonl(const std::filesystem::path& path);

// Matches: CSV with header date,winner,loser,winner_rank,loser_rank,tour.
std::vector<MatchRecord> read_matches_csv(std::istream& in, const std::string& source_name);
std::vector<MatchRecord> read_matches_csv(const std::filesystem::path& path);

// Commentary: one document per non-blank line, id = 1-based line number.
// The optional sidecar CSV (columns id,gender) tags documents by gender.
std::vector<CommentaryDoc> read_commentary(const std::filesystem::path& path,
                                           const std::optional<std::filesystem::path>& genders);

// One scored unit with its interview metadata, as exchanged between the
// ingest, score and typicality stages.
struct QuestionRecord {
  std::string question_id;
  std::string transcript_id;
  std::string player_id;
  Gender gender = Gender::male;
  Date date;
  int season = 0;
  Outcome outcome = Outcome::won;
  std::optional<int> rank;
  int snippet_index = 0;
  int position = 0;
  std::string text;
  std::string masked;
};

std::vector<QuestionRecord> flatten_questions(const std::vector<Interview>& interviews);
void write_questions_jsonl(std::ostream& out, const std::vector<QuestionRecord>& questions);
std::vector<QuestionRecord> read_questions_jsonl(const std::filesystem::path& path);

}  // namespace courtside::corpus
