#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "courtside/corpus/ingest.hpp"
#include "courtside/corpus/records.hpp"
#include "courtside/lm/kneser_ney.hpp"
#include "courtside/typicality/atypicality.hpp"

namespace courtside::analysis {

// One question with its interview metadata and perplexity. The typicality
// fields are filled only when a typicality table has been attached.
struct ScoredQuestion {
  std::string question_id;
  std::string player;
  corpus::Gender gender = corpus::Gender::male;
  corpus::Date date;
  int season = 0;
  corpus::Outcome outcome = corpus::Outcome::won;
  std::optional<int> rank;
  std::size_t n_tokens = 0;
  std::optional<double> perplexity;  // absent when the question had no words
  std::optional<double> sc;
  std::optional<typicality::Label> label;
};

struct TypicalityRow {
  std::string question_id;
  std::optional<double> sc;
  typicality::Label label = typicality::Label::typical;
};

// Columns: question_id,player,gender,date,season,outcome,rank,n_tokens,perplexity
void write_scored_csv(std::ostream& out, const std::vector<ScoredQuestion>& rows);
std::vector<ScoredQuestion> read_scored_csv(std::istream& in, const std::string& source_name);
std::vector<ScoredQuestion> read_scored_csv(const std::filesystem::path& path);

// Columns: question_id,sc,label
void write_typicality_csv(std::ostream& out, const std::vector<TypicalityRow>& rows);
std::vector<TypicalityRow> read_typicality_csv(std::istream& in, const std::string& source_name);
std::vector<TypicalityRow> read_typicality_csv(const std::filesystem::path& path);

// Copies sc and label onto matching questions; a scored question missing from
// the table is a DataError.
void attach_typicality(std::vector<ScoredQuestion>& questions,
                       const std::vector<TypicalityRow>& rows);

// Perplexity of every question under `model`, rows in input order.
std::vector<ScoredQuestion> score_questions(const lm::KneserNeyModel& model,
                                            const std::vector<corpus::QuestionRecord>& questions,
                                            const corpus::TextResources& text,
                                            unsigned threads = 1);

// Fits idf over the given questions and labels each of them.
std::vector<TypicalityRow> label_typicality(const std::vector<corpus::QuestionRecord>& questions,
                                            const corpus::TextResources& text,
                                            typicality::AtypicalityModel* fitted = nullptr);

}  // namespace courtside::analysis
