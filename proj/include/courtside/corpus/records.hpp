#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "courtside/corpus/text.hpp"

namespace courtside::corpus {

using Date = std::chrono::year_month_day;

// Strict ISO-8601 calendar date, "YYYY-MM-DD"; throws DataError otherwise.
Date parse_date(std::string_view text);
std::string format_date(const Date& date);
int year_of(const Date& date);

enum class Gender { male, female };
enum class Outcome { won, lost };
enum class Tour { atp, wta };

std::string_view to_string(Gender gender);
std::string_view to_string(Outcome outcome);
std::string_view to_string(Tour tour);
Gender parse_gender(std::string_view text);
Outcome parse_outcome(std::string_view text);
Tour parse_tour(std::string_view text);
Gender gender_of(Tour tour);

struct CommentaryDoc {
  std::string id;
  std::string text;
  std::optional<Gender> gender;
  std::optional<Date> match_date;
};

struct TranscriptRecord {
  std::string transcript_id;
  std::string player_name;
  Date interview_date;
  std::vector<std::string> snippets;
};

struct MatchRecord {
  Date match_date;
  std::string winner_name;
  std::string loser_name;
  std::optional<int> winner_rank;
  std::optional<int> loser_rank;
  Tour tour = Tour::atp;
};

struct Question {
  std::string question_id;
  std::string raw_text;
  std::string masked_text;
  std::vector<Token> tokens;
  int snippet_index = 0;
  int position_in_snippet = 0;
};

struct Interview {
  std::string transcript_id;
  std::string player_id;
  Gender gender = Gender::male;
  Date interview_date;
  Outcome outcome = Outcome::won;
  std::optional<int> rank_at_interview;
  int season = 0;
  std::size_t snippet_count = 0;
  std::vector<Question> questions;
};

// Throws DataError when a record breaks its invariants (empty snippets,
// identical winner and loser, non-positive rank, blank commentary).
void validate(const TranscriptRecord& record);
void validate(const MatchRecord& record);
void validate(const CommentaryDoc& doc);

}  // namespace courtside::corpus
