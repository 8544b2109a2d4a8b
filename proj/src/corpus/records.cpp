#include "courtside/corpus/records.hpp"

#include <charconv>
#include <cstdio>

#include "courtside/corpus/unicode.hpp"
#include "courtside/error.hpp"

namespace courtside::corpus {
namespace {

int parse_digits(std::string_view text, std::string_view whole) {
  int value = 0;
  for (const char c : text) {
    if (c < '0' || c > '9') throw DataError("invalid date: '" + std::string(whole) + "'");
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Date parse_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
    throw DataError("invalid date: '" + std::string(text) + "'");
  }
  const int y = parse_digits(text.substr(0, 4), text);
  const int m = parse_digits(text.substr(5, 2), text);
  const int d = parse_digits(text.substr(8, 2), text);
  const Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                  std::chrono::day{static_cast<unsigned>(d)}};
  if (!date.ok()) throw DataError("invalid date: '" + std::string(text) + "'");
  return date;
}

std::string format_date(const Date& date) {
  char buffer[16];
  std::snprintf(buffer, sizeof buffer, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
  return buffer;
}

int year_of(const Date& date) { return static_cast<int>(date.year()); }

std::string_view to_string(Gender gender) { return gender == Gender::male ? "male" : "female"; }
std::string_view to_string(Outcome outcome) { return outcome == Outcome::won ? "won" : "lost"; }
std::string_view to_string(Tour tour) { return tour == Tour::atp ? "ATP" : "WTA"; }

Gender parse_gender(std::string_view text) {
  const std::string lower = lowercase(trim(text));
  if (lower == "male" || lower == "m") return Gender::male;
  if (lower == "female" || lower == "f") return Gender::female;
  throw DataError("invalid gender: '" + std::string(text) + "'");
}

Outcome parse_outcome(std::string_view text) {
  const std::string lower = lowercase(trim(text));
  if (lower == "won" || lower == "win") return Outcome::won;
  if (lower == "lost" || lower == "loss") return Outcome::lost;
  throw DataError("invalid outcome: '" + std::string(text) + "'");
}

Tour parse_tour(std::string_view text) {
  const std::string lower = lowercase(trim(text));
  if (lower == "atp") return Tour::atp;
  if (lower == "wta") return Tour::wta;
  throw DataError("invalid tour: '" + std::string(text) + "'");
}

Gender gender_of(Tour tour) { return tour == Tour::atp ? Gender::male : Gender::female; }

void validate(const TranscriptRecord& record) {
  if (record.snippets.empty()) {
    throw DataError("transcript " + record.transcript_id + " has no snippets");
  }
  if (trim(record.player_name).empty()) {
    throw DataError("transcript " + record.transcript_id + " has no player name");
  }
}

void validate(const MatchRecord& record) {
  if (record.winner_name == record.loser_name) {
    throw DataError("match on " + format_date(record.match_date) + ": winner equals loser '" +
                    record.winner_name + "'");
  }
  for (const auto& rank : {record.winner_rank, record.loser_rank}) {
    if (rank && *rank < 1) {
      throw DataError("match on " + format_date(record.match_date) + ": rank must be >= 1");
    }
  }
}

void validate(const CommentaryDoc& doc) {
  if (trim(doc.text).empty()) throw DataError("commentary " + doc.id + " is blank");
}

}  // namespace courtside::corpus
