#include "courtside/corpus/ingest.hpp"

#include <charconv>
#include <fstream>
#include <map>

#include <json.hpp>

#include "courtside/corpus/csv.hpp"
#include "courtside/corpus/unicode.hpp"
#include "courtside/error.hpp"

namespace courtside::corpus {
namespace {

using nlohmann::json;

std::optional<int> parse_rank(std::string_view text, const std::string& where) {
  const auto trimmed = trim(text);
  if (trimmed.empty()) return std::nullopt;
  int value = 0;
  const auto result = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), value);
  if (result.ec != std::errc() || result.ptr != trimmed.data() + trimmed.size()) {
    throw DataError(where + ": invalid rank '" + std::string(text) + "'");
  }
  return value;
}

const json& require(const json& object, const char* key, const std::string& where) {
  const auto it = object.find(key);
  if (it == object.end()) throw DataError(where + ": missing field '" + key + "'");
  return *it;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  return in;
}

}  // namespace

TextResources TextResources::load(const std::filesystem::path& dictionary_path,
                                  const std::filesystem::path& stop_words_path) {
  TextResources resources{WordList::load(dictionary_path), WordList::load(stop_words_path)};
  if (resources.dictionary.empty()) {
    throw ConfigError("dictionary is empty: " + dictionary_path.string());
  }
  return resources;
}

Question TextResources::make_question(std::string id, std::string raw_text, int snippet_index,
                                      int position) const {
  Question question;
  question.question_id = std::move(id);
  question.masked_text = mask(raw_text);
  question.tokens = tokens(question.masked_text);
  question.raw_text = std::move(raw_text);
  question.snippet_index = snippet_index;
  question.position_in_snippet = position;
  return question;
}

std::vector<Question> TextResources::extract_questions(std::string_view snippet,
                                                       const std::string& id_prefix,
                                                       int snippet_index) const {
  std::vector<Question> questions;
  int position = 0;
  for (auto& text : extract_question_texts(snippet)) {
    std::string id = id_prefix + ":" + std::to_string(snippet_index) + ":" + std::to_string(position);
    questions.push_back(make_question(std::move(id), std::move(text), snippet_index, position));
    ++position;
  }
  return questions;
}

std::vector<TranscriptRecord> read_transcripts_jsonl(std::istream& in,
                                                     const std::string& source_name) {
  std::vector<TranscriptRecord> records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    const std::string where = source_name + ":" + std::to_string(line_number);
    json object;
    try {
      object = json::parse(line);
    } catch (const json::parse_error& e) {
      throw DataError(where + ": " + e.what());
    }
    try {
      TranscriptRecord record;
      record.transcript_id = require(object, "id", where).get<std::string>();
      record.player_name = require(object, "player", where).get<std::string>();
      record.interview_date = parse_date(require(object, "date", where).get<std::string>());
      record.snippets = require(object, "snippets", where).get<std::vector<std::string>>();
      validate(record);
      records.push_back(std::move(record));
    } catch (const json::exception& e) {
      throw DataError(where + ": " + e.what());
    }
  }
  return records;
}

std::vector<TranscriptRecord> read_transcripts_jsonl(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_transcripts_jsonl(in, path.string());
}

std::vector<MatchRecord> read_matches_csv(std::istream& in, const std::string& source_name) {
  const CsvTable table = read_csv(in, source_name);
  const auto c_date = table.column("date");
  const auto c_winner = table.column("winner");
  const auto c_loser = table.column("loser");
  const auto c_wrank = table.column("winner_rank");
  const auto c_lrank = table.column("loser_rank");
  const auto c_tour = table.column("tour");

  std::vector<MatchRecord> matches;
  matches.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::string where = source_name + ": record " + std::to_string(r + 2);
    MatchRecord match;
    match.match_date = parse_date(trim(row[c_date]));
    match.winner_name = std::string(trim(row[c_winner]));
    match.loser_name = std::string(trim(row[c_loser]));
    match.winner_rank = parse_rank(row[c_wrank], where);
    match.loser_rank = parse_rank(row[c_lrank], where);
    match.tour = parse_tour(row[c_tour]);
    validate(match);
    matches.push_back(std::move(match));
  }
  return matches;
}

std::vector<MatchRecord> read_matches_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_matches_csv(in, path.string());
}

std::vector<CommentaryDoc> read_commentary(const std::filesystem::path& path,
                                           const std::optional<std::filesystem::path>& genders) {
  std::map<std::string, Gender> tags;
  if (genders) {
    const CsvTable table = read_csv_file(*genders);
    const auto c_id = table.column("id");
    const auto c_gender = table.column("gender");
    for (const auto& row : table.rows) tags[std::string(trim(row[c_id]))] = parse_gender(row[c_gender]);
  }

  auto in = open_input(path);
  std::vector<CommentaryDoc> docs;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    CommentaryDoc doc;
    doc.id = std::to_string(line_number);
    doc.text = std::string(trim(line));
    if (const auto it = tags.find(doc.id); it != tags.end()) doc.gender = it->second;
    docs.push_back(std::move(doc));
  }
  if (docs.empty()) throw DataError("commentary corpus is empty: " + path.string());
  return docs;
}

std::vector<QuestionRecord> flatten_questions(const std::vector<Interview>& interviews) {
  std::vector<QuestionRecord> out;
  for (const auto& interview : interviews) {
    for (const auto& question : interview.questions) {
      QuestionRecord record;
      record.question_id = question.question_id;
      record.transcript_id = interview.transcript_id;
      record.player_id = interview.player_id;
      record.gender = interview.gender;
      record.date = interview.interview_date;
      record.season = interview.season;
      record.outcome = interview.outcome;
      record.rank = interview.rank_at_interview;
      record.snippet_index = question.snippet_index;
      record.position = question.position_in_snippet;
      record.text = question.raw_text;
      record.masked = question.masked_text;
      out.push_back(std::move(record));
    }
  }
  return out;
}

void write_questions_jsonl(std::ostream& out, const std::vector<QuestionRecord>& questions) {
  for (const auto& q : questions) {
    json object = json::object();
    object["id"] = q.question_id;
    object["transcript_id"] = q.transcript_id;
    object["player"] = q.player_id;
    object["gender"] = to_string(q.gender);
    object["date"] = format_date(q.date);
    object["season"] = q.season;
    object["outcome"] = to_string(q.outcome);
    object["rank"] = q.rank ? json(*q.rank) : json(nullptr);
    object["snippet_index"] = q.snippet_index;
    object["position"] = q.position;
    object["text"] = q.text;
    object["masked"] = q.masked;
    out << object.dump() << '\n';
  }
}

std::vector<QuestionRecord> read_questions_jsonl(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<QuestionRecord> out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(line_number);
    try {
      const json object = json::parse(line);
      QuestionRecord q;
      q.question_id = require(object, "id", where).get<std::string>();
      q.transcript_id = object.value("transcript_id", "");
      q.player_id = require(object, "player", where).get<std::string>();
      q.gender = parse_gender(require(object, "gender", where).get<std::string>());
      q.date = parse_date(require(object, "date", where).get<std::string>());
      q.season = object.value("season", year_of(q.date));
      q.outcome = parse_outcome(require(object, "outcome", where).get<std::string>());
      if (const auto it = object.find("rank"); it != object.end() && !it->is_null()) {
        q.rank = it->get<int>();
      }
      q.snippet_index = object.value("snippet_index", 0);
      q.position = object.value("position", 0);
      q.text = require(object, "text", where).get<std::string>();
      q.masked = object.value("masked", q.text);
      out.push_back(std::move(q));
    } catch (const json::exception& e) {
      throw DataError(where + ": " + e.what());
    }
  }
  return out;
}

}  // namespace courtside::corpus
