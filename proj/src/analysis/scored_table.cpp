#include "courtside/analysis/scored_table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <unordered_map>

#include "courtside/corpus/csv.hpp"
#include "courtside/error.hpp"
#include "courtside/lm/scoring.hpp"

namespace courtside::analysis {
namespace {

using corpus::format_double;

template <typename Int>
Int parse_int(std::string_view text, const std::string& where) {
  Int value{};
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || result.ec != std::errc() || result.ptr != text.data() + text.size()) {
    throw DataError(where + ": invalid integer '" + std::string(text) + "'");
  }
  return value;
}

std::optional<double> parse_optional_double(const std::string& text, const std::string& where) {
  if (text.empty()) return std::nullopt;
  try {
    return corpus::parse_double(text);
  } catch (const DataError&) {
    throw DataError(where + ": invalid number '" + text + "'");
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  return in;
}

typicality::Label parse_label(std::string_view text, const std::string& where) {
  if (text == "typical") return typicality::Label::typical;
  if (text == "atypical") return typicality::Label::atypical;
  throw DataError(where + ": unknown label '" + std::string(text) + "'");
}

}  // namespace

void write_scored_csv(std::ostream& out, const std::vector<ScoredQuestion>& rows) {
  corpus::write_csv_row(out, {"question_id", "player", "gender", "date", "season", "outcome",
                              "rank", "n_tokens", "perplexity"});
  for (const auto& q : rows) {
    corpus::write_csv_row(
        out, {q.question_id, q.player, std::string(to_string(q.gender)),
              corpus::format_date(q.date), std::to_string(q.season),
              std::string(to_string(q.outcome)), q.rank ? std::to_string(*q.rank) : "",
              std::to_string(q.n_tokens), q.perplexity ? format_double(*q.perplexity) : ""});
  }
}

std::vector<ScoredQuestion> read_scored_csv(std::istream& in, const std::string& source_name) {
  const auto table = corpus::read_csv(in, source_name);
  const auto c_id = table.column("question_id");
  const auto c_player = table.column("player");
  const auto c_gender = table.column("gender");
  const auto c_date = table.column("date");
  const auto c_season = table.column("season");
  const auto c_outcome = table.column("outcome");
  const auto c_rank = table.column("rank");
  const auto c_tokens = table.column("n_tokens");
  const auto c_pp = table.column("perplexity");

  std::vector<ScoredQuestion> out;
  out.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const std::string where = source_name + ":" + std::to_string(i + 2);
    if (row.size() != table.header.size()) throw DataError(where + ": wrong number of fields");
    ScoredQuestion q;
    q.question_id = row[c_id];
    if (q.question_id.empty()) throw DataError(where + ": empty question_id");
    q.player = row[c_player];
    q.gender = corpus::parse_gender(row[c_gender]);
    q.date = corpus::parse_date(row[c_date]);
    q.season = parse_int<int>(row[c_season], where);
    q.outcome = corpus::parse_outcome(row[c_outcome]);
    if (!row[c_rank].empty()) q.rank = parse_int<int>(row[c_rank], where);
    q.n_tokens = parse_int<std::size_t>(row[c_tokens], where);
    q.perplexity = parse_optional_double(row[c_pp], where);
    if (q.perplexity && !(*q.perplexity >= 1.0 && std::isfinite(*q.perplexity))) {
      throw DataError(where + ": perplexity out of range");
    }
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<ScoredQuestion> read_scored_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_scored_csv(in, path.string());
}

void write_typicality_csv(std::ostream& out, const std::vector<TypicalityRow>& rows) {
  corpus::write_csv_row(out, {"question_id", "sc", "label"});
  for (const auto& r : rows) {
    corpus::write_csv_row(out, {r.question_id, r.sc ? format_double(*r.sc) : "",
                                std::string(typicality::to_string(r.label))});
  }
}

std::vector<TypicalityRow> read_typicality_csv(std::istream& in, const std::string& source_name) {
  const auto table = corpus::read_csv(in, source_name);
  const auto c_id = table.column("question_id");
  const auto c_sc = table.column("sc");
  const auto c_label = table.column("label");
  std::vector<TypicalityRow> out;
  out.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const std::string where = source_name + ":" + std::to_string(i + 2);
    if (row.size() != table.header.size()) throw DataError(where + ": wrong number of fields");
    out.push_back({row[c_id], parse_optional_double(row[c_sc], where),
                   parse_label(row[c_label], where)});
  }
  return out;
}

std::vector<TypicalityRow> read_typicality_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_typicality_csv(in, path.string());
}

void attach_typicality(std::vector<ScoredQuestion>& questions,
                       const std::vector<TypicalityRow>& rows) {
  std::unordered_map<std::string, const TypicalityRow*> by_id;
  for (const auto& r : rows) {
    if (!by_id.emplace(r.question_id, &r).second) {
      throw DataError("duplicate question in typicality table: " + r.question_id);
    }
  }
  for (auto& q : questions) {
    const auto it = by_id.find(q.question_id);
    if (it == by_id.end()) throw DataError("no typicality label for question " + q.question_id);
    q.sc = it->second->sc;
    q.label = it->second->label;
  }
}

std::vector<ScoredQuestion> score_questions(const lm::KneserNeyModel& model,
                                            const std::vector<corpus::QuestionRecord>& questions,
                                            const corpus::TextResources& text, unsigned threads) {
  std::vector<lm::ScoringInput> inputs;
  inputs.reserve(questions.size());
  for (const auto& q : questions) {
    inputs.push_back({q.question_id, lm::lm_tokens(text.tokens(q.masked))});
  }
  const auto scores = lm::score_batch(model, inputs, threads);

  std::vector<ScoredQuestion> out;
  out.reserve(questions.size());
  for (std::size_t i = 0; i < questions.size(); ++i) {
    const auto& q = questions[i];
    ScoredQuestion s;
    s.question_id = q.question_id;
    s.player = q.player_id;
    s.gender = q.gender;
    s.date = q.date;
    s.season = q.season;
    s.outcome = q.outcome;
    s.rank = q.rank;
    s.n_tokens = inputs[i].words.size();
    if (scores[i]) s.perplexity = scores[i]->perplexity;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<TypicalityRow> label_typicality(const std::vector<corpus::QuestionRecord>& questions,
                                            const corpus::TextResources& text,
                                            typicality::AtypicalityModel* fitted) {
  std::vector<std::vector<corpus::Token>> tokens;
  tokens.reserve(questions.size());
  for (const auto& q : questions) tokens.push_back(text.tokens(q.masked));
  const auto model = typicality::AtypicalityModel::fit(tokens);
  std::vector<TypicalityRow> out;
  out.reserve(questions.size());
  for (std::size_t i = 0; i < questions.size(); ++i) {
    const auto sc = model.score(tokens[i]);
    out.push_back({questions[i].question_id, sc, model.classify(sc)});
  }
  if (fitted != nullptr) *fitted = model;
  return out;
}

}  // namespace courtside::analysis
