#include "courtside/synth/synth.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "courtside/corpus/csv.hpp"
#include "courtside/corpus/merge.hpp"
#include "courtside/error.hpp"
#include "courtside/synth/seed_text.hpp"

namespace courtside::synth {
namespace {

using corpus::Gender;

std::vector<std::string> split_words(std::string_view sentence) {
  std::vector<std::string> words;
  std::size_t start = 0;
  while (start < sentence.size()) {
    const auto space = sentence.find(' ', start);
    const auto end = space == std::string_view::npos ? sentence.size() : space;
    if (end > start) words.emplace_back(sentence.substr(start, end - start));
    start = end + 1;
  }
  return words;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

std::string capitalize(std::string text) {
  if (!text.empty() && text[0] >= 'a' && text[0] <= 'z') text[0] = static_cast<char>(text[0] - 32);
  return text;
}

template <typename T>
const T& pick(const std::vector<T>& items, Rng& rng) {
  return items[uniform_index(rng, items.size())];
}

bool chance(Rng& rng, double p) { return uniform_unit(rng) < p; }

const MarkovChain& court_chain() {
  static const MarkovChain chain(court_sentences());
  return chain;
}

const MarkovChain& off_court_chain() {
  static const MarkovChain chain(off_court_sentences());
  return chain;
}

corpus::Date day_offset(int first_season, std::size_t days) {
  using namespace std::chrono;
  const sys_days start{year{first_season} / January / 1};
  return year_month_day{start + std::chrono::days{static_cast<int>(days)}};
}

std::string question_text(Rng& rng, const MarkovChain& chain, std::string_view first_name) {
  std::string opener(pick(question_openers(), rng));
  const std::string clause = join(chain.sentence(rng));
  if (chance(rng, 0.2)) return std::string(first_name) + ", " + opener + " " + clause + "?";
  return capitalize(opener) + " " + clause + "?";
}

struct Player {
  std::string first;
  std::string last;
  Gender gender;
};

}  // namespace

MarkovChain::MarkovChain(const std::vector<std::string_view>& sentences) {
  std::unordered_map<std::string, std::uint32_t> ids;
  words_.push_back("");
  next_.emplace_back();
  const auto id_of = [&](const std::string& w) {
    const auto [it, inserted] = ids.emplace(w, static_cast<std::uint32_t>(words_.size()));
    if (inserted) {
      words_.push_back(w);
      next_.emplace_back();
    }
    return it->second;
  };
  for (const auto sentence : sentences) {
    std::uint32_t prev = 0;
    for (const auto& w : split_words(sentence)) {
      const auto id = id_of(w);
      next_[prev].push_back(id);
      prev = id;
    }
    next_[prev].push_back(0);
  }
  if (next_[0].empty()) throw ConfigError("Markov chain needs at least one sentence");
}

std::vector<std::string> MarkovChain::sentence(Rng& rng, std::size_t min_words,
                                               std::size_t max_words) const {
  while (true) {
    std::vector<std::string> out;
    std::uint32_t state = 0;
    while (out.size() <= max_words) {
      state = pick(next_[state], rng);
      if (state == 0) break;
      out.push_back(words_[state]);
    }
    if (out.size() >= min_words && out.size() <= max_words) return out;
  }
}

void SynthConfig::validate() const {
  const auto unit = [](double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(std::string(name) + " must lie in [0, 1]");
  };
  unit(gap, "gap");
  unit(win_rate, "win_rate");
  unit(unmatched_rate, "unmatched_rate");
  unit(missing_rank_rate, "missing_rank_rate");
  if (players_per_gender == 0 || interviews_per_player == 0) {
    throw ConfigError("need at least one player per gender and one interview per player");
  }
  if (min_questions == 0 || min_questions > max_questions) {
    throw ConfigError("questions per interview must satisfy 1 <= min <= max");
  }
  if (seasons < 1 || interviews_per_player > static_cast<std::size_t>(seasons) * 365) {
    throw ConfigError("not enough days for the requested interviews");
  }
  if (players_per_gender > 200) throw ConfigError("at most 200 players per gender");
}

std::vector<corpus::CommentaryDoc> generate_commentary(const SynthConfig& config) {
  config.validate();
  Rng rng(mix_seed(config.seed, 1));
  std::vector<corpus::CommentaryDoc> docs;
  docs.reserve(config.commentary_lines);
  for (std::size_t i = 0; i < config.commentary_lines; ++i) {
    const std::size_t sentences = 1 + uniform_index(rng, 3);
    std::string text;
    for (std::size_t s = 0; s < sentences; ++s) {
      if (!text.empty()) text.push_back(' ');
      text += capitalize(join(court_chain().sentence(rng))) + ".";
    }
    corpus::CommentaryDoc doc;
    doc.id = std::to_string(i + 1);
    doc.text = std::move(text);
    doc.gender = i % 2 == 0 ? Gender::male : Gender::female;
    docs.push_back(std::move(doc));
  }
  return docs;
}

SynthCorpus generate_interviews(const SynthConfig& config) {
  config.validate();
  Rng rng(mix_seed(config.seed, 2));
  SynthCorpus out;

  std::vector<Player> players;
  std::set<std::string> taken;
  for (const auto gender : {Gender::male, Gender::female}) {
    const auto& firsts = gender == Gender::male ? male_first_names() : female_first_names();
    for (std::size_t i = 0; i < config.players_per_gender; ++i) {
      while (true) {
        Player p{std::string(pick(firsts, rng)), std::string(pick(last_names(), rng)), gender};
        if (taken.insert(corpus::canonical_player_name(p.first + " " + p.last)).second) {
          players.push_back(std::move(p));
          break;
        }
      }
    }
  }

  std::set<std::pair<std::string, std::string>> match_keys;
  const auto& answers = answer_sentences();
  const std::size_t days = static_cast<std::size_t>(config.seasons) * 365;
  for (std::size_t pi = 0; pi < players.size(); ++pi) {
    const auto& player = players[pi];
    const bool female = player.gender == Gender::female;
    const std::string display = player.first + " " + player.last;
    const std::string match_name = chance(rng, 0.3) ? player.last + ", " + player.first : display;
    const int base_rank = 4 + static_cast<int>(uniform_index(rng, 15));

    auto offsets = sample_indices(days, config.interviews_per_player, rng);
    std::sort(offsets.begin(), offsets.end());
    for (std::size_t k = 0; k < offsets.size(); ++k) {
      const auto date = day_offset(config.first_season, offsets[k]);
      const std::string date_text = corpus::format_date(date);

      corpus::TranscriptRecord transcript;
      transcript.transcript_id = std::string(female ? "f" : "m") + std::to_string(pi) + "-" +
                                 std::to_string(k);
      transcript.player_name = display;
      transcript.interview_date = date;
      const std::size_t n_questions =
          config.min_questions +
          uniform_index(rng, config.max_questions - config.min_questions + 1);
      for (std::size_t q = 0; q < n_questions; ++q) {
        const bool off_court = female && chance(rng, config.gap);
        const auto& chain = off_court ? off_court_chain() : court_chain();
        transcript.snippets.push_back(question_text(rng, chain, player.first) + " " +
                                      std::string(pick(answers, rng)));
      }
      out.transcripts.push_back(std::move(transcript));

      const bool unmatched = chance(rng, config.unmatched_rate);
      const bool won = chance(rng, config.win_rate);
      const int rank = std::max(1, base_rank + static_cast<int>(uniform_index(rng, 13)) - 6);
      const bool rank_missing = chance(rng, config.missing_rank_rate);
      std::string opponent;
      do {
        opponent = std::string(pick(female ? female_first_names() : male_first_names(), rng)) +
                   " " + std::string(pick(last_names(), rng));
      } while (taken.count(corpus::canonical_player_name(opponent)) ||
               match_keys.count({date_text, corpus::canonical_player_name(opponent)}));
      const int opponent_rank = 1 + static_cast<int>(uniform_index(rng, 200));
      if (unmatched) continue;
      match_keys.insert({date_text, corpus::canonical_player_name(opponent)});
      match_keys.insert({date_text, corpus::canonical_player_name(display)});

      corpus::MatchRecord match;
      match.match_date = date;
      match.tour = female ? corpus::Tour::wta : corpus::Tour::atp;
      const std::optional<int> own_rank =
          rank_missing ? std::nullopt : std::optional<int>(rank);
      match.winner_name = won ? match_name : opponent;
      match.loser_name = won ? opponent : match_name;
      match.winner_rank = won ? own_rank : std::optional<int>(opponent_rank);
      match.loser_rank = won ? std::optional<int>(opponent_rank) : own_rank;
      out.matches.push_back(std::move(match));
    }
  }
  return out;
}

SynthCorpus generate(const SynthConfig& config) {
  auto out = generate_interviews(config);
  out.commentary = generate_commentary(config);
  return out;
}

void write_corpus(const SynthCorpus& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto open = [&dir](const char* name) {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + (dir / name).string());
    return out;
  };

  auto commentary = open("commentary.txt");
  auto genders = open("commentary_genders.csv");
  corpus::write_csv_row(genders, {"id", "gender"});
  for (const auto& doc : corpus.commentary) {
    commentary << doc.text << '\n';
    corpus::write_csv_row(genders, {doc.id, doc.gender ? std::string(to_string(*doc.gender)) : ""});
  }

  auto transcripts = open("transcripts.jsonl");
  for (const auto& t : corpus.transcripts) {
    nlohmann::json j = {{"id", t.transcript_id},
                        {"player", t.player_name},
                        {"date", corpus::format_date(t.interview_date)},
                        {"snippets", t.snippets}};
    transcripts << j.dump() << '\n';
  }

  auto matches = open("matches.csv");
  corpus::write_csv_row(matches, {"date", "winner", "loser", "winner_rank", "loser_rank", "tour"});
  const auto rank_text = [](const std::optional<int>& r) { return r ? std::to_string(*r) : ""; };
  for (const auto& m : corpus.matches) {
    corpus::write_csv_row(matches, {corpus::format_date(m.match_date), m.winner_name, m.loser_name,
                                    rank_text(m.winner_rank), rank_text(m.loser_rank),
                                    std::string(to_string(m.tour))});
  }
  for (auto* f : {&commentary, &genders, &transcripts, &matches}) {
    if (!f->flush()) throw ConfigError("write failed in " + dir.string());
  }
}

}  // namespace courtside::synth
