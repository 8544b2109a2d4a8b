#include "courtside/corpus/merge.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "courtside/corpus/unicode.hpp"

namespace courtside::corpus {

std::string canonical_player_name(std::string_view name) {
  std::string folded = fold_accents_lower(trim(name));
  if (const auto comma = folded.find(','); comma != std::string::npos) {
    const auto last = trim(std::string_view(folded).substr(0, comma));
    const auto first = trim(std::string_view(folded).substr(comma + 1));
    folded = std::string(first) + " " + std::string(last);
  }
  std::string out;
  bool pending_space = false;
  for (const char c : folded) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

nlohmann::json MergeReport::to_json() const {
  return nlohmann::json{{"transcripts", transcripts},
                        {"merged", merged},
                        {"unmatched_transcripts", unmatched_transcripts},
                        {"ambiguous", ambiguous},
                        {"snippets", snippets},
                        {"questions", questions},
                        {"male_players", male_players},
                        {"female_players", female_players}};
}

MergeReport MergeReport::from_json(const nlohmann::json& j) {
  MergeReport r;
  r.transcripts = j.value("transcripts", std::size_t{0});
  r.merged = j.value("merged", std::size_t{0});
  r.unmatched_transcripts = j.value("unmatched_transcripts", std::size_t{0});
  r.ambiguous = j.value("ambiguous", std::size_t{0});
  r.snippets = j.value("snippets", std::size_t{0});
  r.questions = j.value("questions", std::size_t{0});
  r.male_players = j.value("male_players", std::size_t{0});
  r.female_players = j.value("female_players", std::size_t{0});
  return r;
}

namespace {

std::string join_offenders(const std::vector<std::string>& offenders) {
  std::ostringstream out;
  out << offenders.size() << " ambiguous (date, player) match keys:";
  for (const auto& o : offenders) out << ' ' << o;
  return out.str();
}

}  // namespace

AmbiguousMatchError::AmbiguousMatchError(std::vector<std::string> offenders, MergeReport report)
    : DataError(join_offenders(offenders)),
      offenders_(std::move(offenders)),
      report_(report) {}

MergeResult merge_transcripts(const std::vector<TranscriptRecord>& transcripts,
                              const std::vector<MatchRecord>& matches,
                              const TextResources& text) {
  struct Side {
    const MatchRecord* match;
    bool winner;
  };
  std::map<std::pair<std::string, std::string>, std::vector<Side>> index;
  for (const auto& match : matches) {
    validate(match);
    const std::string date = format_date(match.match_date);
    index[{date, canonical_player_name(match.winner_name)}].push_back({&match, true});
    index[{date, canonical_player_name(match.loser_name)}].push_back({&match, false});
  }

  MergeResult result;
  result.report.transcripts = transcripts.size();

  std::vector<std::string> offenders;
  for (const auto& [key, sides] : index) {
    if (sides.size() > 1) offenders.push_back(key.first + "/" + key.second);
  }
  if (!offenders.empty()) {
    result.report.ambiguous = offenders.size();
    throw AmbiguousMatchError(std::move(offenders), result.report);
  }

  std::map<std::string, Gender> player_gender;
  for (const auto& transcript : transcripts) {
    validate(transcript);
    const std::string player = canonical_player_name(transcript.player_name);
    const auto it = index.find({format_date(transcript.interview_date), player});
    if (it == index.end()) {
      ++result.report.unmatched_transcripts;
      continue;
    }
    const Side side = it->second.front();

    Interview interview;
    interview.transcript_id = transcript.transcript_id;
    interview.player_id = player;
    interview.gender = gender_of(side.match->tour);
    interview.interview_date = transcript.interview_date;
    interview.outcome = side.winner ? Outcome::won : Outcome::lost;
    interview.rank_at_interview = side.winner ? side.match->winner_rank : side.match->loser_rank;
    interview.season = year_of(transcript.interview_date);
    interview.snippet_count = transcript.snippets.size();
    for (std::size_t s = 0; s < transcript.snippets.size(); ++s) {
      auto questions =
          text.extract_questions(transcript.snippets[s], transcript.transcript_id, static_cast<int>(s));
      for (auto& q : questions) interview.questions.push_back(std::move(q));
    }

    const auto [known, inserted] = player_gender.emplace(player, interview.gender);
    if (!inserted && known->second != interview.gender) {
      throw DataError("player '" + player + "' appears on both the ATP and WTA tours");
    }

    ++result.report.merged;
    result.report.snippets += interview.snippet_count;
    result.report.questions += interview.questions.size();
    result.interviews.push_back(std::move(interview));
  }
  for (const auto& [player, gender] : player_gender) {
    (gender == Gender::male ? result.report.male_players : result.report.female_players)++;
  }
  return result;
}

}  // namespace courtside::corpus
