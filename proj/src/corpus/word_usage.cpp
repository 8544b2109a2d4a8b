#include "courtside/corpus/word_usage.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "courtside/error.hpp"

namespace courtside::corpus {

WordUsageRanking word_usage_differential(const std::vector<Interview>& interviews,
                                         const WordList& exclusion_list) {
  std::map<std::string, Gender> players;
  std::map<std::string, std::set<std::string>> words_by_player;
  for (const auto& interview : interviews) {
    players.emplace(interview.player_id, interview.gender);
    auto& words = words_by_player[interview.player_id];
    for (const auto& question : interview.questions) {
      for (const auto& token : question.tokens) {
        if (token.is_punct || token.is_entity_mask) continue;
        if (exclusion_list.contains(token.normalized)) continue;
        words.insert(token.normalized);
      }
    }
  }

  std::size_t male_players = 0;
  std::size_t female_players = 0;
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  for (const auto& [player, gender] : players) {
    (gender == Gender::male ? male_players : female_players)++;
    for (const auto& word : words_by_player[player]) {
      auto& [male, female] = counts[word];
      (gender == Gender::male ? male : female)++;
    }
  }
  if (male_players == 0 || female_players == 0) {
    throw DataError("word usage differential needs players of both genders");
  }

  std::vector<WordUsage> usage;
  usage.reserve(counts.size());
  for (const auto& [word, pair] : counts) {
    WordUsage u;
    u.word = word;
    u.male_pct = static_cast<double>(pair.first) / static_cast<double>(male_players);
    u.female_pct = static_cast<double>(pair.second) / static_cast<double>(female_players);
    u.diff = u.male_pct - u.female_pct;
    usage.push_back(std::move(u));
  }

  WordUsageRanking ranking;
  ranking.male_skew = usage;
  std::stable_sort(ranking.male_skew.begin(), ranking.male_skew.end(),
                   [](const WordUsage& a, const WordUsage& b) { return a.diff > b.diff; });
  ranking.female_skew = std::move(usage);
  std::stable_sort(ranking.female_skew.begin(), ranking.female_skew.end(),
                   [](const WordUsage& a, const WordUsage& b) { return a.diff < b.diff; });
  return ranking;
}

}  // namespace courtside::corpus
