#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "courtside/analysis/scored_table.hpp"
#include "courtside/stats/hypothesis.hpp"

namespace courtside::analysis {

inline constexpr int kDefaultTopRankCut = 10;

enum class RankGroup { top10, rest };
std::string_view to_string(RankGroup group);

struct RankLabel {
  RankGroup group = RankGroup::rest;
  bool rank_missing = false;
};

// top10 iff rank <= cut; a missing rank is `rest` and flagged.
RankLabel rank_group_of(const std::optional<int>& rank, int top_cut = kDefaultTopRankCut);

struct RankSplit {
  std::vector<RankLabel> labels;  // parallel to the input
  std::size_t missing_rank = 0;
};
RankSplit split_by_ranking(const std::vector<ScoredQuestion>& questions,
                           int top_cut = kDefaultTopRankCut);

// One matched pair. `first` is the top10 (or won) side.
struct PairRecord {
  std::string experiment;
  corpus::Gender gender = corpus::Gender::male;
  std::string unit;  // player, or player|season
  std::string first_id;
  std::string second_id;
  double first = 0.0;
  double second = 0.0;
};

struct Pairing {
  std::map<corpus::Gender, stats::PairedSample> by_gender;
  std::map<corpus::Gender, std::size_t> units;  // qualifying players or (player, season) cells
  std::vector<PairRecord> pairs;                // sorted by gender, unit, first_id
};

// Questions without perplexity are ignored. In every unit holding questions on
// both sides, min(n_first, n_second) pairs are formed: the smaller side in
// question_id order, matched with a seeded draw without replacement from the
// larger side. The draw for a unit depends only on the seed and the unit key,
// so the result does not depend on input order.
//
// Rank pairing also ignores questions without a rank. Both throw
// DegenerateError when a gender has no qualifying unit.
Pairing pair_by_rank_group(const std::vector<ScoredQuestion>& questions, std::uint64_t seed,
                           int top_cut = kDefaultTopRankCut);
Pairing pair_by_outcome(const std::vector<ScoredQuestion>& questions, std::uint64_t seed);

}  // namespace courtside::analysis
