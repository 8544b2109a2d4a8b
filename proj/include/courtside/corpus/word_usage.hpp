#pragma once

#include <string>
#include <vector>

#include "courtside/corpus/records.hpp"
#include "courtside/corpus/text.hpp"

namespace courtside::corpus {

struct WordUsage {
  std::string word;
  double male_pct = 0.0;
  double female_pct = 0.0;
  double diff = 0.0;  // male_pct - female_pct
};

struct WordUsageRanking {
  std::vector<WordUsage> male_skew;    // diff descending
  std::vector<WordUsage> female_skew;  // diff ascending
};

// For every normalized word outside `exclusion_list`, the share of players of
// each gender who were asked at least one question containing it. Counting is
// per player, so repeated questions to one player do not move the numbers.
// Ties are broken by word. Throws DataError unless both genders are present.
WordUsageRanking word_usage_differential(const std::vector<Interview>& interviews,
                                         const WordList& exclusion_list);

}  // namespace courtside::corpus
