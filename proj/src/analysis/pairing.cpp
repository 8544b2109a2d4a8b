#include "courtside/analysis/pairing.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "courtside/error.hpp"
#include "courtside/random.hpp"

namespace courtside::analysis {
namespace {

struct Side {
  std::vector<const ScoredQuestion*> first;
  std::vector<const ScoredQuestion*> second;
};

using UnitKey = std::pair<corpus::Gender, std::string>;

bool by_id(const ScoredQuestion* a, const ScoredQuestion* b) {
  return a->question_id < b->question_id;
}

// side(q): +1 first, -1 second, 0 excluded.
Pairing pair_units(const std::vector<ScoredQuestion>& questions, std::uint64_t seed,
                   const std::string& experiment,
                   const std::function<std::string(const ScoredQuestion&)>& unit_of,
                   const std::function<int(const ScoredQuestion&)>& side_of) {
  std::map<UnitKey, Side> units;
  for (const auto& q : questions) {
    if (!q.perplexity) continue;
    const int side = side_of(q);
    if (side == 0) continue;
    auto& unit = units[{q.gender, unit_of(q)}];
    (side > 0 ? unit.first : unit.second).push_back(&q);
  }

  Pairing out;
  for (auto& [key, unit] : units) {
    if (unit.first.empty() || unit.second.empty()) continue;
    std::sort(unit.first.begin(), unit.first.end(), by_id);
    std::sort(unit.second.begin(), unit.second.end(), by_id);
    const bool first_smaller = unit.first.size() <= unit.second.size();
    const auto& small = first_smaller ? unit.first : unit.second;
    const auto& large = first_smaller ? unit.second : unit.first;

    const std::string key_text = std::string(to_string(key.first)) + "|" + key.second;
    Rng rng(mix_seed(seed, fnv1a(key_text.data(), key_text.size())));
    const auto picks = sample_indices(large.size(), small.size(), rng);

    auto& sample = out.by_gender[key.first];
    sample.pairing_key = experiment;
    ++out.units[key.first];
    for (std::size_t i = 0; i < small.size(); ++i) {
      const ScoredQuestion* a = first_smaller ? small[i] : large[picks[i]];
      const ScoredQuestion* b = first_smaller ? large[picks[i]] : small[i];
      sample.pairs.emplace_back(*a->perplexity, *b->perplexity);
      out.pairs.push_back({experiment, key.first, key.second, a->question_id, b->question_id,
                           *a->perplexity, *b->perplexity});
    }
  }
  for (const auto gender : {corpus::Gender::male, corpus::Gender::female}) {
    if (!out.by_gender.count(gender)) {
      throw DegenerateError(experiment + " pairing: no " + std::string(to_string(gender)) +
                            " unit has questions on both sides");
    }
  }
  std::stable_sort(out.pairs.begin(), out.pairs.end(), [](const auto& a, const auto& b) {
    return std::tie(a.gender, a.unit, a.first_id) < std::tie(b.gender, b.unit, b.first_id);
  });
  return out;
}

}  // namespace

std::string_view to_string(RankGroup group) {
  return group == RankGroup::top10 ? "top10" : "rest";
}

RankLabel rank_group_of(const std::optional<int>& rank, int top_cut) {
  if (!rank) return {RankGroup::rest, true};
  return {*rank <= top_cut ? RankGroup::top10 : RankGroup::rest, false};
}

RankSplit split_by_ranking(const std::vector<ScoredQuestion>& questions, int top_cut) {
  RankSplit split;
  split.labels.reserve(questions.size());
  for (const auto& q : questions) {
    split.labels.push_back(rank_group_of(q.rank, top_cut));
    if (split.labels.back().rank_missing) ++split.missing_rank;
  }
  return split;
}

Pairing pair_by_rank_group(const std::vector<ScoredQuestion>& questions, std::uint64_t seed,
                           int top_cut) {
  return pair_units(
      questions, seed, "rank", [](const ScoredQuestion& q) { return q.player; },
      [top_cut](const ScoredQuestion& q) {
        const auto label = rank_group_of(q.rank, top_cut);
        if (label.rank_missing) return 0;
        return label.group == RankGroup::top10 ? 1 : -1;
      });
}

Pairing pair_by_outcome(const std::vector<ScoredQuestion>& questions, std::uint64_t seed) {
  return pair_units(
      questions, seed, "outcome",
      [](const ScoredQuestion& q) { return q.player + "|" + std::to_string(q.season); },
      [](const ScoredQuestion& q) { return q.outcome == corpus::Outcome::won ? 1 : -1; });
}

}  // namespace courtside::analysis
