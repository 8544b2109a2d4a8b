#include "courtside/analysis/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>

#include "courtside/error.hpp"
#include "courtside/random.hpp"

namespace courtside::analysis {
namespace {

using corpus::Gender;
using nlohmann::json;

constexpr Gender kGenders[] = {Gender::male, Gender::female};

Rng stream(std::uint64_t seed, std::string_view tag) {
  return Rng(mix_seed(seed, fnv1a(tag.data(), tag.size())));
}

std::string gender_name(Gender g) { return std::string(corpus::to_string(g)); }

// Perplexities keyed by (condition, gender).
using CellValues = std::map<std::pair<std::string, Gender>, std::vector<double>>;

const std::vector<double>& require_cell(const CellValues& cells, Experiment experiment,
                                        const std::string& condition, Gender gender) {
  const auto it = cells.find({condition, gender});
  if (it == cells.end() || it->second.empty()) {
    throw DegenerateError("empty cell: " + std::string(to_string(experiment)) + "/" + condition +
                          "/" + gender_name(gender));
  }
  return it->second;
}

void add_cells(ExperimentResult& result, const CellValues& cells,
               const std::vector<std::string>& conditions, const AnalysisOptions& options) {
  for (const auto& condition : conditions) {
    for (const auto gender : kGenders) {
      const auto& values = require_cell(cells, result.experiment, condition, gender);
      auto rng = stream(options.seed, "cell|" + std::string(to_string(result.experiment)) + "|" +
                                          condition + "|" + gender_name(gender));
      result.cells.push_back({condition, gender, stats::summarize(values),
                              stats::bootstrap_mean(values, options.resamples, rng)});
    }
  }
}

NamedTest compare(const std::string& name, const std::string& tag, stats::Sample a,
                  stats::Sample b, const AnalysisOptions& options) {
  NamedTest t;
  t.name = name;
  t.test = stats::mann_whitney_u(a, b, options.sidedness);
  auto rng = stream(options.seed, "diff|" + tag + "|" + name);
  t.mean_difference =
      stats::bootstrap_mean_difference(a.values, b.values, options.resamples, rng);
  return t;
}

NamedTest paired_test(const std::string& name, Gender gender, const Pairing& main,
                      const std::function<Pairing(std::uint64_t)>& pair_with_seed,
                      const AnalysisOptions& options) {
  NamedTest t;
  t.name = name;
  auto sample = main.by_gender.at(gender);
  t.test = stats::wilcoxon_signed_rank(sample, options.sidedness);
  if (options.robustness_seeds > 0) {
    SeedRobustness r;
    for (std::size_t i = 0; i < options.robustness_seeds; ++i) {
      const std::uint64_t s = options.seed + i;
      const auto pairing = i == 0 ? main : pair_with_seed(s);
      r.seeds.push_back(s);
      r.p_values.push_back(
          stats::wilcoxon_signed_rank(pairing.by_gender.at(gender), options.sidedness).p_value);
    }
    r.median_p = stats::median(r.p_values);
    t.robustness = std::move(r);
  }
  return t;
}

std::vector<const ScoredQuestion*> scored_only(const std::vector<ScoredQuestion>& questions) {
  std::vector<const ScoredQuestion*> out;
  for (const auto& q : questions) {
    if (q.perplexity) out.push_back(&q);
  }
  return out;
}

// Two-condition experiment with per-gender cell comparisons and a paired test.
ExperimentResult two_condition(Experiment experiment, const std::vector<ScoredQuestion>& questions,
                               const AnalysisOptions& options, const std::string& first,
                               const std::string& second,
                               const std::function<std::optional<bool>(const ScoredQuestion&)>& is_first,
                               const std::function<Pairing(std::uint64_t)>& pair_with_seed) {
  ExperimentResult result;
  result.experiment = experiment;
  const std::string tag(to_string(experiment));

  CellValues cells;
  std::size_t excluded = 0;
  for (const auto* q : scored_only(questions)) {
    const auto side = is_first(*q);
    if (!side) {
      ++excluded;
      continue;
    }
    cells[{*side ? first : second, q->gender}].push_back(*q->perplexity);
  }
  add_cells(result, cells, {first, second}, options);

  const auto pairing = pair_with_seed(options.seed);
  for (const auto gender : kGenders) {
    const auto g = gender_name(gender);
    result.tests.push_back(compare(g + ":" + first + "_vs_" + second, tag,
                                   {g + ":" + first, cells.at({first, gender})},
                                   {g + ":" + second, cells.at({second, gender})}, options));
  }
  for (const auto gender : kGenders) {
    result.tests.push_back(
        paired_test(gender_name(gender) + ":paired", gender, pairing, pair_with_seed, options));
    result.tests.back().test->label_a = gender_name(gender) + ":" + first;
    result.tests.back().test->label_b = gender_name(gender) + ":" + second;
  }
  result.pairs = pairing.pairs;
  result.counts["excluded_questions"] = excluded;
  for (const auto gender : kGenders) {
    result.counts["pairing_units"][gender_name(gender)] = pairing.units.at(gender);
    result.counts["pairs"][gender_name(gender)] = pairing.by_gender.at(gender).pairs.size();
  }
  return result;
}

}  // namespace

std::string_view to_string(Experiment experiment) {
  switch (experiment) {
    case Experiment::gender:
      return "gender";
    case Experiment::typicality:
      return "typicality";
    case Experiment::rank:
      return "rank";
    case Experiment::outcome:
      return "outcome";
  }
  return "gender";
}

Experiment parse_experiment(std::string_view text) {
  for (const auto e : {Experiment::gender, Experiment::typicality, Experiment::rank,
                       Experiment::outcome}) {
    if (text == to_string(e)) return e;
  }
  throw ConfigError("unknown experiment '" + std::string(text) + "'");
}

std::vector<Experiment> parse_experiment_list(std::string_view text) {
  if (text == "all") {
    return {Experiment::gender, Experiment::typicality, Experiment::rank, Experiment::outcome};
  }
  std::vector<Experiment> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto part = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    const auto e = parse_experiment(part);
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double NamedTest::p_value() const {
  if (test) return test->p_value;
  if (interaction) return interaction->p_value;
  return std::nan("");
}

json NamedTest::to_json() const {
  json j = json::object();
  j["name"] = name;
  if (test) j["result"] = test->to_json();
  if (interaction) j["result"] = interaction->to_json();
  if (mean_difference) j["mean_difference_b_minus_a"] = mean_difference->to_json();
  if (robustness) {
    j["seed_robustness"] = {{"seeds", robustness->seeds},
                            {"p_values", robustness->p_values},
                            {"median_p", robustness->median_p}};
  }
  if (!note.empty()) j["note"] = note;
  return j;
}

const NamedTest& ExperimentResult::test(std::string_view name) const {
  for (const auto& t : tests) {
    if (t.name == name) return t;
  }
  throw std::out_of_range("no test named " + std::string(name));
}

ExperimentResult run_gender_experiment(const std::vector<ScoredQuestion>& questions,
                                       const AnalysisOptions& options) {
  ExperimentResult result;
  result.experiment = Experiment::gender;
  CellValues cells;
  std::vector<stats::PlayerValue> per_player;
  for (const auto* q : scored_only(questions)) {
    cells[{"all", q->gender}].push_back(*q->perplexity);
    per_player.push_back({q->player, gender_name(q->gender), *q->perplexity});
  }
  add_cells(result, cells, {"all"}, options);
  result.tests.push_back(compare("male_vs_female", "gender",
                                 {"male", cells.at({"all", Gender::male})},
                                 {"female", cells.at({"all", Gender::female})}, options));

  const auto micro = stats::micro_average_by_player(per_player, options.min_questions);
  const auto male = micro.by_group.find("male");
  const auto female = micro.by_group.find("female");
  result.counts["micro_average"]["min_questions"] = options.min_questions;
  result.counts["micro_average"]["excluded_players"] = micro.excluded_players;
  result.counts["micro_average"]["male_players"] =
      male == micro.by_group.end() ? 0 : male->second.values.size();
  result.counts["micro_average"]["female_players"] =
      female == micro.by_group.end() ? 0 : female->second.values.size();
  if (male != micro.by_group.end() && female != micro.by_group.end()) {
    try {
      result.tests.push_back(compare("player_micro_average", "gender", male->second,
                                     female->second, options));
    } catch (const DegenerateError& e) {
      result.tests.push_back({"player_micro_average", {}, {}, {}, {}, e.what()});
    }
  } else {
    result.tests.push_back({"player_micro_average", {}, {}, {}, {},
                            "not run: a gender has no player with enough questions"});
  }
  return result;
}

ExperimentResult run_typicality_experiment(const std::vector<ScoredQuestion>& questions,
                                           const AnalysisOptions& options) {
  ExperimentResult result;
  result.experiment = Experiment::typicality;
  CellValues cells;
  for (const auto* q : scored_only(questions)) {
    if (!q->label) throw DataError("question " + q->question_id + " has no typicality label");
    cells[{std::string(typicality::to_string(*q->label)), q->gender}].push_back(*q->perplexity);
  }
  add_cells(result, cells, {"typical", "atypical"}, options);
  for (const std::string condition : {"typical", "atypical"}) {
    result.tests.push_back(compare(condition + ":male_vs_female", "typicality",
                                   {"male", cells.at({condition, Gender::male})},
                                   {"female", cells.at({condition, Gender::female})}, options));
  }
  NamedTest gap;
  gap.name = "gap_of_gaps";
  auto rng = stream(options.seed, "typicality|gap_of_gaps");
  gap.interaction = stats::permutation_interaction_test(
      cells.at({"typical", Gender::male}), cells.at({"typical", Gender::female}),
      cells.at({"atypical", Gender::male}), cells.at({"atypical", Gender::female}),
      options.permutations, rng, options.sidedness);
  gap.note =
      "(female - male) mean gap on atypical minus the gap on typical questions; condition labels "
      "permuted within each gender";
  result.tests.push_back(std::move(gap));
  return result;
}

ExperimentResult run_rank_experiment(const std::vector<ScoredQuestion>& questions,
                                     const AnalysisOptions& options) {
  const int cut = options.top_rank_cut;
  auto result = two_condition(
      Experiment::rank, questions, options, "top10", "rest",
      [cut](const ScoredQuestion& q) -> std::optional<bool> {
        const auto label = rank_group_of(q.rank, cut);
        if (label.rank_missing) return std::nullopt;
        return label.group == RankGroup::top10;
      },
      [&questions, cut](std::uint64_t s) { return pair_by_rank_group(questions, s, cut); });
  result.counts["missing_rank"] = result.counts["excluded_questions"];
  result.counts["top_rank_cut"] = cut;
  return result;
}

ExperimentResult run_outcome_experiment(const std::vector<ScoredQuestion>& questions,
                                        const AnalysisOptions& options) {
  return two_condition(
      Experiment::outcome, questions, options, "won", "lost",
      [](const ScoredQuestion& q) -> std::optional<bool> {
        return q.outcome == corpus::Outcome::won;
      },
      [&questions](std::uint64_t s) { return pair_by_outcome(questions, s); });
}

ExperimentResult run_experiment(Experiment experiment,
                                const std::vector<ScoredQuestion>& questions,
                                const AnalysisOptions& options) {
  switch (experiment) {
    case Experiment::gender:
      return run_gender_experiment(questions, options);
    case Experiment::typicality:
      return run_typicality_experiment(questions, options);
    case Experiment::rank:
      return run_rank_experiment(questions, options);
    case Experiment::outcome:
      return run_outcome_experiment(questions, options);
  }
  throw ConfigError("unknown experiment");
}

std::vector<ExperimentResult> run_experiments(const std::vector<Experiment>& experiments,
                                              const std::vector<ScoredQuestion>& questions,
                                              const AnalysisOptions& options) {
  std::vector<std::future<ExperimentResult>> running;
  running.reserve(experiments.size());
  for (const auto e : experiments) {
    running.push_back(std::async(std::launch::async, [e, &questions, &options] {
      return run_experiment(e, questions, options);
    }));
  }
  std::vector<ExperimentResult> out;
  out.reserve(running.size());
  for (auto& f : running) out.push_back(f.get());
  return out;
}

}  // namespace courtside::analysis
