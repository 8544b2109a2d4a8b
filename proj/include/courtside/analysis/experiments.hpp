#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "courtside/analysis/pairing.hpp"
#include "courtside/analysis/scored_table.hpp"
#include "courtside/stats/descriptive.hpp"
#include "courtside/stats/hypothesis.hpp"
#include "courtside/stats/resampling.hpp"

namespace courtside::analysis {

enum class Experiment { gender, typicality, rank, outcome };
std::string_view to_string(Experiment experiment);
Experiment parse_experiment(std::string_view text);
// "all" expands to every experiment, in declaration order.
std::vector<Experiment> parse_experiment_list(std::string_view text);

struct AnalysisOptions {
  std::uint64_t seed = 0;
  stats::Sidedness sidedness = stats::Sidedness::two_sided;
  std::size_t min_questions = 10;
  int top_rank_cut = kDefaultTopRankCut;
  std::size_t resamples = stats::kDefaultResamples;
  std::size_t permutations = stats::kDefaultResamples;
  // Extra pairing seeds whose median p is reported next to the main result.
  std::size_t robustness_seeds = 20;
};

// Per-question perplexities of one (condition, gender) cell.
struct Cell {
  std::string condition;
  corpus::Gender gender = corpus::Gender::male;
  stats::Summary summary;
  stats::BootstrapInterval mean_ci;
};

struct SeedRobustness {
  std::vector<std::uint64_t> seeds;
  std::vector<double> p_values;
  double median_p = 1.0;
};

struct NamedTest {
  std::string name;
  std::optional<stats::TestResult> test;
  std::optional<stats::InteractionTest> interaction;
  std::optional<stats::BootstrapInterval> mean_difference;  // mean(b) - mean(a)
  std::optional<SeedRobustness> robustness;
  std::string note;

  double p_value() const;
  nlohmann::json to_json() const;
};

struct ExperimentResult {
  Experiment experiment = Experiment::gender;
  std::vector<Cell> cells;
  std::vector<NamedTest> tests;
  std::vector<PairRecord> pairs;
  nlohmann::json counts = nlohmann::json::object();

  const NamedTest& test(std::string_view name) const;
};

// Questions without perplexity are left out of every experiment; the caller
// counts them. An empty cell throws DegenerateError naming the cell.
ExperimentResult run_gender_experiment(const std::vector<ScoredQuestion>& questions,
                                       const AnalysisOptions& options);
// Needs typicality labels on every question.
ExperimentResult run_typicality_experiment(const std::vector<ScoredQuestion>& questions,
                                           const AnalysisOptions& options);
ExperimentResult run_rank_experiment(const std::vector<ScoredQuestion>& questions,
                                     const AnalysisOptions& options);
ExperimentResult run_outcome_experiment(const std::vector<ScoredQuestion>& questions,
                                        const AnalysisOptions& options);

ExperimentResult run_experiment(Experiment experiment,
                                const std::vector<ScoredQuestion>& questions,
                                const AnalysisOptions& options);

// Runs the experiments concurrently; results come back in request order.
std::vector<ExperimentResult> run_experiments(const std::vector<Experiment>& experiments,
                                              const std::vector<ScoredQuestion>& questions,
                                              const AnalysisOptions& options);

}  // namespace courtside::analysis
