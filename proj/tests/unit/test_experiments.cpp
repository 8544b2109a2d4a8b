#include <gtest/gtest.h>

#include "analysis_helpers.hpp"
#include "courtside/analysis/experiments.hpp"
#include "courtside/error.hpp"
#include "courtside/stats/descriptive.hpp"

using namespace courtside;
using namespace courtside::analysis;

namespace {

AnalysisOptions fast_options() {
  AnalysisOptions o;
  o.seed = 42;
  o.resamples = 200;
  o.permutations = 200;
  o.robustness_seeds = 5;
  o.min_questions = 5;
  return o;
}

}  // namespace

TEST(ExperimentNames, ParseList) {
  EXPECT_EQ(parse_experiment_list("all").size(), 4u);
  EXPECT_EQ(parse_experiment_list("rank,gender"),
            (std::vector<Experiment>{Experiment::rank, Experiment::gender}));
  EXPECT_THROW(parse_experiment("weather"), ConfigError);
}

TEST(GenderExperiment, CellsMatchDirectSummaries) {
  const auto table = testutil::scored_table(1, 6, 12, 40.0);
  const auto r = run_gender_experiment(table, fast_options());
  std::vector<double> male;
  for (const auto& q : table) {
    if (q.gender == corpus::Gender::male) male.push_back(*q.perplexity);
  }
  ASSERT_EQ(r.cells.size(), 2u);
  const auto& cell = r.cells[0].gender == corpus::Gender::male ? r.cells[0] : r.cells[1];
  EXPECT_EQ(cell.summary.n, male.size());
  EXPECT_DOUBLE_EQ(cell.summary.mean, stats::mean(male));
  const auto& t = r.test("male_vs_female");
  ASSERT_TRUE(t.test);
  EXPECT_LT(t.p_value(), 1e-6);
  EXPECT_EQ(t.test->direction(), "a_lower");
  EXPECT_TRUE(r.test("player_micro_average").test.has_value());
}

TEST(GenderExperiment, UnscoredQuestionsAreLeftOut) {
  auto table = testutil::scored_table(2);
  table[0].perplexity.reset();
  const auto r = run_gender_experiment(table, fast_options());
  std::size_t total = 0;
  for (const auto& c : r.cells) total += c.summary.n;
  EXPECT_EQ(total, table.size() - 1);
}

TEST(TypicalityExperiment, HasFourCellsAndInteraction) {
  const auto r = run_typicality_experiment(testutil::scored_table(3), fast_options());
  EXPECT_EQ(r.cells.size(), 4u);
  EXPECT_TRUE(r.test("gap_of_gaps").interaction.has_value());
  EXPECT_TRUE(r.test("atypical:male_vs_female").test.has_value());
}

TEST(RankExperiment, PairedTestsAndRobustness) {
  const auto r = run_rank_experiment(testutil::scored_table(4), fast_options());
  const auto& paired = r.test("male:paired");
  ASSERT_TRUE(paired.test);
  EXPECT_EQ(paired.test->n1, 24u);
  ASSERT_TRUE(paired.robustness);
  EXPECT_EQ(paired.robustness->p_values.size(), 5u);
  EXPECT_FALSE(r.pairs.empty());
  EXPECT_EQ(r.counts.at("top_rank_cut"), 10);
}

TEST(Experiments, DeterministicAndOrdered) {
  const auto table = testutil::scored_table(5);
  const auto list = parse_experiment_list("outcome,gender");
  const auto a = run_experiments(list, table, fast_options());
  const auto b = run_experiments(list, table, fast_options());
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].experiment, Experiment::outcome);
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].tests.size(), b[i].tests.size());
    for (std::size_t k = 0; k < a[i].tests.size(); ++k) {
      EXPECT_EQ(a[i].tests[k].to_json().dump(), b[i].tests[k].to_json().dump());
    }
  }
}

TEST(Experiments, EmptyCellIsDegenerate) {
  auto table = testutil::scored_table(6);
  std::erase_if(table, [](const auto& q) { return q.gender == corpus::Gender::female; });
  EXPECT_THROW(run_gender_experiment(table, fast_options()), DegenerateError);
}
