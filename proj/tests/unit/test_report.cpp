#include <gtest/gtest.h>

#include "analysis_helpers.hpp"
#include "courtside/analysis/report.hpp"
#include "courtside/error.hpp"
#include "test_util.hpp"

using namespace courtside;
using namespace courtside::analysis;

namespace {

ReportContext context() {
  ReportContext c;
  c.options.seed = 3;
  c.options.resamples = 100;
  c.options.permutations = 100;
  c.options.robustness_seeds = 3;
  c.options.min_questions = 5;
  c.config_hash = "0123456789abcdef";
  return c;
}

}  // namespace

TEST(Report, JsonShapeAndCsvHeaders) {
  const auto table = testutil::scored_table(1);
  const auto results = run_experiments(parse_experiment_list("all"), table, context().options);
  const auto report = build_report(results, context());
  EXPECT_EQ(report.json.at("config_hash"), "0123456789abcdef");
  EXPECT_EQ(report.json.at("seed"), 3);
  for (const char* name : {"gender", "typicality", "rank", "outcome"}) {
    EXPECT_TRUE(report.json.at("experiments").contains(name)) << name;
  }
  EXPECT_EQ(report.cells_csv.rfind("experiment,condition,gender,n,mean,median,sd,ci_low,ci_high\r\n", 0), 0u);
  EXPECT_EQ(report.pairs_csv.rfind("experiment,gender,unit,first_id,second_id,first_pp,second_pp\r\n", 0), 0u);
  EXPECT_NE(report.tests_csv.find("\r\ngender,male_vs_female,"), std::string::npos);
  EXPECT_THROW(build_report({}, context()), ConfigError);
}

TEST(Report, WrittenFilesAreReproducible) {
  const auto table = testutil::scored_table(2);
  testutil::TempDir d1("report"), d2("report");
  for (const auto* dir : {&d1, &d2}) {
    const auto results = run_experiments(parse_experiment_list("all"), table, context().options);
    write_report(build_report(results, context()), dir->path());
  }
  for (const char* f : {"report.json", "cells.csv", "tests.csv", "pairs_audit.csv"}) {
    EXPECT_EQ(testutil::slurp(d1 / f), testutil::slurp(d2 / f)) << f;
    EXPECT_FALSE(testutil::slurp(d1 / f).empty()) << f;
  }
}

TEST(ScoredTable, CsvRoundTrip) {
  auto table = testutil::scored_table(3, 2, 3);
  table[1].rank.reset();
  table[2].perplexity.reset();
  std::stringstream buf;
  write_scored_csv(buf, table);
  const auto back = read_scored_csv(buf, "mem");
  ASSERT_EQ(back.size(), table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    EXPECT_EQ(back[i].question_id, table[i].question_id);
    EXPECT_EQ(back[i].rank, table[i].rank);
    EXPECT_EQ(back[i].perplexity, table[i].perplexity);
    EXPECT_EQ(back[i].date, table[i].date);
    EXPECT_EQ(back[i].outcome, table[i].outcome);
  }
}

TEST(ScoredTable, TypicalityAttachRequiresEveryQuestion) {
  auto table = testutil::scored_table(4, 1, 2);
  std::vector<TypicalityRow> rows;
  for (const auto& q : table) rows.push_back({q.question_id, 0.25, typicality::Label::atypical});
  std::stringstream buf;
  write_typicality_csv(buf, rows);
  const auto back = read_typicality_csv(buf, "mem");
  ASSERT_EQ(back.size(), rows.size());
  attach_typicality(table, back);
  EXPECT_EQ(table[0].label, typicality::Label::atypical);
  EXPECT_EQ(table[0].sc, 0.25);
  rows.pop_back();
  EXPECT_THROW(attach_typicality(table, rows), DataError);
}
