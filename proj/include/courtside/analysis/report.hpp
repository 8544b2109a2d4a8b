#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "courtside/analysis/experiments.hpp"

namespace courtside::analysis {

struct ReportContext {
  AnalysisOptions options;
  std::string config_hash;
  nlohmann::json merge_report;  // null when the merge report is not available
  nlohmann::json dropped = nlohmann::json::object();
};

struct AnalysisReport {
  nlohmann::json json;
  std::string cells_csv;  // experiment,condition,gender,n,mean,median,sd,ci_low,ci_high
  std::string tests_csv;  // one row per comparison
  std::string pairs_csv;  // every matched pair of the paired experiments
};

// Throws ConfigError when `results` is empty. The output holds no clock or
// host data, so identical inputs give identical bytes.
AnalysisReport build_report(const std::vector<ExperimentResult>& results,
                            const ReportContext& context);

// Writes report.json, cells.csv, tests.csv and pairs_audit.csv into `dir`.
void write_report(const AnalysisReport& report, const std::filesystem::path& dir);

}  // namespace courtside::analysis
