#include "courtside/analysis/report.hpp"

#include <fstream>
#include <sstream>

#include "courtside/corpus/csv.hpp"
#include "courtside/error.hpp"

namespace courtside::analysis {
namespace {

using corpus::format_double;
using corpus::write_csv_row;
using nlohmann::json;

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw ConfigError("cannot write " + path.string());
}

json cell_json(const Cell& cell) {
  return {{"condition", cell.condition},
          {"gender", corpus::to_string(cell.gender)},
          {"summary", cell.summary.to_json()},
          {"mean_ci", cell.mean_ci.to_json()}};
}

}  // namespace

AnalysisReport build_report(const std::vector<ExperimentResult>& results,
                            const ReportContext& context) {
  if (results.empty()) throw ConfigError("no experiment was run");
  const auto& o = context.options;

  AnalysisReport report;
  json& j = report.json;
  j["tool"] = {{"name", "courtside"}, {"version", COURTSIDE_VERSION}};
  j["config_hash"] = context.config_hash;
  j["seed"] = o.seed;
  j["sidedness"] = stats::to_string(o.sidedness);
  j["options"] = {{"min_questions", o.min_questions},
                  {"top_rank_cut", o.top_rank_cut},
                  {"bootstrap_resamples", o.resamples},
                  {"permutations", o.permutations},
                  {"robustness_seeds", o.robustness_seeds}};
  j["merge_report"] = context.merge_report;
  j["dropped"] = context.dropped;
  j["experiments"] = json::object();

  std::ostringstream cells;
  std::ostringstream tests;
  std::ostringstream pairs;
  write_csv_row(cells, {"experiment", "condition", "gender", "n", "mean", "median", "sd",
                        "ci_low", "ci_high"});
  write_csv_row(tests, {"experiment", "test", "method", "statistic", "p_value", "sidedness", "n1",
                        "n2", "label_a", "label_b", "mean_a", "mean_b", "median_p_over_seeds"});
  write_csv_row(pairs, {"experiment", "gender", "unit", "first_id", "second_id", "first_pp",
                        "second_pp"});

  for (const auto& r : results) {
    const std::string name(to_string(r.experiment));
    json& e = j["experiments"][name];
    e["cells"] = json::array();
    for (const auto& cell : r.cells) {
      e["cells"].push_back(cell_json(cell));
      write_csv_row(cells, {name, cell.condition, std::string(corpus::to_string(cell.gender)),
                            std::to_string(cell.summary.n), format_double(cell.summary.mean),
                            format_double(cell.summary.median),
                            cell.summary.sd ? format_double(*cell.summary.sd) : "",
                            format_double(cell.mean_ci.ci_low),
                            format_double(cell.mean_ci.ci_high)});
    }
    e["tests"] = json::array();
    for (const auto& t : r.tests) {
      e["tests"].push_back(t.to_json());
      const std::string robust = t.robustness ? format_double(t.robustness->median_p) : "";
      if (t.test) {
        const auto& x = *t.test;
        write_csv_row(tests, {name, t.name, std::string(stats::to_string(x.method)),
                              format_double(x.statistic), format_double(x.p_value),
                              std::string(stats::to_string(x.sidedness)), std::to_string(x.n1),
                              std::to_string(x.n2), x.label_a, x.label_b,
                              format_double(x.mean_a), format_double(x.mean_b), robust});
      } else if (t.interaction) {
        const auto& x = *t.interaction;
        write_csv_row(tests, {name, t.name, std::string(stats::to_string(stats::Method::permutation)),
                              format_double(x.statistic), format_double(x.p_value),
                              std::string(stats::to_string(x.sidedness)), "", "", "", "", "", "",
                              robust});
      }
    }
    e["counts"] = r.counts;
    for (const auto& p : r.pairs) {
      write_csv_row(pairs, {p.experiment, std::string(corpus::to_string(p.gender)), p.unit,
                            p.first_id, p.second_id, format_double(p.first),
                            format_double(p.second)});
    }
  }
  report.cells_csv = cells.str();
  report.tests_csv = tests.str();
  report.pairs_csv = pairs.str();
  return report;
}

void write_report(const AnalysisReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_text(dir / "report.json", report.json.dump(2) + "\n");
  write_text(dir / "cells.csv", report.cells_csv);
  write_text(dir / "tests.csv", report.tests_csv);
  write_text(dir / "pairs_audit.csv", report.pairs_csv);
}

}  // namespace courtside::analysis
