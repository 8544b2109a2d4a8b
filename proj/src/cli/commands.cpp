#include "courtside/cli/commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "courtside/analysis/report.hpp"
#include "courtside/analysis/scored_table.hpp"
#include "courtside/lm/model_io.hpp"
#include "courtside/lm/scoring.hpp"
#include "courtside/synth/synth.hpp"

namespace courtside::cli {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Error raised inside a named pipeline stage; keeps the original category.
class StageError : public Error {
 public:
  StageError(std::string stage, const Error& cause)
      : Error(cause.kind(), stage + ": " + cause.what()), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

template <typename F>
auto in_stage(const std::string& name, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    throw StageError(name, e);
  } catch (const std::bad_alloc&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, DataError(e.what()));
  }
}

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::config:
      return "config";
    case ErrorKind::data:
      return "data";
    case ErrorKind::degenerate:
      return "degenerate";
  }
  return "data";
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

void write_text(const fs::path& path, const std::string& text) {
  auto out = open_output(path);
  out << text;
  if (!out.flush()) throw ConfigError("cannot write " + path.string());
}

json read_json_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

corpus::TextResources load_text(fs::path dictionary, fs::path stopwords) {
  if (dictionary.empty()) dictionary = corpus::default_dictionary_path();
  if (stopwords.empty()) stopwords = corpus::default_stopwords_path();
  return corpus::TextResources::load(dictionary, stopwords);
}

void write_questions(const fs::path& path, const std::vector<corpus::QuestionRecord>& questions) {
  auto out = open_output(path);
  corpus::write_questions_jsonl(out, questions);
  if (!out.flush()) throw ConfigError("cannot write " + path.string());
}

void write_scored(const fs::path& path, const std::vector<analysis::ScoredQuestion>& rows) {
  std::ostringstream text;
  analysis::write_scored_csv(text, rows);
  write_text(path, text.str());
}

void write_typicality(const fs::path& path, const std::vector<analysis::TypicalityRow>& rows) {
  std::ostringstream text;
  analysis::write_typicality_csv(text, rows);
  write_text(path, text.str());
}

struct AnalyzeInputs {
  std::vector<analysis::ScoredQuestion> scored;
  std::optional<std::vector<analysis::TypicalityRow>> typicality;
  json merge_report;
};

analysis::AnalysisReport analyze(AnalyzeInputs inputs, const std::vector<analysis::Experiment>& which,
                                 const analysis::AnalysisOptions& options,
                                 const std::string& config_hash) {
  std::vector<analysis::ScoredQuestion> usable;
  std::size_t unscorable = 0;
  for (auto& q : inputs.scored) {
    if (q.perplexity) {
      usable.push_back(std::move(q));
    } else {
      ++unscorable;
    }
  }
  const bool wants_typicality =
      std::find(which.begin(), which.end(), analysis::Experiment::typicality) != which.end();
  if (inputs.typicality) {
    analysis::attach_typicality(usable, *inputs.typicality);
  } else if (wants_typicality) {
    throw ConfigError("the typicality experiment needs a typicality table (--typicality)");
  }
  const auto results = analysis::run_experiments(which, usable, options);

  analysis::ReportContext context;
  context.options = options;
  context.config_hash = config_hash;
  context.merge_report = inputs.merge_report;
  context.dropped = {{"unscorable_questions", unscorable},
                     {"analyzed_questions", usable.size()},
                     {"missing_rank_questions", analysis::split_by_ranking(usable).missing_rank}};
  return analysis::build_report(results, context);
}

// CLI11 validator accepting existing files only, with a message naming the path.
const CLI::Validator& existing_file() { return CLI::ExistingFile; }

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::config:
      return kExitConfig;
    case ErrorKind::data:
      return kExitData;
    case ErrorKind::degenerate:
      return kExitDegenerate;
  }
  return kExitData;
}

IngestResult ingest(const fs::path& transcripts, const fs::path& matches,
                    const corpus::TextResources& text) {
  const auto transcript_records = corpus::read_transcripts_jsonl(transcripts);
  const auto match_records = corpus::read_matches_csv(matches);
  auto merged = corpus::merge_transcripts(transcript_records, match_records, text);
  return {corpus::flatten_questions(merged.interviews), merged.report};
}

lm::KneserNeyModel train_from_commentary(const fs::path& commentary,
                                         const std::optional<fs::path>& genders, bool balance,
                                         std::uint64_t seed, double fallback_discount,
                                         const corpus::TextResources& text) {
  auto docs = corpus::read_commentary(commentary, genders);
  if (balance) docs = lm::balance_by_gender(docs, seed);
  return lm::train_lm(lm::commentary_sentences(docs, text), fallback_discount);
}

int run_pipeline(PipelineConfig config, std::ostream& err) {
  if (!config.out_dir.empty()) {
    std::error_code ec;
    fs::remove(config.out_dir / "error.json", ec);
  }
  json manifest = {{"tool", {{"name", "courtside"}, {"version", COURTSIDE_VERSION}}},
                   {"status", "running"}};
  std::string stage = "config";
  try {
    config.resolve_and_validate();
    fs::create_directories(config.out_dir);
    const fs::path& out = config.out_dir;

    json inputs = {{"transcripts", file_checksum(config.transcripts)},
                   {"matches", file_checksum(config.matches)},
                   {"commentary", file_checksum(config.commentary)},
                   {"stopwords", file_checksum(config.stopwords)},
                   {"dictionary", file_checksum(config.dictionary)}};
    if (config.commentary_genders) {
      inputs["commentary_genders"] = file_checksum(*config.commentary_genders);
    }
    const json settings = config.settings_json();
    const std::string hash = config_hash(settings, inputs);
    manifest["config_hash"] = hash;
    manifest["seed"] = *config.seed;
    manifest["settings"] = settings;
    manifest["input_checksums"] = inputs;

    stage = "resources";
    const auto text =
        in_stage(stage, [&] { return corpus::TextResources::load(config.dictionary, config.stopwords); });

    stage = "ingest";
    const auto ingested = in_stage(stage, [&] {
      auto result = ingest(config.transcripts, config.matches, text);
      write_questions(out / "questions.jsonl", result.questions);
      write_text(out / "merge_report.json", result.report.to_json().dump(2) + "\n");
      return result;
    });

    stage = "train-lm";
    const auto model = in_stage(stage, [&] {
      auto m = train_from_commentary(config.commentary, config.commentary_genders, config.balance,
                                     *config.seed, config.fallback_discount, text);
      lm::save_model(m, out / "model.bin");
      return m;
    });

    stage = "score";
    auto scored = in_stage(stage, [&] {
      auto rows = analysis::score_questions(model, ingested.questions, text, config.threads);
      write_scored(out / "scored.csv", rows);
      return rows;
    });

    stage = "typicality";
    auto labels = in_stage(stage, [&] {
      auto rows = analysis::label_typicality(ingested.questions, text);
      write_typicality(out / "typicality.csv", rows);
      return rows;
    });

    stage = "analyze";
    in_stage(stage, [&] {
      const auto report =
          analyze({std::move(scored), std::move(labels), ingested.report.to_json()},
                  analysis::parse_experiment_list(config.experiments), config.analysis_options(),
                  hash);
      analysis::write_report(report, out);
      return 0;
    });

    json outputs = json::object();
    for (const char* name : {"questions.jsonl", "merge_report.json", "model.bin", "scored.csv",
                             "typicality.csv", "report.json", "cells.csv", "tests.csv",
                             "pairs_audit.csv"}) {
      outputs[name] = file_checksum(out / name);
    }
    manifest["outputs"] = outputs;
    manifest["status"] = "ok";
    write_text(out / "run_manifest.json", manifest.dump(2) + "\n");
    return kExitOk;
  } catch (const Error& e) {
    const auto* staged = dynamic_cast<const StageError*>(&e);
    const json error = {{"stage", staged ? staged->stage() : stage},
                        {"kind", kind_name(e.kind())},
                        {"exit_code", exit_code_for(e.kind())},
                        {"message", e.what()}};
    err << "error: " << e.what() << '\n';
    manifest["status"] = "failed";
    manifest["error"] = error;
    if (!config.out_dir.empty()) {
      try {
        fs::create_directories(config.out_dir);
        write_text(config.out_dir / "error.json", error.dump(2) + "\n");
        write_text(config.out_dir / "run_manifest.json", manifest.dump(2) + "\n");
      } catch (const std::exception& write_error) {
        err << "error: " << write_error.what() << '\n';
      }
    }
    return exit_code_for(e.kind());
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Game-relatedness analysis of post-match interview questions"};
  app.set_version_flag("--version", std::string(COURTSIDE_VERSION));
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file; keys go in a section named after the subcommand");
  app.allow_config_extras(CLI::config_extras_mode::error);

  std::function<int()> action;
  std::string dictionary;
  std::string stopwords;
  const auto add_text_options = [&](CLI::App* sub) {
    sub->add_option("--dictionary", dictionary, "English word list for entity masking")
        ->check(existing_file());
    sub->add_option("--stopwords", stopwords, "Stop-word list")->check(existing_file());
  };

  // ingest
  std::string in_transcripts, in_matches, ingest_out;
  auto* ingest_cmd = app.add_subcommand("ingest", "Merge transcripts with match results");
  ingest_cmd->add_option("--transcripts", in_transcripts, "Transcripts JSONL")
      ->required()
      ->check(existing_file());
  ingest_cmd->add_option("--matches", in_matches, "Match results CSV")->required()->check(existing_file());
  add_text_options(ingest_cmd);
  ingest_cmd->add_option("--out", ingest_out, "Output directory")->required();
  ingest_cmd->callback([&] {
    action = [&] {
      const auto text = load_text(dictionary, stopwords);
      const fs::path dir(ingest_out);
      try {
        const auto result = ingest(in_transcripts, in_matches, text);
        write_questions(dir / "questions.jsonl", result.questions);
        write_text(dir / "merge_report.json", result.report.to_json().dump(2) + "\n");
        out << "merged " << result.report.merged << " of " << result.report.transcripts
            << " transcripts, " << result.questions.size() << " questions\n";
      } catch (const corpus::AmbiguousMatchError& e) {
        write_text(dir / "merge_report.json", e.report().to_json().dump(2) + "\n");
        throw;
      }
      return kExitOk;
    };
  });

  // train-lm
  std::string train_corpus, train_genders, train_out, train_dump;
  bool train_balance = false;
  std::uint64_t train_seed = 0;
  double train_fallback = lm::kDefaultFallbackDiscount;
  auto* train_cmd = app.add_subcommand("train-lm", "Train the bigram commentary model");
  train_cmd->add_option("--corpus", train_corpus, "Commentary text, one document per line")
      ->required()
      ->check(existing_file());
  train_cmd->add_option("--genders", train_genders, "CSV id,gender tagging commentary lines")
      ->check(existing_file());
  train_cmd->add_flag("--balance", train_balance, "Subsample commentary to equal gender counts");
  auto* train_seed_opt = train_cmd->add_option("--seed", train_seed, "Seed for --balance");
  train_cmd->add_option("--fallback-discount", train_fallback,
                        "Discount used when a count-of-counts estimate is unusable")
      ->check(CLI::Range(0.0, 1.0));
  add_text_options(train_cmd);
  train_cmd->add_option("--out", train_out, "Model file")->required();
  train_cmd->add_option("--dump", train_dump, "Also write an ARPA-style text dump");
  train_cmd->callback([&] {
    action = [&] {
      if (train_balance && train_genders.empty()) throw ConfigError("--balance needs --genders");
      if (train_balance && train_seed_opt->count() == 0) throw ConfigError("--balance needs --seed");
      const auto text = load_text(dictionary, stopwords);
      std::optional<fs::path> genders;
      if (!train_genders.empty()) genders = train_genders;
      const auto model =
          train_from_commentary(train_corpus, genders, train_balance, train_seed, train_fallback, text);
      lm::save_model(model, train_out);
      if (!train_dump.empty()) {
        auto dump = open_output(train_dump);
        lm::write_arpa(model, dump);
      }
      out << "vocabulary " << model.vocab().size() << ", bigrams " << model.bigram_count() << '\n';
      return kExitOk;
    };
  });

  // score
  std::string score_model, score_questions, score_out;
  unsigned score_threads = 1;
  auto* score_cmd = app.add_subcommand("score", "Perplexity of every question");
  score_cmd->add_option("--model", score_model, "Model file")->required()->check(existing_file());
  score_cmd->add_option("--questions", score_questions, "questions.jsonl from ingest")
      ->required()
      ->check(existing_file());
  score_cmd->add_option("--threads", score_threads, "Worker threads (0 = all cores)");
  add_text_options(score_cmd);
  score_cmd->add_option("--out", score_out, "Scored CSV")->required();
  score_cmd->callback([&] {
    action = [&] {
      const auto text = load_text(dictionary, stopwords);
      const auto model = lm::load_model(score_model);
      const auto rows = analysis::score_questions(model, corpus::read_questions_jsonl(score_questions),
                                                  text, score_threads);
      write_scored(score_out, rows);
      return kExitOk;
    };
  });

  // typicality
  std::string typ_questions, typ_out;
  auto* typ_cmd = app.add_subcommand("typicality", "IDF atypicality labels for every question");
  typ_cmd->add_option("--questions", typ_questions, "questions.jsonl from ingest")
      ->required()
      ->check(existing_file());
  add_text_options(typ_cmd);
  typ_cmd->add_option("--out", typ_out, "Typicality CSV")->required();
  typ_cmd->callback([&] {
    action = [&] {
      const auto text = load_text(dictionary, stopwords);
      write_typicality(typ_out,
                       analysis::label_typicality(corpus::read_questions_jsonl(typ_questions), text));
      return kExitOk;
    };
  });

  // analyze
  std::string an_scored, an_typicality, an_merge, an_out, an_experiment = "all";
  PipelineConfig an_settings;
  std::uint64_t an_seed = 0;
  auto* an_cmd = app.add_subcommand("analyze", "Group comparisons and report");
  an_cmd->add_option("--scored", an_scored, "Scored CSV")->required()->check(existing_file());
  an_cmd->add_option("--typicality", an_typicality, "Typicality CSV")->check(existing_file());
  an_cmd->add_option("--merge-report", an_merge, "merge_report.json from ingest")
      ->check(existing_file());
  an_cmd->add_option("--experiment", an_experiment, "gender, typicality, rank, outcome or all");
  an_cmd->add_option("--seed", an_seed, "Seed for pairing, bootstrap and permutations")->required();
  an_cmd->add_option("--sidedness", an_settings.sidedness, "two_sided, less or greater");
  an_cmd->add_option("--min-questions", an_settings.min_questions,
                     "Questions a player needs for the micro-average");
  an_cmd->add_option("--top-rank-cut", an_settings.top_rank_cut, "Largest rank counted as top");
  an_cmd->add_option("--resamples", an_settings.resamples, "Bootstrap resamples");
  an_cmd->add_option("--permutations", an_settings.permutations, "Permutations for the interaction test");
  an_cmd->add_option("--robustness-seeds", an_settings.robustness_seeds,
                     "Pairing seeds behind the reported median p");
  an_cmd->add_option("--out", an_out, "Output directory")->required();
  an_cmd->callback([&] {
    action = [&] {
      an_settings.seed = an_seed;
      an_settings.experiments = an_experiment;
      if (an_settings.min_questions == 0) throw ConfigError("--min-questions must be at least 1");
      if (an_settings.resamples == 0 || an_settings.permutations == 0) {
        throw ConfigError("--resamples and --permutations must be positive");
      }
      const auto which = analysis::parse_experiment_list(an_experiment);
      AnalyzeInputs inputs;
      inputs.scored = analysis::read_scored_csv(an_scored);
      if (!an_typicality.empty()) inputs.typicality = analysis::read_typicality_csv(an_typicality);
      if (!an_merge.empty()) inputs.merge_report = read_json_file(an_merge);
      json checksums = {{"scored", file_checksum(an_scored)}};
      if (!an_typicality.empty()) checksums["typicality"] = file_checksum(an_typicality);
      const auto settings = an_settings.settings_json();
      const auto report = analyze(std::move(inputs), which, an_settings.analysis_options(),
                                  config_hash(settings, checksums));
      analysis::write_report(report, an_out);
      return kExitOk;
    };
  });

  // pipeline
  PipelineConfig pc;
  std::string pc_transcripts, pc_matches, pc_commentary, pc_genders, pc_out;
  auto* pipe_cmd = app.add_subcommand("pipeline", "Ingest, train, score, label and analyze");
  pipe_cmd->add_option("--transcripts", pc_transcripts, "Transcripts JSONL");
  pipe_cmd->add_option("--matches", pc_matches, "Match results CSV");
  pipe_cmd->add_option("--commentary", pc_commentary, "Commentary text");
  pipe_cmd->add_option("--commentary-genders", pc_genders, "CSV id,gender for commentary lines");
  pipe_cmd->add_option("--dictionary", dictionary, "English word list for entity masking");
  pipe_cmd->add_option("--stopwords", stopwords, "Stop-word list");
  pipe_cmd->add_option("--out", pc_out, "Output directory");
  pipe_cmd->add_option("--order", pc.order, "N-gram order (only 2)");
  pipe_cmd->add_option("--fallback-discount", pc.fallback_discount, "Fallback discount");
  pipe_cmd->add_flag("--balance", pc.balance, "Subsample commentary to equal gender counts");
  auto* pc_seed_opt = pipe_cmd->add_option("--seed", pc.seed, "Seed for every random step");
  pipe_cmd->add_option("--sidedness", pc.sidedness, "two_sided, less or greater");
  pipe_cmd->add_option("--experiment", pc.experiments, "gender, typicality, rank, outcome or all");
  pipe_cmd->add_option("--min-questions", pc.min_questions, "Questions a player needs for the micro-average");
  pipe_cmd->add_option("--top-rank-cut", pc.top_rank_cut, "Largest rank counted as top");
  pipe_cmd->add_option("--threads", pc.threads, "Scoring threads (0 = all cores)");
  pipe_cmd->add_option("--resamples", pc.resamples, "Bootstrap resamples");
  pipe_cmd->add_option("--permutations", pc.permutations, "Permutations for the interaction test");
  pipe_cmd->add_option("--robustness-seeds", pc.robustness_seeds,
                       "Pairing seeds behind the reported median p");
  pipe_cmd->callback([&] {
    action = [&] {
      (void)pc_seed_opt;
      pc.transcripts = pc_transcripts;
      pc.matches = pc_matches;
      pc.commentary = pc_commentary;
      if (!pc_genders.empty()) pc.commentary_genders = fs::path(pc_genders);
      pc.out_dir = pc_out;
      pc.dictionary = dictionary;
      pc.stopwords = stopwords;
      return run_pipeline(pc, err);
    };
  });

  // synth
  synth::SynthConfig sc;
  std::string synth_out;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic corpus with a planted gap");
  synth_cmd->add_option("--seed", sc.seed, "Generator seed")->required();
  synth_cmd->add_option("--gap", sc.gap, "Share of female questions from the off-court model")
      ->check(CLI::Range(0.0, 1.0));
  synth_cmd->add_option("--commentary-lines", sc.commentary_lines, "Commentary documents");
  synth_cmd->add_option("--players", sc.players_per_gender, "Players per gender");
  synth_cmd->add_option("--interviews", sc.interviews_per_player, "Interviews per player");
  synth_cmd->add_option("--min-questions", sc.min_questions, "Fewest questions per interview");
  synth_cmd->add_option("--max-questions", sc.max_questions, "Most questions per interview");
  synth_cmd->add_option("--first-season", sc.first_season, "First calendar year");
  synth_cmd->add_option("--seasons", sc.seasons, "Number of calendar years");
  synth_cmd->add_option("--unmatched-rate", sc.unmatched_rate, "Share of transcripts without a match");
  synth_cmd->add_option("--missing-rank-rate", sc.missing_rank_rate, "Share of blank interviewee ranks");
  synth_cmd->add_option("--out", synth_out, "Output directory")->required();
  synth_cmd->callback([&] {
    action = [&] {
      const auto corpus = synth::generate(sc);
      synth::write_corpus(corpus, synth_out);
      out << "wrote " << corpus.transcripts.size() << " transcripts, " << corpus.matches.size()
          << " matches, " << corpus.commentary.size() << " commentary lines\n";
      return kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  try {
    return action ? action() : kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace courtside::cli
