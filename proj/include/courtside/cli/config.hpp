#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "courtside/analysis/experiments.hpp"

namespace courtside::cli {

struct PipelineConfig {
  std::filesystem::path transcripts;
  std::filesystem::path matches;
  std::filesystem::path commentary;
  std::optional<std::filesystem::path> commentary_genders;
  std::filesystem::path stopwords;
  std::filesystem::path dictionary;
  std::filesystem::path out_dir;

  int order = 2;
  double fallback_discount = 0.5;
  bool balance = false;  // subsample commentary to equal gender counts
  std::size_t min_questions = 10;
  int top_rank_cut = 10;
  std::optional<std::uint64_t> seed;
  std::string sidedness = "two_sided";
  std::string experiments = "all";
  unsigned threads = 1;
  std::size_t resamples = 10000;
  std::size_t permutations = 10000;
  std::size_t robustness_seeds = 20;

  // Fills unset resource paths with the bundled defaults, then checks that
  // every input exists and every setting is in range. Throws ConfigError.
  void resolve_and_validate();
  analysis::AnalysisOptions analysis_options() const;
  // Settings that influence results; paths are left out so that moving the
  // inputs or the output directory does not change the hash.
  nlohmann::json settings_json() const;
};

// FNV-1a 64 of the file contents as 16 hex digits; ConfigError if unreadable.
std::string file_checksum(const std::filesystem::path& path);
std::string hex64(std::uint64_t value);

// Hash of the settings plus the input checksums, as 16 hex digits.
std::string config_hash(const nlohmann::json& settings, const nlohmann::json& input_checksums);

}  // namespace courtside::cli
