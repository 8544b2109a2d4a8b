#include "courtside/cli/config.hpp"

#include <array>
#include <fstream>

#include "courtside/corpus/text.hpp"
#include "courtside/error.hpp"
#include "courtside/random.hpp"
#include "courtside/stats/hypothesis.hpp"

namespace courtside::cli {
namespace {

void require_file(const std::filesystem::path& path, const char* what) {
  if (path.empty()) throw ConfigError(std::string("missing path: ") + what);
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw ConfigError(std::string(what) + " not found: " + path.string());
  }
}

}  // namespace

void PipelineConfig::resolve_and_validate() {
  if (stopwords.empty()) stopwords = corpus::default_stopwords_path();
  if (dictionary.empty()) dictionary = corpus::default_dictionary_path();
  require_file(transcripts, "transcripts");
  require_file(matches, "matches");
  require_file(commentary, "commentary");
  if (commentary_genders) require_file(*commentary_genders, "commentary genders");
  require_file(stopwords, "stop words");
  require_file(dictionary, "dictionary");
  if (out_dir.empty()) throw ConfigError("missing path: output directory");

  if (order != 2) throw ConfigError("only bigram models are supported (order = 2)");
  if (!(fallback_discount > 0.0 && fallback_discount < 1.0)) {
    throw ConfigError("fallback discount must lie in (0, 1)");
  }
  if (!seed) throw ConfigError("a seed is required");
  if (balance && !commentary_genders) throw ConfigError("balancing needs commentary genders");
  if (min_questions == 0) throw ConfigError("min_questions must be at least 1");
  if (top_rank_cut < 1) throw ConfigError("top_rank_cut must be at least 1");
  if (resamples == 0 || permutations == 0) {
    throw ConfigError("resamples and permutations must be positive");
  }
  stats::parse_sidedness(sidedness);
  analysis::parse_experiment_list(experiments);
}

analysis::AnalysisOptions PipelineConfig::analysis_options() const {
  analysis::AnalysisOptions o;
  o.seed = seed.value_or(0);
  o.sidedness = stats::parse_sidedness(sidedness);
  o.min_questions = min_questions;
  o.top_rank_cut = top_rank_cut;
  o.resamples = resamples;
  o.permutations = permutations;
  o.robustness_seeds = robustness_seeds;
  return o;
}

nlohmann::json PipelineConfig::settings_json() const {
  return {{"order", order},
          {"fallback_discount", fallback_discount},
          {"balance", balance},
          {"min_questions", min_questions},
          {"top_rank_cut", top_rank_cut},
          {"seed", seed ? nlohmann::json(*seed) : nlohmann::json()},
          {"sidedness", std::string(stats::to_string(stats::parse_sidedness(sidedness)))},
          {"experiments", experiments},
          {"resamples", resamples},
          {"permutations", permutations},
          {"robustness_seeds", robustness_seeds}};
}

std::string hex64(std::uint64_t value) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xF];
    value >>= 4;
  }
  return out;
}

std::string file_checksum(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  std::array<char, 1 << 16> buffer;
  while (in) {
    in.read(buffer.data(), buffer.size());
    hash = fnv1a(buffer.data(), static_cast<std::size_t>(in.gcount()), hash);
  }
  return hex64(hash);
}

std::string config_hash(const nlohmann::json& settings, const nlohmann::json& input_checksums) {
  const std::string canonical =
      nlohmann::json{{"settings", settings}, {"inputs", input_checksums}}.dump();
  return hex64(fnv1a(canonical.data(), canonical.size()));
}

}  // namespace courtside::cli
