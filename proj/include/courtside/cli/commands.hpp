#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "courtside/cli/config.hpp"
#include "courtside/corpus/ingest.hpp"
#include "courtside/corpus/merge.hpp"
#include "courtside/error.hpp"
#include "courtside/lm/kneser_ney.hpp"

namespace courtside::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitDegenerate = 4;

int exit_code_for(ErrorKind kind);

// Parses the command line and runs one subcommand; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct IngestResult {
  std::vector<corpus::QuestionRecord> questions;
  corpus::MergeReport report;
};
IngestResult ingest(const std::filesystem::path& transcripts, const std::filesystem::path& matches,
                    const corpus::TextResources& text);

lm::KneserNeyModel train_from_commentary(const std::filesystem::path& commentary,
                                         const std::optional<std::filesystem::path>& genders,
                                         bool balance, std::uint64_t seed,
                                         double fallback_discount,
                                         const corpus::TextResources& text);

// Runs every stage into config.out_dir and writes run_manifest.json. A stage
// failure writes error.json (stage, kind, message) and marks the manifest
// failed; the return value is the exit code.
int run_pipeline(PipelineConfig config, std::ostream& err);

}  // namespace courtside::cli
