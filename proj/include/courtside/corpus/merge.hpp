#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "courtside/corpus/ingest.hpp"
#include "courtside/corpus/records.hpp"
#include "courtside/error.hpp"

namespace courtside::corpus {

// Lowercase, accents folded, "Last, First" reordered to "first last",
// whitespace collapsed.
std::string canonical_player_name(std::string_view name);

struct MergeReport {
  std::size_t transcripts = 0;
  std::size_t merged = 0;
  std::size_t unmatched_transcripts = 0;
  std::size_t ambiguous = 0;
  std::size_t snippets = 0;
  std::size_t questions = 0;
  std::size_t male_players = 0;
  std::size_t female_players = 0;

  nlohmann::json to_json() const;
  static MergeReport from_json(const nlohmann::json& j);
};

// Two or more match rows share a (date, player) key. Carries the offending
// keys and the report that would have been written.
class AmbiguousMatchError : public DataError {
 public:
  AmbiguousMatchError(std::vector<std::string> offenders, MergeReport report);
  const std::vector<std::string>& offenders() const { return offenders_; }
  const MergeReport& report() const { return report_; }

 private:
  std::vector<std::string> offenders_;
  MergeReport report_;
};

struct MergeResult {
  std::vector<Interview> interviews;
  MergeReport report;
};

// Joins transcripts to matches on (date, canonical player name). Transcripts
// without a same-date match are dropped and counted. A player seen on both
// tours is a DataError.
MergeResult merge_transcripts(const std::vector<TranscriptRecord>& transcripts,
                              const std::vector<MatchRecord>& matches,
                              const TextResources& text);

}  // namespace courtside::corpus
