#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "courtside/error.hpp"
#include "courtside/lm/kneser_ney.hpp"

namespace courtside::lm {

// Binary layout, little-endian throughout:
//   "CSLM" | u32 version | u32 order (=2) | 6 x f64 discounts
//   | u64 V | V x (u32 length, bytes) | V x f64 P_uni | V x f64 backoff
//   | u64 B | B x (u32 context, u32 word, f64 prob) | u64 FNV-1a of all prior bytes
inline constexpr std::uint32_t kModelFormatVersion = 1;

class ModelFormatError : public DataError {
 public:
  enum class Reason { truncated, bad_magic, version_mismatch, corrupt };
  ModelFormatError(Reason reason, const std::string& what) : DataError(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

std::vector<std::uint8_t> serialize_model(const KneserNeyModel& model);
KneserNeyModel deserialize_model(const std::vector<std::uint8_t>& bytes);

void save_model(const KneserNeyModel& model, const std::filesystem::path& path);
KneserNeyModel load_model(const std::filesystem::path& path);

// ARPA-style text dump for diffing: log10 probabilities, unigrams sorted by
// word with their log10 backoff, bigrams sorted by (context, word).
void write_arpa(const KneserNeyModel& model, std::ostream& out);

}  // namespace courtside::lm
