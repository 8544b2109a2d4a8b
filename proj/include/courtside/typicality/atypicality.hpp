#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "courtside/corpus/records.hpp"

namespace courtside::typicality {

enum class Label { typical, atypical };
std::string_view to_string(Label label);

// Stems that count towards IDF: words that are neither stop words nor entity
// masks nor punctuation, deduplicated.
std::vector<std::string> scorable_stems(const std::vector<corpus::Token>& tokens);

// IDF over questions-as-documents. Only questions with at least one scorable
// stem are documents, so adding a stop-word-only question changes nothing.
class AtypicalityModel {
 public:
  // Document frequency assumed for a stem never seen at fit time.
  static constexpr double kUnseenDocumentFrequency = 1.0;

  AtypicalityModel() = default;

  // idf(stem) = ln(|D| / df(stem)); the cutoff is the mean score over the
  // fitted questions that have one.
  static AtypicalityModel fit(const std::vector<std::vector<corpus::Token>>& questions,
                              double unseen_document_frequency = kUnseenDocumentFrequency);

  double idf(const std::string& stem) const;
  const std::map<std::string, double>& idf_table() const { return idf_; }
  std::size_t document_count() const { return documents_; }
  double mean_cutoff() const { return mean_cutoff_; }

  // Mean idf over the unique scorable stems; nullopt when there are none.
  std::optional<double> score(const std::vector<corpus::Token>& tokens) const;
  // Strictly above the cutoff is atypical; unscored questions are typical.
  Label classify(const std::optional<double>& score) const;
  Label classify(const std::vector<corpus::Token>& tokens) const { return classify(score(tokens)); }

 private:
  std::map<std::string, double> idf_;
  std::size_t documents_ = 0;
  double mean_cutoff_ = 0.0;
  double unseen_idf_ = 0.0;
};

}  // namespace courtside::typicality
