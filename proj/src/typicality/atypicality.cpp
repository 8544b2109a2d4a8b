#include "courtside/typicality/atypicality.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "courtside/error.hpp"

namespace courtside::typicality {

std::string_view to_string(Label label) {
  return label == Label::typical ? "typical" : "atypical";
}

std::vector<std::string> scorable_stems(const std::vector<corpus::Token>& tokens) {
  std::set<std::string> stems;
  for (const auto& token : tokens) {
    if (token.is_punct || token.is_entity_mask || token.is_stop) continue;
    stems.insert(token.stem);
  }
  return {stems.begin(), stems.end()};
}

AtypicalityModel AtypicalityModel::fit(const std::vector<std::vector<corpus::Token>>& questions,
                                       double unseen_document_frequency) {
  if (questions.empty()) throw DataError("typicality model needs at least one question");
  if (!(unseen_document_frequency > 0.0)) {
    throw ConfigError("unseen document frequency must be positive");
  }
  AtypicalityModel model;
  std::map<std::string, std::size_t> df;
  std::vector<std::vector<std::string>> documents;
  documents.reserve(questions.size());
  for (const auto& tokens : questions) {
    auto stems = scorable_stems(tokens);
    if (stems.empty()) continue;
    for (const auto& stem : stems) ++df[stem];
    documents.push_back(std::move(stems));
  }
  model.documents_ = documents.size();
  if (model.documents_ == 0) {
    model.unseen_idf_ = 0.0;
    return model;
  }
  const double d = static_cast<double>(model.documents_);
  for (const auto& [stem, count] : df) model.idf_[stem] = std::log(d / static_cast<double>(count));
  model.unseen_idf_ = std::log(d / unseen_document_frequency);
  if (model.unseen_idf_ < 0.0) model.unseen_idf_ = 0.0;

  double total = 0.0;
  for (const auto& stems : documents) {
    double sum = 0.0;
    for (const auto& stem : stems) sum += model.idf_.at(stem);
    total += sum / static_cast<double>(stems.size());
  }
  model.mean_cutoff_ = total / d;
  return model;
}

double AtypicalityModel::idf(const std::string& stem) const {
  const auto it = idf_.find(stem);
  return it == idf_.end() ? unseen_idf_ : it->second;
}

std::optional<double> AtypicalityModel::score(const std::vector<corpus::Token>& tokens) const {
  const auto stems = scorable_stems(tokens);
  if (stems.empty()) return std::nullopt;
  double sum = 0.0;
  for (const auto& stem : stems) sum += idf(stem);
  return sum / static_cast<double>(stems.size());
}

Label AtypicalityModel::classify(const std::optional<double>& score) const {
  return score && *score > mean_cutoff_ ? Label::atypical : Label::typical;
}

}  // namespace courtside::typicality
