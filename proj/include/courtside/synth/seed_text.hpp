#pragma once

#include <string_view>
#include <vector>

namespace courtside::synth {

// Play-by-play style sentences; the source of the commentary chain.
const std::vector<std::string_view>& court_sentences();
// Sentences about life away from the court.
const std::vector<std::string_view>& off_court_sentences();
// Question openers that precede a generated clause.
const std::vector<std::string_view>& question_openers();
const std::vector<std::string_view>& answer_sentences();

const std::vector<std::string_view>& male_first_names();
const std::vector<std::string_view>& female_first_names();
const std::vector<std::string_view>& last_names();

}  // namespace courtside::synth
