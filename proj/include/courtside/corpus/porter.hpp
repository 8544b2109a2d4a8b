#pragma once

#include <string>
#include <string_view>

namespace courtside::corpus {

// Porter (1980) suffix-stripping stemmer, original rule set without the later
// "logi"/"bli" departures of the reference C release. Expects lowercase input.
std::string porter_stem(std::string_view word);

}  // namespace courtside::corpus
