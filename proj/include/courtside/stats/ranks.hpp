#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace courtside::stats {

// Twice the midrank of every value (1-based ranks), so that tied ranks stay
// integral: a tie group spanning sorted positions i..j-1 gets i + 1 + j.
std::vector<std::uint64_t> doubled_midranks(std::span<const double> values);

// Sizes of the tie groups (size >= 2) among `values`.
std::vector<std::size_t> tie_group_sizes(std::span<const double> values);

}  // namespace courtside::stats
