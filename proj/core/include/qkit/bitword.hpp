#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qkit {

using Bit = std::uint8_t;

/// Finite bit string. Index 0 is the leftmost symbol, which throughout this
/// project is also the most significant bit of the corresponding integer.
using BitWord = std::vector<Bit>;

std::string word_to_string(const BitWord& w);
BitWord word_from_string(std::string_view s);  // accepts only '0' and '1'

std::size_t word_to_index(const BitWord& w);
BitWord word_from_index(std::size_t index, int n_bits);

bool word_all_zero(const BitWord& w);

}  // namespace qkit
