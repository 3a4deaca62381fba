#include "qkit/bitword.hpp"

#include <algorithm>
#include <stdexcept>

namespace qkit {

std::string word_to_string(const BitWord& w) {
  std::string s;
  s.reserve(w.size());
  for (Bit b : w) s.push_back(b ? '1' : '0');
  return s;
}

BitWord word_from_string(std::string_view s) {
  BitWord w;
  w.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("word_from_string: expected only 0 and 1");
    }
    w.push_back(static_cast<Bit>(c - '0'));
  }
  return w;
}

std::size_t word_to_index(const BitWord& w) {
  std::size_t idx = 0;
  for (Bit b : w) idx = (idx << 1) | (b & 1);
  return idx;
}

BitWord word_from_index(std::size_t index, int n_bits) {
  BitWord w(static_cast<std::size_t>(n_bits));
  for (int k = 0; k < n_bits; ++k) {
    w[k] = static_cast<Bit>((index >> (n_bits - 1 - k)) & 1);
  }
  return w;
}

bool word_all_zero(const BitWord& w) {
  return std::all_of(w.begin(), w.end(), [](Bit b) { return b == 0; });
}

}  // namespace qkit
