#pragma once

// Random word sources shared by the verification sweeps.

#include <cstdint>
#include <random>

#include "apw/words.hpp"

namespace apw {

using Rng = std::mt19937_64;

// Uniform letter of B^{±1}.
Letter random_letter(std::uint32_t rank, Rng& rng);

// Non-backtracking walk: first letter uniform over 2*rank, each next letter
// uniform over the 2*rank-1 letters that do not cancel it. Uniform over
// reduced words of the given length.
Word random_reduced_word(std::uint32_t rank, std::size_t length, Rng& rng);

// u x x^{-1} v with u, x, v random reduced words and total length exactly
// `length`. Never reduced once length >= 2; shorter lengths fall back to a
// reduced word.
Word random_unreduced_word(std::uint32_t rank, std::size_t length, Rng& rng);

// Length uniform in 0..max_len; reduced or unreduced with probability 1/2.
Word random_mixed_word(std::uint32_t rank, std::size_t max_len, Rng& rng);

}  // namespace apw
