#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "apw/words.hpp"

namespace apw {

struct ApConfig {
  std::uint32_t rank = 2;
  std::uint32_t m = 0;
  std::uint32_t max_len = 0;
  // Enumeration refuses lengths where (2*rank)^len exceeds this.
  std::uint64_t enumeration_cap = std::uint64_t{1} << 26;

  void validate() const;
};

bool is_palindrome(const Word& w);

// hamming(w, reverse(w)) / 2: the fewest letter changes that turn w into a
// palindrome of the same length.
std::size_t min_changes_to_palindrome(const Word& w);

bool is_m_almost_palindrome(const Word& w, std::uint32_t m);

// Deterministic stream of every m-almost-palindrome with exactly `length`
// letters over `rank` generators, each once, in lexicographic letter order
// (a < A < b < B < ...).
class ApEnumerator {
 public:
  // Throws std::invalid_argument if length > cfg.max_len and CapExceeded if
  // (2*rank)^length > cfg.enumeration_cap.
  ApEnumerator(const ApConfig& cfg, std::uint32_t length);

  std::optional<Word> next();

 private:
  bool advance();

  std::uint32_t alphabet_;
  std::uint32_t m_;
  std::vector<std::uint32_t> codes_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Word> enumerate_aps(const ApConfig& cfg, std::uint32_t length);

// Uniform palindrome of the given length followed by j distinct position
// changes, j uniform in 0..m. Deterministic for a fixed seed.
Word random_ap(const ApConfig& cfg, std::uint32_t length, std::uint64_t seed);

}  // namespace apw
