#pragma once

// The counting map Delta on free group elements and checks of its defect
// bounds.
//
// For a reduced word with syllables t_1^{k_1} ... t_n^{k_n}, n >= 2,
//   Delta(w) = sum_{i<n} sign(|k_{i+1}| - |k_i|),
// and Delta(w) = 0 for at most one syllable. An arbitrary word is evaluated
// on its reduction.
//
// Bounds checked here:
//   |Delta(w_1...w_n) - sum Delta(w_i)| <= 6n           (any words)
//   Delta(p) <= 24m + 12                                (p m-almost-palindrome)
//   Delta(p_1...p_c) <= 24mc + 18c                      (each p_i m-almost-palindrome)

#include <cstdint>
#include <span>
#include <vector>

#include "apw/report.hpp"
#include "apw/words.hpp"

namespace apw {

constexpr int sign(std::int64_t x) { return (x > 0) - (x < 0); }

constexpr std::int64_t lemma_bound(std::int64_t n) { return 6 * n; }
constexpr std::int64_t single_ap_bound(std::int64_t m) { return 24 * m + 12; }
constexpr std::int64_t product_ap_bound(std::int64_t m, std::int64_t c) {
  return 24 * m * c + 18 * c;
}

std::int64_t delta_reduced(const ReducedWord& w);
std::int64_t delta(const Word& w);

struct DefectSample {
  std::vector<Word> factors;
  std::int64_t delta_product = 0;
  std::int64_t delta_sum = 0;
  std::uint64_t defect = 0;
  std::uint64_t bound = 0;  // 6 * factors.size()
};

DefectSample defect(std::span<const Word> factors);

enum class SweepMode { exhaustive, random };

// `threads == 0` means hardware concurrency. Results are identical for any
// thread count.
ExperimentReport check_lemma(std::uint32_t rank, std::uint32_t tuple_size, std::uint32_t max_len,
                             std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

// Exhaustive mode visits every m-almost-palindrome of length 0..max_len and
// ignores trials/seed; it throws CapExceeded past the enumeration cap.
ExperimentReport check_prop_single(std::uint32_t m, std::uint32_t rank, std::uint32_t max_len,
                                   SweepMode mode, std::uint64_t trials, std::uint64_t seed,
                                   unsigned threads = 0);

ExperimentReport check_prop_product(std::uint32_t m, std::uint32_t c, std::uint32_t rank,
                                    std::uint32_t len_per_factor, std::uint64_t trials,
                                    std::uint64_t seed, unsigned threads = 0);

}  // namespace apw
