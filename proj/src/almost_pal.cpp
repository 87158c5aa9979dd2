#include "apw/almost_pal.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "apw/errors.hpp"
#include "apw/sampling.hpp"

namespace apw {

void ApConfig::validate() const {
  if (rank == 0) throw std::invalid_argument("rank must be at least 1");
}

bool is_palindrome(const Word& w) {
  const auto n = w.length();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (w[i] != w[n - 1 - i]) return false;
  }
  return true;
}

std::size_t min_changes_to_palindrome(const Word& w) {
  // Mismatches come in mirror pairs, one change fixes a pair.
  return hamming(w, reverse(w)) / 2;
}

bool is_m_almost_palindrome(const Word& w, std::uint32_t m) {
  return hamming(w, reverse(w)) <= 2 * std::size_t{m};
}

ApEnumerator::ApEnumerator(const ApConfig& cfg, std::uint32_t length)
    : alphabet_(2 * cfg.rank), m_(cfg.m), codes_(length, 0) {
  cfg.validate();
  if (length > cfg.max_len) {
    throw std::invalid_argument("length " + std::to_string(length) + " exceeds max_len " +
                                std::to_string(cfg.max_len));
  }
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < length; ++i) {
    if (__builtin_mul_overflow(total, std::uint64_t{alphabet_}, &total) ||
        total > cfg.enumeration_cap) {
      throw CapExceeded("enumerating " + std::to_string(2 * cfg.rank) + "^" +
                        std::to_string(length) + " words exceeds cap " +
                        std::to_string(cfg.enumeration_cap));
    }
  }
}

bool ApEnumerator::advance() {
  if (!started_) {
    started_ = true;
    return true;
  }
  for (std::size_t i = codes_.size(); i-- > 0;) {
    if (++codes_[i] < alphabet_) return true;
    codes_[i] = 0;
  }
  return false;
}

std::optional<Word> ApEnumerator::next() {
  if (done_) return std::nullopt;
  const auto n = codes_.size();
  while (advance()) {
    std::size_t mismatched_pairs = 0;
    for (std::size_t i = 0; i < n / 2 && mismatched_pairs <= m_; ++i) {
      if (codes_[i] != codes_[n - 1 - i]) ++mismatched_pairs;
    }
    if (mismatched_pairs > m_) continue;
    std::vector<Letter> letters;
    letters.reserve(n);
    for (auto c : codes_) letters.push_back(Letter::from_code(c));
    return Word(std::move(letters));
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Word> enumerate_aps(const ApConfig& cfg, std::uint32_t length) {
  ApEnumerator it(cfg, length);
  std::vector<Word> out;
  while (auto w = it.next()) out.push_back(std::move(*w));
  return out;
}

Word random_ap(const ApConfig& cfg, std::uint32_t length, std::uint64_t seed) {
  cfg.validate();
  Rng rng(seed);
  std::vector<Letter> letters(length);
  for (std::uint32_t i = 0; i < (length + 1) / 2; ++i) {
    letters[i] = random_letter(cfg.rank, rng);
    letters[length - 1 - i] = letters[i];
  }

  const auto changes = std::min<std::uint32_t>(
      std::uniform_int_distribution<std::uint32_t>(0, cfg.m)(rng), length);
  std::vector<std::uint32_t> positions(length);
  std::iota(positions.begin(), positions.end(), 0u);
  const std::uint32_t alphabet = 2 * cfg.rank;
  for (std::uint32_t i = 0; i < changes; ++i) {
    const auto j = std::uniform_int_distribution<std::uint32_t>(i, length - 1)(rng);
    std::swap(positions[i], positions[j]);
    auto& x = letters[positions[i]];
    auto code = std::uniform_int_distribution<std::uint32_t>(0, alphabet - 2)(rng);
    if (code >= x.code()) ++code;
    x = Letter::from_code(code);
  }
  return Word(std::move(letters));
}

}  // namespace apw
