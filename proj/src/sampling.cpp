#include "apw/sampling.hpp"

#include <stdexcept>

namespace apw {

namespace {

std::size_t uniform_index(std::size_t n, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace

Letter random_letter(std::uint32_t rank, Rng& rng) {
  if (rank == 0) throw std::invalid_argument("rank must be positive");
  return Letter::from_code(static_cast<std::uint32_t>(uniform_index(2 * std::size_t{rank}, rng)));
}

Word random_reduced_word(std::uint32_t rank, std::size_t length, Rng& rng) {
  std::vector<Letter> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (out.empty()) {
      out.push_back(random_letter(rank, rng));
      continue;
    }
    // Pick among the 2*rank-1 codes, skipping the inverse of the last letter.
    const auto forbidden = out.back().inverse().code();
    auto code = static_cast<std::uint32_t>(uniform_index(2 * std::size_t{rank} - 1, rng));
    if (code >= forbidden) ++code;
    out.push_back(Letter::from_code(code));
  }
  return Word(std::move(out));
}

Word random_unreduced_word(std::uint32_t rank, std::size_t length, Rng& rng) {
  if (length < 2) return random_reduced_word(rank, length, rng);
  const std::size_t k = 1 + uniform_index(length / 2, rng);
  const std::size_t rest = length - 2 * k;
  const std::size_t a = uniform_index(rest + 1, rng);
  const Word u = random_reduced_word(rank, a, rng);
  const Word x = random_reduced_word(rank, k, rng);
  const Word v = random_reduced_word(rank, rest - a, rng);
  const Word parts[] = {u, x, invert(x), v};
  return concat(parts);
}

Word random_mixed_word(std::uint32_t rank, std::size_t max_len, Rng& rng) {
  const std::size_t length = uniform_index(max_len + 1, rng);
  if (std::bernoulli_distribution(0.5)(rng)) return random_reduced_word(rank, length, rng);
  return random_unreduced_word(rank, length, rng);
}

}  // namespace apw
