#pragma once

// Witness family w_n = a^1 b^1 a^2 b^2 ... a^n b^n, the Delta-based lower
// bound on the number of m-almost-palindrome factors, and a budgeted exact
// search for short decompositions into m-almost-palindromes.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "apw/words.hpp"

namespace apw {

struct WidthBudget {
  std::uint32_t gen_len = 6;  // letter length of admitted almost-palindromes
  std::uint32_t max_c = 4;    // most factors searched
  std::uint64_t ball_cap = 8'000'000;  // most group elements stored
};

struct WidthAnswer {
  ReducedWord query;
  std::uint32_t m = 0;
  bool found = false;
  std::uint32_t c = 0;
  // m-almost-palindromes (not necessarily reduced) whose reduced product is
  // the query. Lexicographically least among length-c decompositions.
  std::vector<Word> certificate;
  std::uint64_t lower_bound = 0;
  WidthBudget budget;

  std::string status() const { return found ? "found" : "not_found_within_budget"; }
  nlohmann::ordered_json to_json() const;
};

// rank >= 2 is implied: uses generators 0 and 1. Throws on n == 0.
ReducedWord witness(std::uint32_t n);
// Delta(w_n); throws std::logic_error if it is not n - 1.
std::int64_t witness_delta(std::uint32_t n);

// Least c with (24m + 18) c >= Delta(g), and at least 1 for g != 1.
std::uint64_t lower_bound_c(const ReducedWord& g, std::uint32_t m);
std::uint64_t lower_bound_c(const Word& g, std::uint32_t m);

struct ApGenerator {
  ReducedWord element;
  Word representative;  // shortest-then-lexleast m-almost-palindrome reducing to element
};

// Reductions of all m-almost-palindromes of 1..gen_len letters, without the
// identity, closed under inversion, sorted by canonical_less.
std::vector<ApGenerator> ap_generators(std::uint32_t m, std::uint32_t rank, std::uint32_t gen_len,
                                       std::uint64_t enumeration_cap = std::uint64_t{1} << 26);

// Reusable search state: the generator set and a Cayley ball around the
// identity grown lazily up to radius ceil(max_c / 2). Not thread-safe.
class WidthSearch {
 public:
  WidthSearch(std::uint32_t m, std::uint32_t rank, WidthBudget budget);
  ~WidthSearch();
  WidthSearch(WidthSearch&&) noexcept;
  WidthSearch& operator=(WidthSearch&&) noexcept;

  WidthAnswer search(const ReducedWord& g);

  std::size_t generator_count() const;
  std::size_t ball_size() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

WidthAnswer ap_length_upper(const Word& g, std::uint32_t m, const WidthBudget& budget,
                            std::uint32_t rank = 2);

struct TheoremRow {
  std::uint32_t n = 0;
  std::int64_t delta = 0;
  std::uint64_t lower_bound_c = 0;
  std::optional<std::uint32_t> upper_c;
  std::string status;
};

struct TheoremTable {
  std::uint32_t m = 0;
  WidthBudget budget;
  std::vector<TheoremRow> rows;

  static constexpr const char* kCsvHeader = "n,delta,lower_bound_c,upper_c,status";
  std::string to_csv() const;
  nlohmann::ordered_json to_json() const;
};

// Rows n = 1..n_max. The upper column is searched only when w_n has at most
// gen_len * max_c letters; longer witnesses cannot be a product of max_c
// admitted generators and are reported as not_found_within_budget.
TheoremTable theorem_table(std::uint32_t m, std::uint32_t n_max, const WidthBudget& budget);

}  // namespace apw
