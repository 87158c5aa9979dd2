#include <doctest.h>

#include <random>

#include "apw/errors.hpp"
#include "apw/sampling.hpp"
#include "apw/words.hpp"
#include "naive_oracle.hpp"

using namespace apw;

namespace {

Word W(const char* text) { return parse_word(text); }
ReducedWord R(const char* text) { return reduce(parse_word(text)); }

bool has_cancelling_pair(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.length(); ++i) {
    if (cancels(w[i], w[i + 1])) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("letters") {
  const auto a = Letter::pos(0);
  CHECK(a.inverse().inverse() == a);
  CHECK(a.inverse() == Letter::neg(0));
  CHECK(Letter::pos(0) < Letter::neg(0));
  CHECK(Letter::neg(0) < Letter::pos(1));
  CHECK(Letter::from_code(Letter::neg(3).code()) == Letter::neg(3));
}

TEST_CASE("reduce examples") {
  CHECK(reduce(W("aA")).empty());
  CHECK(reduce(W("abBAb")) == R("b"));
  CHECK(reduce(W("aba")).expand() == W("aba"));
}

TEST_CASE("concat examples") {
  CHECK(concat(W("ab"), W("AB")) == W("abAB"));
  CHECK(concat(W("a"), W("1")) == W("a"));
  CHECK(concat(W("a^2"), W("b^2")) == W("aabb"));
  CHECK(concat(W("a^2"), W("b^2")).length() == 4);
}

TEST_CASE("group_mul examples") {
  CHECK(group_mul(R("a"), R("A")).empty());
  CHECK(group_mul(R("ab"), R("BA")).empty());
  const auto p = group_mul(R("ab^2"), R("b a^2"));
  CHECK(syllables(p) == std::vector<Syllable>{{0, 1}, {1, 3}, {0, 2}});
  CHECK(format(p) == "a^1 b^3 a^2");
}

TEST_CASE("invert and reverse examples") {
  CHECK(invert(W("ab")) == W("BA"));
  CHECK(invert(W("1")).empty());
  CHECK(invert(W("a^2B")) == W("bAA"));
  CHECK(reverse(W("ab")) == W("ba"));
  CHECK(reverse(W("abA")) == W("Aba"));
  CHECK(reverse(W("1")).empty());
}

TEST_CASE("syllables examples") {
  CHECK(syllables(R("aaBBB")) == std::vector<Syllable>{{0, 2}, {1, -3}});
  CHECK(syllables(R("a")) == std::vector<Syllable>{{0, 1}});
  CHECK(syllables(R("abaabb")) == std::vector<Syllable>{{0, 1}, {1, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("hamming examples and mismatch") {
  CHECK(hamming(W("ab"), W("ab")) == 0);
  CHECK(hamming(W("ab"), W("ba")) == 2);
  CHECK(hamming(W("abAB"), W("BAba")) == 4);
  CHECK_THROWS_AS(hamming(W("ab"), W("a")), LengthMismatch);
}

TEST_CASE("reduced word invariants are enforced") {
  CHECK_THROWS_AS(ReducedWord::from_syllables({{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(ReducedWord::from_syllables({{0, 1}, {0, 2}}), std::invalid_argument);
  CHECK_NOTHROW(ReducedWord::from_syllables({{0, 1}, {1, -2}, {0, 5}}));
}

TEST_CASE("exponent arithmetic is checked") {
  const auto big = ReducedWord::from_syllables({{0, std::numeric_limits<Exponent>::max()}});
  CHECK_THROWS_AS(group_mul(big, big), OverflowError);
  CHECK(group_mul(big, big.inverse()).empty());
}

TEST_CASE("parse grammar") {
  CHECK(W("a^2 b^-1") == Word({Letter::pos(0), Letter::pos(0), Letter::neg(1)}));
  CHECK(W("aaB") == Word({Letter::pos(0), Letter::pos(0), Letter::neg(1)}));
  CHECK(W("1").empty());
  CHECK(W("  1 ").empty());
  CHECK(W("a^-2") == W("AA"));
  CHECK(W("a^+3") == W("aaa"));
  CHECK(W("a^0 b").length() == 1);
  CHECK(W("z") == Word({Letter::pos(25)}));

  CHECK_THROWS_AS(W("B^2"), ParseError);
  CHECK_THROWS_AS(W("a^"), ParseError);
  CHECK_THROWS_AS(W("a^-"), ParseError);
  CHECK_THROWS_AS(W("a1"), ParseError);
  CHECK_THROWS_AS(W("a ^2"), ParseError);
  CHECK_THROWS_AS(W(""), ParseError);
  CHECK_THROWS_AS(W("a+b"), ParseError);
  CHECK_THROWS_AS(W("a^99999999999999999999"), ParseError);
  CHECK_THROWS_AS(W("a^100000000000"), ParseError);  // expands past the letter cap

  // The reduced parser never materializes letters.
  const auto huge = parse_reduced("a^100000000000 b a^-100000000000");
  CHECK(syllables(huge) == std::vector<Syllable>{{0, 100000000000}, {1, 1}, {0, -100000000000}});
  CHECK(parse_reduced("a b B A").empty());
}

TEST_CASE("format") {
  CHECK(format(W("1")) == "1");
  CHECK(format(R("aA")) == "1");
  CHECK(format(R("aaBBB")) == "a^2 b^-3");
  CHECK(format(W("aAab")) == "a^1 a^-1 a^1 b^1");
  CHECK(format(W("a^2 b^-1")) == "a^2 b^-1");
}

TEST_CASE("canonical order is shortlex") {
  CHECK(canonical_less(R("b"), R("aa")));
  CHECK(canonical_less(R("a"), R("A")));
  CHECK(canonical_less(R("A"), R("b")));
  CHECK(canonical_less(R("aab"), R("aAb") /* = b, shorter */) == false);
  CHECK(canonical_less(R("abb"), R("aBB")));
  CHECK(canonical_less(R("aab"), R("abb")));
  CHECK_FALSE(canonical_less(R("ab"), R("ab")));
}

TEST_CASE("exhaustive invariants, rank 2, length <= 6") {
  for (std::size_t len = 0; len <= 6; ++len) {
    naive::for_each_word(2, len, [](const Word& w) {
      const auto r = reduce(w);
      const auto expanded = r.expand();
      const auto expected = naive::reduce_letters(w);
      CHECK(std::equal(expanded.letters().begin(), expanded.letters().end(), expected.begin(),
                       expected.end()));
      CHECK_FALSE(has_cancelling_pair(r.expand()));
      CHECK(reduce(r.expand()) == r);
      CHECK(reverse(reverse(w)) == w);
      CHECK(reduce(reverse(w)) == r.reversed());
      CHECK(group_mul(r, reduce(invert(w))).empty());
      CHECK(hamming(w, reverse(w)) % 2 == 0);
      CHECK(parse_word(format(w)) == w);
    });
  }
  // Homomorphism and anti-homomorphism on all pairs of length <= 3.
  for (std::size_t lu = 0; lu <= 3; ++lu) {
    naive::for_each_word(2, lu, [&](const Word& u) {
      for (std::size_t lv = 0; lv <= 3; ++lv) {
        naive::for_each_word(2, lv, [&](const Word& v) {
          CHECK(reduce(concat(u, v)) == group_mul(reduce(u), reduce(v)));
          CHECK(reverse(concat(u, v)) == concat(reverse(v), reverse(u)));
        });
      }
    });
  }
}

TEST_CASE("random invariants, 1e5 words of length <= 64") {
  Rng rng(7);
  std::uniform_int_distribution<std::size_t> length(0, 64);
  std::uniform_int_distribution<std::uint32_t> rank_dist(1, 4);
  for (int t = 0; t < 100'000; ++t) {
    const auto rank = rank_dist(rng);
    Word w;
    Word v;
    if (t % 2 == 0) {
      w = random_reduced_word(rank, length(rng), rng);
      v = random_unreduced_word(rank, length(rng), rng);
    } else {
      w = random_unreduced_word(rank, length(rng), rng);
      v = random_reduced_word(rank, length(rng), rng);
    }
    const auto r = reduce(w);
    REQUIRE(reduce(r.expand()) == r);
    const auto expanded = r.expand();
    const auto expected = naive::reduce_letters(w);
    REQUIRE(std::equal(expanded.letters().begin(), expanded.letters().end(), expected.begin(),
                       expected.end()));
    REQUIRE(reduce(concat(w, v)) == group_mul(r, reduce(v)));
    REQUIRE(reverse(concat(w, v)) == concat(reverse(v), reverse(w)));
    REQUIRE(reduce(reverse(w)) == r.reversed());
    REQUIRE(group_mul(r, reduce(invert(w))).empty());
    REQUIRE(hamming(w, reverse(w)) % 2 == 0);
    REQUIRE(parse_word(format(w)) == w);
  }
}

TEST_CASE("random word generators") {
  Rng rng(1);
  for (int t = 0; t < 2000; ++t) {
    const auto w = random_reduced_word(3, 20, rng);
    CHECK(w.length() == 20);
    CHECK_FALSE(has_cancelling_pair(w));
    const auto u = random_unreduced_word(2, 2 + t % 30, rng);
    CHECK(u.length() == static_cast<std::size_t>(2 + t % 30));
    CHECK(has_cancelling_pair(u));
  }
}
