#pragma once

// Free monoid W_B and free group F_B over a finite basis of dense generator
// indices 0..rank-1.
//
// Word is an arbitrary letter sequence. ReducedWord is the canonical
// representative of a free group element and is stored run-length encoded as
// a sequence of syllables t^k (k != 0, adjacent generators distinct). The two
// types are never compared with each other implicitly; go through reduce()
// or ReducedWord::expand().

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace apw {

using Generator = std::uint32_t;
using Exponent = std::int64_t;

struct Letter {
  Generator generator = 0;
  std::int8_t sign = 1;  // +1 or -1

  static Letter pos(Generator g) { return {g, 1}; }
  static Letter neg(Generator g) { return {g, -1}; }

  Letter inverse() const { return {generator, static_cast<std::int8_t>(-sign)}; }

  // Dense code 2*g + (sign < 0). Orders letters a < A < b < B < ...
  std::uint32_t code() const { return 2 * generator + (sign < 0 ? 1u : 0u); }
  static Letter from_code(std::uint32_t code) {
    return {code / 2, static_cast<std::int8_t>(code % 2 == 0 ? 1 : -1)};
  }

  friend bool operator==(Letter, Letter) = default;
  friend std::strong_ordering operator<=>(Letter a, Letter b) { return a.code() <=> b.code(); }
};

inline bool cancels(Letter a, Letter b) { return a.generator == b.generator && a.sign != b.sign; }

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  // Largest generator index used plus one; 0 for the empty word.
  Generator min_rank() const;

  friend bool operator==(const Word&, const Word&) = default;
  // Lexicographic in letter order; not shortlex.
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

struct Syllable {
  Generator generator = 0;
  Exponent exponent = 1;  // never 0

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class ReducedWord {
 public:
  ReducedWord() = default;

  // Validates the syllable invariants; throws std::invalid_argument.
  static ReducedWord from_syllables(std::vector<Syllable> syllables);

  std::span<const Syllable> syllables() const { return syllables_; }
  std::size_t syllable_count() const { return syllables_.size(); }
  bool empty() const { return syllables_.empty(); }

  // Sum of |k_i|, checked.
  std::int64_t letter_length() const;
  Word expand() const;

  ReducedWord inverse() const;
  // Reduced words are closed under reversal; this is rev on the letters.
  ReducedWord reversed() const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  friend class SyllableStack;
  std::vector<Syllable> syllables_;
};

// Canonical order on group elements: shortlex over the letter order
// a < A < b < B < ...
bool canonical_less(const ReducedWord& a, const ReducedWord& b);

ReducedWord reduce(const Word& w);
Word concat(const Word& u, const Word& v);
Word concat(std::span<const Word> words);
ReducedWord group_mul(const ReducedWord& u, const ReducedWord& v);
Word invert(const Word& w);
Word reverse(const Word& w);
std::vector<Syllable> syllables(const ReducedWord& w);

// Throws LengthMismatch when the letter counts differ.
std::size_t hamming(const Word& u, const Word& v);

// Text grammar: tokens [a-z] or [A-Z], lowercase optionally followed by
// ^<signed int>; whitespace between tokens; "1" alone is the empty word.
Word parse_word(std::string_view text);
// Same grammar, reduced on the fly without materializing letters.
ReducedWord parse_reduced(std::string_view text);

// Runs of identical letters as g^k tokens joined by one space, "1" for the
// empty word. For a reduced word this is its syllable form.
std::string format(const Word& w);
std::string format(const ReducedWord& w);

}  // namespace apw
