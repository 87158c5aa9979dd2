#include "apw/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "apw/errors.hpp"

namespace apw {

namespace {

constexpr std::size_t kMaxParsedLetters = std::size_t{1} << 24;

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out = 0;
  // INT64_MIN is excluded so that |k| is always representable.
  if (__builtin_add_overflow(a, b, &out) || out == std::numeric_limits<Exponent>::min()) {
    throw OverflowError("exponent overflow");
  }
  return out;
}

char letter_char(Letter x) {
  if (x.generator >= 26) {
    throw std::invalid_argument("generator index " + std::to_string(x.generator) +
                                " has no letter symbol");
  }
  return static_cast<char>((x.sign > 0 ? 'a' : 'A') + x.generator);
}

}  // namespace

// Right end of a reduced word under construction. Pushing a syllable merges
// with the top when generators agree and pops when the exponent hits zero.
class SyllableStack {
 public:
  void push(Generator g, Exponent k) {
    if (k == 0) return;
    auto& s = out_.syllables_;
    if (!s.empty() && s.back().generator == g) {
      s.back().exponent = checked_add(s.back().exponent, k);
      if (s.back().exponent == 0) s.pop_back();
    } else {
      s.push_back({g, k});
    }
  }
  ReducedWord take() && { return std::move(out_); }
  void reserve(std::size_t n) { out_.syllables_.reserve(n); }

 private:
  ReducedWord out_;
};

Generator Word::min_rank() const {
  Generator r = 0;
  for (auto x : letters_) r = std::max(r, x.generator + 1);
  return r;
}

ReducedWord ReducedWord::from_syllables(std::vector<Syllable> syllables) {
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    if (syllables[i].exponent == 0) throw std::invalid_argument("syllable with zero exponent");
    if (syllables[i].exponent == std::numeric_limits<Exponent>::min()) {
      throw OverflowError("exponent overflow");
    }
    if (i > 0 && syllables[i - 1].generator == syllables[i].generator) {
      throw std::invalid_argument("adjacent syllables share a generator");
    }
  }
  ReducedWord w;
  w.syllables_ = std::move(syllables);
  return w;
}

std::int64_t ReducedWord::letter_length() const {
  std::int64_t n = 0;
  for (const auto& s : syllables_) {
    if (__builtin_add_overflow(n, s.exponent < 0 ? -s.exponent : s.exponent, &n)) {
      throw OverflowError("letter length overflow");
    }
  }
  return n;
}

Word ReducedWord::expand() const {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(letter_length()));
  for (const auto& s : syllables_) {
    const Letter x{s.generator, static_cast<std::int8_t>(s.exponent > 0 ? 1 : -1)};
    const Exponent n = s.exponent > 0 ? s.exponent : -s.exponent;
    out.insert(out.end(), static_cast<std::size_t>(n), x);
  }
  return Word(std::move(out));
}

ReducedWord ReducedWord::inverse() const {
  ReducedWord w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    w.syllables_.push_back({it->generator, -it->exponent});
  }
  return w;
}

ReducedWord ReducedWord::reversed() const {
  ReducedWord w;
  w.syllables_.assign(syllables_.rbegin(), syllables_.rend());
  return w;
}

bool canonical_less(const ReducedWord& a, const ReducedWord& b) {
  const auto la = a.letter_length();
  const auto lb = b.letter_length();
  if (la != lb) return la < lb;
  // Walk both syllable sequences letter-block by letter-block.
  auto sa = a.syllables();
  auto sb = b.syllables();
  std::size_t i = 0;
  std::size_t j = 0;
  Exponent used_a = 0;
  Exponent used_b = 0;
  while (i < sa.size() && j < sb.size()) {
    const Letter xa{sa[i].generator, static_cast<std::int8_t>(sa[i].exponent > 0 ? 1 : -1)};
    const Letter xb{sb[j].generator, static_cast<std::int8_t>(sb[j].exponent > 0 ? 1 : -1)};
    if (xa != xb) return xa < xb;
    const Exponent ra = (sa[i].exponent > 0 ? sa[i].exponent : -sa[i].exponent) - used_a;
    const Exponent rb = (sb[j].exponent > 0 ? sb[j].exponent : -sb[j].exponent) - used_b;
    const Exponent step = std::min(ra, rb);
    used_a += step;
    used_b += step;
    if (ra == step) {
      ++i;
      used_a = 0;
    }
    if (rb == step) {
      ++j;
      used_b = 0;
    }
  }
  return false;
}

ReducedWord reduce(const Word& w) {
  SyllableStack stack;
  for (auto x : w.letters()) stack.push(x.generator, x.sign);
  return std::move(stack).take();
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.length() + v.length());
  out.insert(out.end(), u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(out));
}

Word concat(std::span<const Word> words) {
  std::size_t n = 0;
  for (const auto& w : words) n += w.length();
  std::vector<Letter> out;
  out.reserve(n);
  for (const auto& w : words) out.insert(out.end(), w.letters().begin(), w.letters().end());
  return Word(std::move(out));
}

ReducedWord group_mul(const ReducedWord& u, const ReducedWord& v) {
  SyllableStack stack;
  stack.reserve(u.syllable_count() + v.syllable_count());
  for (const auto& s : u.syllables()) stack.push(s.generator, s.exponent);
  for (const auto& s : v.syllables()) stack.push(s.generator, s.exponent);
  return std::move(stack).take();
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word reverse(const Word& w) {
  return Word(std::vector<Letter>(w.letters().rbegin(), w.letters().rend()));
}

std::vector<Syllable> syllables(const ReducedWord& w) {
  return {w.syllables().begin(), w.syllables().end()};
}

std::size_t hamming(const Word& u, const Word& v) {
  if (u.length() != v.length()) {
    throw LengthMismatch("hamming distance of words with " + std::to_string(u.length()) +
                         " and " + std::to_string(v.length()) + " letters");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.length(); ++i) d += u[i] != v[i] ? 1 : 0;
  return d;
}

namespace {

// Calls emit(generator, exponent) once per token.
template <class Emit>
void tokenize(std::string_view text, Emit&& emit) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  std::size_t first = 0;
  while (first < text.size() && is_space(text[first])) ++first;
  std::size_t last = text.size();
  while (last > first && is_space(text[last - 1])) --last;
  const auto body = text.substr(first, last - first);
  if (body == "1") return;
  if (body.empty()) throw ParseError("empty word text; write 1 for the empty word");

  std::size_t i = 0;
  while (i < body.size()) {
    const char c = body[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      const auto g = static_cast<Generator>(c - 'a');
      ++i;
      if (i < body.size() && body[i] == '^') {
        ++i;
        std::size_t j = i;
        if (j < body.size() && (body[j] == '-' || body[j] == '+')) ++j;
        const std::size_t digits = j;
        while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
        if (j == digits) {
          throw ParseError("expected integer exponent at offset " + std::to_string(first + i));
        }
        Exponent k = 0;
        const char* begin = body.data() + i + (body[i] == '+' ? 1 : 0);
        const auto [ptr, ec] = std::from_chars(begin, body.data() + j, k);
        if (ec == std::errc::result_out_of_range || k == std::numeric_limits<Exponent>::min()) {
          throw ParseError("exponent overflow at offset " + std::to_string(first + i));
        }
        if (ec != std::errc() || ptr != body.data() + j) {
          throw ParseError("malformed exponent at offset " + std::to_string(first + i));
        }
        emit(g, k);
        i = j;
      } else {
        emit(g, Exponent{1});
      }
    } else if (c >= 'A' && c <= 'Z') {
      ++i;
      if (i < body.size() && body[i] == '^') {
        throw ParseError("exponent on uppercase generator at offset " + std::to_string(first + i) +
                         "; use the lowercase letter with a negative exponent");
      }
      emit(static_cast<Generator>(c - 'A'), Exponent{-1});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' at offset " +
                       std::to_string(first + i));
    }
  }
}

}  // namespace

Word parse_word(std::string_view text) {
  std::vector<Letter> out;
  tokenize(text, [&](Generator g, Exponent k) {
    const auto n = static_cast<std::uint64_t>(k < 0 ? -k : k);
    if (n > kMaxParsedLetters || out.size() + n > kMaxParsedLetters) {
      throw ParseError("word expands to more than " + std::to_string(kMaxParsedLetters) +
                       " letters");
    }
    out.insert(out.end(), static_cast<std::size_t>(n),
               Letter{g, static_cast<std::int8_t>(k < 0 ? -1 : 1)});
  });
  return Word(std::move(out));
}

ReducedWord parse_reduced(std::string_view text) {
  SyllableStack stack;
  tokenize(text, [&](Generator g, Exponent k) { stack.push(g, k); });
  return std::move(stack).take();
}

std::string format(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.length()) {
    std::size_t j = i;
    while (j < w.length() && w[j] == w[i]) ++j;
    if (!out.empty()) out += ' ';
    out += letter_char(Letter::pos(w[i].generator));
    out += '^';
    if (w[i].sign < 0) out += '-';
    out += std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string format(const ReducedWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += letter_char(Letter::pos(s.generator));
    out += '^';
    out += std::to_string(s.exponent);
  }
  return out;
}

}  // namespace apw
