#include "apw/delta.hpp"

#include <string>

#include "apw/almost_pal.hpp"
#include "apw/detail/chunked.hpp"
#include "apw/sampling.hpp"

namespace apw {

namespace {

std::int64_t magnitude(Exponent k) { return k < 0 ? -k : k; }

std::string describe(std::span<const Word> factors, std::int64_t value) {
  std::string out = "[";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " | ";
    out += format(factors[i]);
  }
  return out + "] value=" + std::to_string(value);
}

void record(ExperimentReport& r, std::span<const Word> factors, std::int64_t value) {
  r.observe(value);
  if (value > r.bound) {
    ++r.violations;
    if (!r.first_violation) r.first_violation = describe(factors, value);
  }
}

}  // namespace

std::int64_t delta_reduced(const ReducedWord& w) {
  const auto s = w.syllables();
  std::int64_t total = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    total += sign(magnitude(s[i].exponent) - magnitude(s[i - 1].exponent));
  }
  return total;
}

std::int64_t delta(const Word& w) { return delta_reduced(reduce(w)); }

DefectSample defect(std::span<const Word> factors) {
  DefectSample out;
  out.factors.assign(factors.begin(), factors.end());
  out.delta_product = delta(concat(factors));
  for (const auto& f : factors) out.delta_sum += delta(f);
  const auto diff = out.delta_product - out.delta_sum;
  out.defect = static_cast<std::uint64_t>(diff < 0 ? -diff : diff);
  out.bound = static_cast<std::uint64_t>(lemma_bound(static_cast<std::int64_t>(factors.size())));
  return out;
}

ExperimentReport check_lemma(std::uint32_t rank, std::uint32_t tuple_size, std::uint32_t max_len,
                             std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  ExperimentReport base;
  base.experiment = "check_lemma";
  base.parameters = {{"rank", rank}, {"n", tuple_size}, {"max_len", max_len}};
  base.bound = lemma_bound(tuple_size);
  return detail::run_chunked(base, trials, seed, threads,
                             [&](std::uint64_t count, Rng& rng, ExperimentReport& r) {
    r.bound = base.bound;
    std::vector<Word> factors(tuple_size);
    for (std::uint64_t t = 0; t < count; ++t) {
      for (auto& f : factors) f = random_mixed_word(rank, max_len, rng);
      const auto s = defect(factors);
      record(r, factors, static_cast<std::int64_t>(s.defect));
    }
  });
}

ExperimentReport check_prop_single(std::uint32_t m, std::uint32_t rank, std::uint32_t max_len,
                                   SweepMode mode, std::uint64_t trials, std::uint64_t seed,
                                   unsigned threads) {
  ExperimentReport base;
  base.experiment = "check_prop_single";
  base.parameters = {{"m", m},
                     {"rank", rank},
                     {"max_len", max_len},
                     {"exhaustive", mode == SweepMode::exhaustive ? 1 : 0}};
  base.bound = single_ap_bound(m);
  const ApConfig cfg{.rank = rank, .m = m, .max_len = max_len};
  cfg.validate();

  if (mode == SweepMode::exhaustive) {
    base.seed = seed;
    for (std::uint32_t len = 0; len <= max_len; ++len) {
      ApEnumerator it(cfg, len);
      while (auto w = it.next()) record(base, std::span(&*w, 1), delta(*w));
    }
    return base;
  }

  return detail::run_chunked(base, trials, seed, threads,
                             [&](std::uint64_t count, Rng& rng, ExperimentReport& r) {
    r.bound = base.bound;
    std::uniform_int_distribution<std::uint32_t> length(0, max_len);
    for (std::uint64_t t = 0; t < count; ++t) {
      const auto len = length(rng);
      const Word w = random_ap(cfg, len, rng());
      record(r, std::span(&w, 1), delta(w));
    }
  });
}

ExperimentReport check_prop_product(std::uint32_t m, std::uint32_t c, std::uint32_t rank,
                                    std::uint32_t len_per_factor, std::uint64_t trials,
                                    std::uint64_t seed, unsigned threads) {
  ExperimentReport base;
  base.experiment = "check_prop_product";
  base.parameters = {{"m", m}, {"c", c}, {"rank", rank}, {"len_per_factor", len_per_factor}};
  base.bound = product_ap_bound(m, c);
  const ApConfig cfg{.rank = rank, .m = m, .max_len = len_per_factor};
  cfg.validate();

  return detail::run_chunked(base, trials, seed, threads,
                             [&](std::uint64_t count, Rng& rng, ExperimentReport& r) {
    r.bound = base.bound;
    std::uniform_int_distribution<std::uint32_t> length(0, len_per_factor);
    std::vector<Word> factors(c);
    for (std::uint64_t t = 0; t < count; ++t) {
      for (auto& f : factors) {
        const auto len = length(rng);
        f = random_ap(cfg, len, rng());
      }
      record(r, factors, delta(concat(factors)));
    }
  });
}

}  // namespace apw
