#include "apw/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <tuple>

#include <CLI11.hpp>

#include "apw/almost_pal.hpp"
#include "apw/delta.hpp"
#include "apw/errors.hpp"
#include "apw/oracle.hpp"

namespace apw::cli {

namespace {

enum class Format { plain, csv, json };

struct RunConfig {
  std::vector<std::string> words;
  std::uint32_t rank = 2;
  std::uint32_t m = 0;
  std::optional<std::uint32_t> n;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> max_len;
  WidthBudget budget;
  Format format = Format::plain;
  std::string out_path;
  unsigned threads = 0;

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("APW_SEED")) {
      std::uint64_t value = 0;
      const std::string_view text(env);
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw CLI::ValidationError("APW_SEED", "must be a nonnegative integer");
      }
      return value;
    }
    return 0;
  }

  std::uint32_t require_n(const char* what) const {
    if (!n) throw CLI::RequiredError(std::string("--n (") + what + ")");
    return *n;
  }
};

struct Emitted {
  std::string text;
  int status = kOk;
  std::string diagnostic = {};
};

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::vector<Word> parse_words(const RunConfig& cfg) {
  std::vector<Word> out;
  for (const auto& w : cfg.words) out.push_back(parse_word(w));
  return out;
}

Word single_word(const RunConfig& cfg) {
  if (cfg.words.size() != 1) {
    throw CLI::ValidationError("word", "expected exactly one word argument");
  }
  return parse_word(cfg.words.front());
}

void require_rank_covers(const RunConfig& cfg, const Word& w) {
  if (w.min_rank() > cfg.rank) {
    throw CLI::ValidationError("--rank", "word uses a generator outside rank " +
                                             std::to_string(cfg.rank));
  }
}

Emitted emit_report(const RunConfig& cfg, const ExperimentReport& r) {
  Emitted e;
  e.status = r.violations > 0 ? kViolation : kOk;
  if (r.first_violation) e.diagnostic = "first violation: " + *r.first_violation;
  switch (cfg.format) {
    case Format::plain:
      e.text = (r.observed_max ? std::to_string(*r.observed_max) : std::string("none")) + "\n";
      break;
    case Format::csv:
      e.text = ExperimentReport::csv_header() + "\n" + r.csv_row() + "\n";
      break;
    case Format::json:
      e.text = dump(r.to_json());
      break;
  }
  return e;
}

Emitted cmd_reduce(const RunConfig& cfg) {
  const auto w = single_word(cfg);
  const auto r = reduce(w);
  switch (cfg.format) {
    case Format::plain:
      return {format(r) + "\n"};
    case Format::csv:
      return {"input,reduced\n" + format(w) + "," + format(r) + "\n"};
    case Format::json:
      return {dump({{"input", format(w)}, {"reduced", format(r)}})};
  }
  return {};
}

Emitted cmd_delta(const RunConfig& cfg) {
  const auto w = single_word(cfg);
  const auto d = delta(w);
  switch (cfg.format) {
    case Format::plain:
      return {std::to_string(d) + "\n"};
    case Format::csv:
      return {"input,delta\n" + format(w) + "," + std::to_string(d) + "\n"};
    case Format::json:
      return {dump({{"input", format(w)}, {"delta", d}})};
  }
  return {};
}

Emitted cmd_syllables(const RunConfig& cfg) {
  const auto r = reduce(single_word(cfg));
  std::string plain;
  std::string csv = "generator,exponent\n";
  auto json = nlohmann::ordered_json::array();
  for (const auto& s : r.syllables()) {
    const std::string g(1, static_cast<char>('a' + s.generator));
    plain += g + " " + std::to_string(s.exponent) + "\n";
    csv += g + "," + std::to_string(s.exponent) + "\n";
    json.push_back({{"generator", g}, {"exponent", s.exponent}});
  }
  switch (cfg.format) {
    case Format::plain:
      return {plain};
    case Format::csv:
      return {csv};
    case Format::json:
      return {dump(json)};
  }
  return {};
}

Emitted cmd_appal_check(const RunConfig& cfg) {
  const auto w = single_word(cfg);
  const bool member = is_m_almost_palindrome(w, cfg.m);
  const auto changes = min_changes_to_palindrome(w);
  switch (cfg.format) {
    case Format::plain:
      return {std::string(member ? "true" : "false") + "\n"};
    case Format::csv:
      return {"input,m,min_changes,member\n" + format(w) + "," + std::to_string(cfg.m) + "," +
              std::to_string(changes) + "," + (member ? "true" : "false") + "\n"};
    case Format::json:
      return {dump({{"input", format(w)},
                    {"m", cfg.m},
                    {"min_changes", changes},
                    {"member", member}})};
  }
  return {};
}

Emitted cmd_witness(const RunConfig& cfg) {
  const auto n = cfg.require_n("witness index");
  const auto w = witness(n);
  switch (cfg.format) {
    case Format::plain:
      return {format(w) + "\n"};
    case Format::csv:
      return {"n,witness,letters,delta\n" + std::to_string(n) + "," + format(w) + "," +
              std::to_string(w.letter_length()) + "," + std::to_string(witness_delta(n)) + "\n"};
    case Format::json:
      return {dump({{"n", n},
                    {"witness", format(w)},
                    {"letters", w.letter_length()},
                    {"delta", witness_delta(n)}})};
  }
  return {};
}

Emitted cmd_defect(const RunConfig& cfg) {
  const auto factors = parse_words(cfg);
  const auto s = defect(factors);
  Emitted e;
  e.status = s.defect > s.bound ? kViolation : kOk;
  switch (cfg.format) {
    case Format::plain:
      e.text = std::to_string(s.defect) + "\n";
      break;
    case Format::csv:
      e.text = "factors,delta_product,delta_sum,defect,bound\n" + std::to_string(factors.size()) +
               "," + std::to_string(s.delta_product) + "," + std::to_string(s.delta_sum) + "," +
               std::to_string(s.defect) + "," + std::to_string(s.bound) + "\n";
      break;
    case Format::json: {
      auto names = nlohmann::ordered_json::array();
      for (const auto& f : factors) names.push_back(format(f));
      e.text = dump({{"factors", names},
                     {"delta_product", s.delta_product},
                     {"delta_sum", s.delta_sum},
                     {"defect", s.defect},
                     {"bound", s.bound}});
      break;
    }
  }
  return e;
}

Emitted cmd_check_lemma(const RunConfig& cfg) {
  const auto r = check_lemma(cfg.rank, cfg.require_n("tuple size"), cfg.max_len.value_or(50),
                             cfg.trials.value_or(100'000), cfg.resolved_seed(), cfg.threads);
  return emit_report(cfg, r);
}

Emitted cmd_check_prop1(const RunConfig& cfg) {
  const bool random = cfg.trials.has_value();
  const auto r = check_prop_single(cfg.m, cfg.rank, cfg.max_len.value_or(10),
                                   random ? SweepMode::random : SweepMode::exhaustive,
                                   cfg.trials.value_or(0), cfg.resolved_seed(), cfg.threads);
  return emit_report(cfg, r);
}

Emitted cmd_check_prop2(const RunConfig& cfg) {
  const auto r = check_prop_product(cfg.m, cfg.require_n("factor count c"), cfg.rank,
                                    cfg.max_len.value_or(10), cfg.trials.value_or(10'000),
                                    cfg.resolved_seed(), cfg.threads);
  return emit_report(cfg, r);
}

Emitted cmd_width(const RunConfig& cfg) {
  const auto w = single_word(cfg);
  require_rank_covers(cfg, w);
  const auto a = ap_length_upper(w, cfg.m, cfg.budget, std::max<std::uint32_t>(cfg.rank, 1));
  switch (cfg.format) {
    case Format::plain:
      return {(a.found ? std::to_string(a.c) : a.status()) + "\n"};
    case Format::csv: {
      std::string cert;
      for (const auto& f : a.certificate) cert += (cert.empty() ? "" : ";") + format(f);
      return {"query,m,status,c,lower_bound,certificate\n" + format(a.query) + "," +
              std::to_string(a.m) + "," + a.status() + "," +
              (a.found ? std::to_string(a.c) : std::string()) + "," +
              std::to_string(a.lower_bound) + "," + cert + "\n"};
    }
    case Format::json:
      return {dump(a.to_json())};
  }
  return {};
}

Emitted cmd_lower_bound(const RunConfig& cfg) {
  ReducedWord g;
  if (!cfg.words.empty()) {
    g = reduce(single_word(cfg));
  } else {
    g = witness(cfg.require_n("witness index, or give a word"));
  }
  const auto lb = lower_bound_c(g, cfg.m);
  const auto d = delta_reduced(g);
  switch (cfg.format) {
    case Format::plain:
      return {std::to_string(lb) + "\n"};
    case Format::csv:
      return {"m,delta,lower_bound_c\n" + std::to_string(cfg.m) + "," + std::to_string(d) + "," +
              std::to_string(lb) + "\n"};
    case Format::json:
      return {dump({{"query", format(g)}, {"m", cfg.m}, {"delta", d}, {"lower_bound_c", lb}})};
  }
  return {};
}

Emitted cmd_theorem_table(const RunConfig& cfg) {
  const auto table = theorem_table(cfg.m, cfg.require_n("n_max"), cfg.budget);
  if (cfg.format == Format::json) return {dump(table.to_json())};
  return {table.to_csv()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Almost-palindrome word tools for free groups", "apw");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  const auto nonneg = CLI::NonNegativeNumber;
  app.add_option("--rank", cfg.rank, "number of free generators")->check(CLI::Range(1u, 26u));
  app.add_option("--m", cfg.m, "allowed letter changes")->check(nonneg);
  app.add_option("--n", cfg.n, "witness index, tuple size, factor count or table size")
      ->check(nonneg);
  app.add_option("--trials", cfg.trials, "random samples")->check(nonneg);
  app.add_option("--seed", cfg.seed, "base seed (default: $APW_SEED or 0)")->check(nonneg);
  app.add_option("--max-len", cfg.max_len, "word letter budget")->check(nonneg);
  app.add_option("--gen-len", cfg.budget.gen_len, "max letters of a generator")->check(nonneg);
  app.add_option("--max-c", cfg.budget.max_c, "max factors searched")->check(nonneg);
  app.add_option("--ball-cap", cfg.budget.ball_cap, "max stored group elements")->check(nonneg);
  app.add_option("--format", cfg.format, "plain, csv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{
              {"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}},
          CLI::ignore_case));
  app.add_option("--out", cfg.out_path, "write output to a file");
  app.add_option("--threads", cfg.threads, "worker threads (0: all cores)")->check(nonneg);

  using Handler = std::function<Emitted(const RunConfig&)>;
  const std::vector<std::tuple<const char*, const char*, bool, Handler>> commands = {
      {"reduce", "free reduction of a word", true, cmd_reduce},
      {"delta", "Delta of a word", true, cmd_delta},
      {"syllables", "syllables of the reduced word", true, cmd_syllables},
      {"appal-check", "membership in the m-almost-palindromes", true, cmd_appal_check},
      {"witness", "witness word w_n", false, cmd_witness},
      {"defect", "defect of a factor sequence", true, cmd_defect},
      {"check-lemma", "random sweep of the 6n defect bound", false, cmd_check_lemma},
      {"check-prop1", "Delta bound for single almost-palindromes", false, cmd_check_prop1},
      {"check-prop2", "Delta bound for products of almost-palindromes", false, cmd_check_prop2},
      {"width", "budgeted almost-palindromic length of a word", true, cmd_width},
      {"lower-bound", "Delta-based lower bound on the factor count", true, cmd_lower_bound},
      {"theorem-table", "witness table of lower and upper bounds", false, cmd_theorem_table},
  };
  Handler selected;
  for (const auto& [name, help, takes_words, handler] : commands) {
    auto* sub = app.add_subcommand(name, help);
    if (takes_words) sub->add_option("words", cfg.words, "words in the text grammar");
    sub->callback([&selected, h = handler] { selected = h; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Emitted result;
  try {
    result = selected(cfg);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: malformed word: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (result.status == kViolation) err << "bound violation detected\n";
  if (!result.diagnostic.empty()) err << result.diagnostic << "\n";
  if (cfg.out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << "\n";
      return kUsage;
    }
    file << result.text;
  }
  return result.status;
}

}  // namespace apw::cli
