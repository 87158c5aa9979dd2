#include "apw/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "apw/almost_pal.hpp"
#include "apw/delta.hpp"
#include "apw/errors.hpp"

namespace apw {

namespace {

// Reduced words as byte strings of letter codes; short ones stay in SSO.
using Packed = std::string;

Packed pack(const ReducedWord& w) {
  Packed out;
  out.reserve(static_cast<std::size_t>(w.letter_length()));
  for (const auto& s : w.syllables()) {
    const auto code = Letter{s.generator, static_cast<std::int8_t>(s.exponent > 0 ? 1 : -1)}.code();
    if (code > std::numeric_limits<unsigned char>::max()) {
      throw std::invalid_argument("generator index too large for the search");
    }
    out.append(static_cast<std::size_t>(s.exponent > 0 ? s.exponent : -s.exponent),
               static_cast<char>(code));
  }
  return out;
}

// Product of two reduced packed words.
Packed multiply(const Packed& u, const Packed& v) {
  std::size_t k = 0;
  const std::size_t limit = std::min(u.size(), v.size());
  while (k < limit && (static_cast<unsigned char>(u[u.size() - 1 - k]) ^ 1u) ==
                          static_cast<unsigned char>(v[k])) {
    ++k;
  }
  Packed out;
  out.reserve(u.size() + v.size() - 2 * k);
  out.append(u, 0, u.size() - k);
  out.append(v, k);
  return out;
}

Packed inverse(const Packed& u) {
  Packed out(u.rbegin(), u.rend());
  for (auto& ch : out) ch = static_cast<char>(static_cast<unsigned char>(ch) ^ 1u);
  return out;
}

}  // namespace

nlohmann::ordered_json WidthAnswer::to_json() const {
  nlohmann::ordered_json j;
  j["query"] = format(query);
  j["m"] = m;
  j["status"] = status();
  j["c"] = found ? nlohmann::ordered_json(c) : nullptr;
  j["lower_bound"] = lower_bound;
  auto& cert = j["certificate"] = nlohmann::ordered_json::array();
  for (const auto& w : certificate) cert.push_back(format(w));
  j["budget"] = {{"gen_len", budget.gen_len}, {"max_c", budget.max_c},
                 {"ball_cap", budget.ball_cap}};
  return j;
}

ReducedWord witness(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("witness index must be positive");
  std::vector<Syllable> s;
  s.reserve(2 * std::size_t{n});
  for (std::uint32_t i = 1; i <= n; ++i) {
    s.push_back({0, i});
    s.push_back({1, i});
  }
  return ReducedWord::from_syllables(std::move(s));
}

std::int64_t witness_delta(std::uint32_t n) {
  const auto d = delta_reduced(witness(n));
  if (d != static_cast<std::int64_t>(n) - 1) {
    throw std::logic_error("Delta(w_" + std::to_string(n) + ") = " + std::to_string(d) +
                           ", expected " + std::to_string(n - 1));
  }
  return d;
}

std::uint64_t lower_bound_c(const ReducedWord& g, std::uint32_t m) {
  const auto d = delta_reduced(g);
  const auto per_factor = product_ap_bound(m, 1);
  std::uint64_t c = d > 0 ? static_cast<std::uint64_t>((d + per_factor - 1) / per_factor) : 0;
  if (!g.empty()) c = std::max<std::uint64_t>(c, 1);
  return c;
}

std::uint64_t lower_bound_c(const Word& g, std::uint32_t m) { return lower_bound_c(reduce(g), m); }

std::vector<ApGenerator> ap_generators(std::uint32_t m, std::uint32_t rank, std::uint32_t gen_len,
                                       std::uint64_t enumeration_cap) {
  const ApConfig cfg{.rank = rank, .m = m, .max_len = gen_len, .enumeration_cap = enumeration_cap};
  cfg.validate();
  std::unordered_map<Packed, std::size_t> seen;
  std::vector<ApGenerator> out;
  // Enumeration is by length, then lexicographic, so the first preimage
  // found is the shortlex-least one.
  for (std::uint32_t len = 1; len <= gen_len; ++len) {
    ApEnumerator it(cfg, len);
    while (auto p = it.next()) {
      auto g = reduce(*p);
      if (g.empty()) continue;
      auto [pos, inserted] = seen.try_emplace(pack(g), out.size());
      if (inserted) out.push_back({std::move(g), std::move(*p)});
    }
  }
  // Inverting an almost-palindrome preserves its distance to its reverse,
  // so the set is already inversion-closed; keep it closed regardless.
  const auto base = out.size();
  for (std::size_t i = 0; i < base; ++i) {
    auto inv = out[i].element.inverse();
    if (seen.try_emplace(pack(inv), out.size()).second) {
      out.push_back({std::move(inv), invert(out[i].representative)});
    }
  }
  std::sort(out.begin(), out.end(), [](const ApGenerator& a, const ApGenerator& b) {
    return canonical_less(a.element, b.element);
  });
  return out;
}

struct WidthSearch::State {
  struct Node {
    const Packed* key = nullptr;
    std::uint32_t pred = 0;
    std::uint32_t gen = 0;
    std::uint32_t dist = 0;
    std::uint32_t rank = 0;  // position within its layer
  };

  std::uint32_t m;
  WidthBudget budget;
  std::vector<ApGenerator> generators;
  std::vector<Packed> packed_generators;

  std::unordered_map<Packed, std::uint32_t> index;
  std::vector<Node> nodes;
  std::vector<std::vector<std::uint32_t>> layers;
  bool cap_hit = false;

  // Layers 0..complete_radius() are exact distance spheres.
  std::uint32_t complete_radius() const {
    return static_cast<std::uint32_t>(layers.size()) - 1 - (cap_hit ? 1 : 0);
  }

  void add(Packed key, std::uint32_t pred, std::uint32_t gen, std::uint32_t dist) {
    auto [it, inserted] = index.try_emplace(std::move(key), static_cast<std::uint32_t>(nodes.size()));
    if (!inserted) return;
    auto& layer = layers[dist];
    nodes.push_back({&it->first, pred, gen, dist, static_cast<std::uint32_t>(layer.size())});
    layer.push_back(it->second);
  }

  // Grows the ball until layer `radius` is complete. Returns false if the
  // ball cap stops it first.
  bool ensure(std::uint32_t radius) {
    while (!cap_hit && layers.size() <= radius) {
      const auto d = static_cast<std::uint32_t>(layers.size());
      layers.emplace_back();
      // Iterating predecessors in layer order and generators in canonical
      // order discovers each node along its lexicographically least path.
      const auto prev = layers[d - 1];
      for (auto u : prev) {
        for (std::uint32_t gi = 0; gi < packed_generators.size(); ++gi) {
          add(multiply(*nodes[u].key, packed_generators[gi]), u, gi, d);
          if (nodes.size() > budget.ball_cap) {
            cap_hit = true;
            return false;
          }
        }
      }
    }
    return layers.size() > radius && complete_radius() >= radius;
  }

  const Node* lookup(const Packed& key, std::uint32_t dist) const {
    auto it = index.find(key);
    if (it == index.end()) return nullptr;
    const auto& node = nodes[it->second];
    return node.dist == dist ? &node : nullptr;
  }

  void append_path(const Node& node, std::vector<Word>& out) const {
    std::vector<std::uint32_t> gens;
    for (const Node* v = &node; v->dist > 0; v = &nodes[v->pred]) gens.push_back(v->gen);
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
      out.push_back(generators[*it].representative);
    }
  }
};

WidthSearch::WidthSearch(std::uint32_t m, std::uint32_t rank, WidthBudget budget)
    : state_(std::make_unique<State>()) {
  state_->m = m;
  state_->budget = budget;
  state_->generators = ap_generators(m, rank, budget.gen_len);
  for (const auto& g : state_->generators) state_->packed_generators.push_back(pack(g.element));
  state_->layers.emplace_back();
  state_->add(Packed(), 0, 0, 0);
}

WidthSearch::~WidthSearch() = default;
WidthSearch::WidthSearch(WidthSearch&&) noexcept = default;
WidthSearch& WidthSearch::operator=(WidthSearch&&) noexcept = default;

std::size_t WidthSearch::generator_count() const { return state_->generators.size(); }
std::size_t WidthSearch::ball_size() const { return state_->nodes.size(); }

WidthAnswer WidthSearch::search(const ReducedWord& g) {
  auto& s = *state_;
  WidthAnswer answer;
  answer.query = g;
  answer.m = s.m;
  answer.budget = s.budget;
  answer.lower_bound = lower_bound_c(g, s.m);

  const Packed target = pack(g);
  const std::uint32_t max_c = s.budget.max_c;
  const std::uint32_t radius = (max_c + 1) / 2;

  if (g.empty()) {
    answer.found = true;
  }
  for (std::uint32_t c = 1; c <= max_c && !answer.found; ++c) {
    if (c <= radius) {
      if (!s.ensure(c)) break;
      if (const auto* node = s.lookup(target, c)) {
        answer.found = true;
        answer.c = c;
        s.append_path(*node, answer.certificate);
      }
      continue;
    }
    // g = x h with |x| = c - c/2 and |h| = c/2, both in the ball.
    const std::uint32_t suffix = c / 2;
    const std::uint32_t prefix = c - suffix;
    if (!s.ensure(prefix)) break;
    const State::Node* best_x = nullptr;
    const State::Node* best_h = nullptr;
    for (auto hi : s.layers[suffix]) {
      const auto& h = s.nodes[hi];
      const auto* x = s.lookup(multiply(target, inverse(*h.key)), prefix);
      if (x && (!best_x || x->rank < best_x->rank)) {
        best_x = x;
        best_h = &h;
      }
    }
    if (best_x) {
      answer.found = true;
      answer.c = c;
      s.append_path(*best_x, answer.certificate);
      s.append_path(*best_h, answer.certificate);
    }
  }

  if (answer.found) {
    for (const auto& w : answer.certificate) {
      if (w.length() > s.budget.gen_len || !is_m_almost_palindrome(w, s.m)) {
        throw std::logic_error("certificate factor " + format(w) + " is not admitted");
      }
    }
    if (!(reduce(concat(answer.certificate)) == g)) {
      throw std::logic_error("certificate product differs from " + format(g));
    }
    if (answer.c < answer.lower_bound) {
      throw std::logic_error("decomposition of " + format(g) + " into " +
                             std::to_string(answer.c) + " factors beats the lower bound " +
                             std::to_string(answer.lower_bound));
    }
  }
  return answer;
}

WidthAnswer ap_length_upper(const Word& g, std::uint32_t m, const WidthBudget& budget,
                            std::uint32_t rank) {
  if (g.min_rank() > rank) {
    throw std::invalid_argument("query uses a generator outside rank " + std::to_string(rank));
  }
  WidthSearch search(m, rank, budget);
  return search.search(reduce(g));
}

std::string TheoremTable::to_csv() const {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.delta) + ',' +
           std::to_string(r.lower_bound_c) + ',' +
           (r.upper_c ? std::to_string(*r.upper_c) : std::string()) + ',' + r.status + '\n';
  }
  return out;
}

nlohmann::ordered_json TheoremTable::to_json() const {
  nlohmann::ordered_json j;
  j["m"] = m;
  j["budget"] = {{"gen_len", budget.gen_len}, {"max_c", budget.max_c},
                 {"ball_cap", budget.ball_cap}};
  auto& rows_json = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    rows_json.push_back({{"n", r.n},
                         {"delta", r.delta},
                         {"lower_bound_c", r.lower_bound_c},
                         {"upper_c", r.upper_c ? nlohmann::ordered_json(*r.upper_c) : nullptr},
                         {"status", r.status}});
  }
  return j;
}

TheoremTable theorem_table(std::uint32_t m, std::uint32_t n_max, const WidthBudget& budget) {
  TheoremTable table;
  table.m = m;
  table.budget = budget;
  std::optional<WidthSearch> search;
  const std::uint64_t reach = std::uint64_t{budget.gen_len} * budget.max_c;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    TheoremRow row;
    row.n = n;
    row.delta = witness_delta(n);
    const auto w = witness(n);
    row.lower_bound_c = lower_bound_c(w, m);
    row.status = "not_found_within_budget";
    if (static_cast<std::uint64_t>(w.letter_length()) <= reach) {
      if (!search) search.emplace(m, 2, budget);
      const auto answer = search->search(w);
      if (answer.found) row.upper_c = answer.c;
      row.status = answer.status();
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace apw
