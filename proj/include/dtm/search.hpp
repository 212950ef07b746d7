#pragma once

// Exhaustive and stochastic search for extremal variation ratios and lemma
// sums. Sequence objectives are invariant under translation, reflection and
// positive scaling, so only canonical representatives are visited.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "dtm/rational.hpp"
#include "dtm/report.hpp"
#include "dtm/sequence.hpp"
#include "dtm/sequence_io.hpp"
#include "dtm/verify.hpp"

namespace dtm {

enum class SearchMode { exhaustive, stochastic };
enum class Objective { tanaka_ratio, centered_l1_ratio, question_b_ratio, lemma_sum };

inline std::string_view to_string(SearchMode m) { return m == SearchMode::exhaustive ? "exhaustive" : "stochastic"; }

inline std::string_view to_string(Objective o) {
  switch (o) {
    case Objective::tanaka_ratio: return "tanaka";
    case Objective::centered_l1_ratio: return "centered-l1";
    case Objective::question_b_ratio: return "question-b";
    case Objective::lemma_sum: return "lemma-sum";
  }
  return "?";
}

inline std::optional<Objective> parse_objective(std::string_view s) {
  if (s == "tanaka" || s == "tanaka_ratio") return Objective::tanaka_ratio;
  if (s == "centered-l1" || s == "centered_l1_ratio") return Objective::centered_l1_ratio;
  if (s == "question-b" || s == "question_b_ratio") return Objective::question_b_ratio;
  if (s == "lemma-sum" || s == "lemma_sum") return Objective::lemma_sum;
  return std::nullopt;
}

struct ShardSpec {
  std::uint32_t index = 0;
  std::uint32_t count = 1;

  /// Parses "i/N" with 0 <= i < N.
  static ShardSpec parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) throw std::invalid_argument("shard spec must look like i/N");
    std::int64_t i = 0;
    std::int64_t n = 0;
    if (!detail::parse_index(text.substr(0, slash), i) || !detail::parse_index(text.substr(slash + 1), n) ||
        n < 1 || i < 0 || i >= n || n > 1'000'000) {
      throw std::invalid_argument("invalid shard spec '" + std::string(text) + "'");
    }
    return {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(n)};
  }
};

/// Search space and objective. For sequence objectives: support width <=
/// support_len_max, values in {0..value_max}. For lemma_sum: strictly
/// increasing sequences of length <= support_len_max with terms in
/// [-value_max, value_max], anchors n in [-value_max-2, value_max+2].
struct SearchConfig {
  SearchMode mode = SearchMode::exhaustive;
  std::int64_t support_len_max = 6;
  std::int64_t value_max = 4;
  Objective objective = Objective::tanaka_ratio;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  ShardSpec shard;
  /// When set, every examined input whose objective value is >= this is
  /// listed in SearchReport::above_threshold.
  std::optional<Rational> report_threshold;

  void validate() const {
    if (support_len_max < 1 || value_max < 1) throw std::invalid_argument("search needs len >= 1 and vmax >= 1");
    if (shard.count < 1 || shard.index >= shard.count) throw std::invalid_argument("invalid shard spec");
  }
};

struct LemmaPoint {
  std::int64_t n = 0;
  IncreasingIntSeq a;

  friend bool operator==(const LemmaPoint&, const LemmaPoint&) = default;
};

using Argmax = std::variant<std::monostate, Sequence, LemmaPoint>;

struct SearchReport {
  Objective objective = Objective::tanaka_ratio;
  std::optional<Rational> best_value;
  Argmax argmax;
  std::uint64_t count_examined = 0;
  std::vector<VerificationReport> violations;
  std::vector<std::pair<std::string, Rational>> above_threshold;  // serialized input, value
  SearchConfig config;
};

// ---------------------------------------------------------------------------
// Canonical forms.

/// Lexicographic order on value lists (a proper prefix is smaller).
inline bool canonical_less(const Sequence& a, const Sequence& b) {
  return std::lexicographical_compare(a.values().begin(), a.values().end(), b.values().begin(), b.values().end());
}

/// Representative of f under translation, reflection and positive scaling:
/// support starts at 0, values are coprime integers, and the value list is
/// the lexicographically smaller of itself and its reverse.
inline Sequence canonicalize(const Sequence& f) {
  if (f.is_zero()) return f;
  if (!f.is_nonnegative()) throw std::invalid_argument("canonicalize expects a nonnegative sequence");
  mpz_class lcm = 1;
  for (const auto& v : f.values()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(f.width());
  mpz_class g = 0;
  for (const auto& v : f.values()) {
    ints.push_back(v.numerator() * (lcm / v.denominator()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  std::vector<Rational> forward;
  forward.reserve(ints.size());
  for (const auto& x : ints) forward.emplace_back(mpz_class(x / g));
  std::vector<Rational> backward(forward.rbegin(), forward.rend());
  if (std::lexicographical_compare(backward.begin(), backward.end(), forward.begin(), forward.end())) {
    return Sequence(0, std::move(backward));
  }
  return Sequence(0, std::move(forward));
}

/// Canonical nonnegative integer sequences with width <= L and values <= V,
/// each exactly once: widths ascending, then value lists in lexicographic
/// order.
class CanonicalEnumerator {
 public:
  CanonicalEnumerator(std::int64_t max_len, std::int64_t max_value) : max_len_(max_len), max_value_(max_value) {
    if (max_len < 1 || max_value < 1) throw std::invalid_argument("enumeration needs L >= 1 and V >= 1");
  }

  std::optional<std::vector<std::int64_t>> next() {
    while (advance()) {
      if (is_canonical(digits_)) return digits_;
    }
    return std::nullopt;
  }

  static bool is_canonical(const std::vector<std::int64_t>& v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    if (g != 1) return false;
    return !std::lexicographical_compare(v.rbegin(), v.rend(), v.begin(), v.end());
  }

 private:
  std::int64_t lower(std::size_t pos) const { return pos == 0 || pos + 1 == digits_.size() ? 1 : 0; }

  bool advance() {
    if (digits_.empty()) return start_width(1);
    for (std::size_t pos = digits_.size(); pos-- > 0;) {
      if (digits_[pos] < max_value_) {
        ++digits_[pos];
        for (auto k = pos + 1; k < digits_.size(); ++k) digits_[k] = lower(k);
        return true;
      }
    }
    return start_width(static_cast<std::int64_t>(digits_.size()) + 1);
  }

  bool start_width(std::int64_t w) {
    if (w > max_len_) {
      digits_.clear();
      done_ = true;
      return false;
    }
    if (done_) return false;
    digits_.assign(static_cast<std::size_t>(w), 0);
    for (std::size_t k = 0; k < digits_.size(); ++k) digits_[k] = lower(k);
    return true;
  }

  std::int64_t max_len_;
  std::int64_t max_value_;
  std::vector<std::int64_t> digits_;
  bool done_ = false;
};

inline std::vector<Sequence> enumerate_canonical(std::int64_t max_len, std::int64_t max_value) {
  std::vector<Sequence> out;
  CanonicalEnumerator e(max_len, max_value);
  while (auto v = e.next()) out.push_back(Sequence::from_integers(0, *v));
  return out;
}

// ---------------------------------------------------------------------------
// Objective evaluation and report merging.

inline VerificationReport evaluate_objective(Objective objective, const Sequence& f) {
  switch (objective) {
    case Objective::tanaka_ratio: return check_tanaka(f);
    case Objective::centered_l1_ratio: return check_centered_bound(f);
    case Objective::question_b_ratio: return check_question_b(f);
    case Objective::lemma_sum: break;
  }
  throw std::invalid_argument("lemma_sum is not a sequence objective");
}

namespace detail {

inline bool argmax_less(const Argmax& a, const Argmax& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* sa = std::get_if<Sequence>(&a)) return canonical_less(*sa, std::get<Sequence>(b));
  if (const auto* la = std::get_if<LemmaPoint>(&a)) {
    const auto& lb = std::get<LemmaPoint>(b);
    if (la->a != lb.a) return la->a < lb.a;
    return la->n < lb.n;
  }
  return false;
}

/// Records a candidate; ties go to the smaller argmax so that the result
/// does not depend on visiting order.
inline void offer(SearchReport& r, const Rational& value, Argmax candidate) {
  if (!r.best_value || value > *r.best_value ||
      (value == *r.best_value && argmax_less(candidate, r.argmax))) {
    r.best_value = value;
    r.argmax = std::move(candidate);
  }
}

inline void note_threshold(SearchReport& r, const Rational& value, std::string input) {
  if (r.config.report_threshold && value >= *r.config.report_threshold) {
    r.above_threshold.emplace_back(std::move(input), value);
  }
}

inline void normalize(SearchReport& r) {
  auto key = [](const VerificationReport& v) { return std::make_pair(v.check_name, v.input_digest()); };
  std::sort(r.violations.begin(), r.violations.end(),
            [&](const VerificationReport& x, const VerificationReport& y) { return key(x) < key(y); });
  r.violations.erase(std::unique(r.violations.begin(), r.violations.end(),
                                 [&](const VerificationReport& x, const VerificationReport& y) {
                                   return key(x) == key(y);
                                 }),
                     r.violations.end());
  std::sort(r.above_threshold.begin(), r.above_threshold.end());
  r.above_threshold.erase(std::unique(r.above_threshold.begin(), r.above_threshold.end()), r.above_threshold.end());
}

inline bool owns(const SearchConfig& c, std::uint64_t item, std::uint32_t worker, std::uint32_t workers) {
  return item % c.shard.count == c.shard.index && (item / c.shard.count) % workers == worker;
}

/// Evaluates one sequence, updates the report, returns its objective value.
inline Rational record_sequence(SearchReport& r, const Sequence& f) {
  auto report = evaluate_objective(r.config.objective, f);
  ++r.count_examined;
  if (report.outcome == Outcome::violated) r.violations.push_back(report);
  if (!report.ratio) return Rational();
  note_threshold(r, *report.ratio, serialize_sequence(f));
  offer(r, *report.ratio, f);
  return *report.ratio;
}

inline Rational record_lemma(SearchReport& r, std::int64_t n, const IncreasingIntSeq& a) {
  auto report = check_lemma_bounds(n, a);
  ++r.count_examined;
  if (report.outcome == Outcome::violated) r.violations.push_back(report);
  const Rational value = report.ratio.value_or(Rational());
  note_threshold(r, value, report.input_digest());
  offer(r, value, LemmaPoint{n, a});
  return value;
}

/// Calls fn(terms) for every strictly increasing list of length 1..max_len
/// inside [lo, hi], lengths ascending, each length in lexicographic order.
template <class Fn>
void for_each_increasing(std::int64_t lo, std::int64_t hi, std::int64_t max_len, Fn&& fn) {
  const auto span = hi - lo + 1;
  for (std::int64_t len = 1; len <= std::min(max_len, span); ++len) {
    std::vector<std::int64_t> idx(static_cast<std::size_t>(len));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<std::int64_t> terms(idx.size());
      for (std::size_t k = 0; k < idx.size(); ++k) terms[k] = lo + idx[k];
      fn(terms);
      std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(len) - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == span - len + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (auto k = static_cast<std::size_t>(pos) + 1; k < idx.size(); ++k) idx[k] = idx[k - 1] + 1;
    }
  }
}

inline SearchReport empty_report(const SearchConfig& config) {
  SearchReport r;
  r.objective = config.objective;
  r.config = config;
  return r;
}

}  // namespace detail

/// Folds `other` into `into`: max-reduction with the deterministic tie-break,
/// counts added, violation lists unioned. Associative and commutative.
inline void merge(SearchReport& into, const SearchReport& other) {
  if (other.best_value) detail::offer(into, *other.best_value, other.argmax);
  into.count_examined += other.count_examined;
  into.violations.insert(into.violations.end(), other.violations.begin(), other.violations.end());
  into.above_threshold.insert(into.above_threshold.end(), other.above_threshold.begin(), other.above_threshold.end());
  detail::normalize(into);
}

/// Every item of the configured space owned by (shard, worker).
inline SearchReport exhaustive_search(const SearchConfig& config, std::uint32_t worker = 0,
                                      std::uint32_t workers = 1) {
  config.validate();
  auto r = detail::empty_report(config);
  std::uint64_t item = 0;
  if (config.objective == Objective::lemma_sum) {
    const auto range = config.value_max;
    detail::for_each_increasing(-range, range, config.support_len_max, [&](const std::vector<std::int64_t>& t) {
      if (detail::owns(config, item++, worker, workers)) {
        const IncreasingIntSeq a(t);
        for (auto n = -range - 2; n <= range + 2; ++n) detail::record_lemma(r, n, a);
      }
    });
  } else {
    CanonicalEnumerator e(config.support_len_max, config.value_max);
    while (auto v = e.next()) {
      if (detail::owns(config, item++, worker, workers)) detail::record_sequence(r, Sequence::from_integers(0, *v));
    }
  }
  detail::normalize(r);
  return r;
}

namespace detail {

inline constexpr std::uint64_t kRestartBudget = 256;

inline std::uint64_t restart_seed(std::uint64_t seed, std::uint64_t restart) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (restart + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Drops zero ends; empty result means the zero sequence.
inline std::vector<std::int64_t> tight(std::vector<std::int64_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  auto first = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
  v.erase(v.begin(), first);
  return v;
}

inline std::vector<std::vector<std::int64_t>> sequence_neighbors(const std::vector<std::int64_t>& v,
                                                                 std::int64_t max_len, std::int64_t max_value) {
  std::vector<std::vector<std::int64_t>> out;
  auto add = [&](std::vector<std::int64_t> c) {
    c = tight(std::move(c));
    if (!c.empty() && static_cast<std::int64_t>(c.size()) <= max_len) out.push_back(std::move(c));
  };
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < max_value) {
      auto c = v;
      ++c[i];
      add(std::move(c));
    }
    if (v[i] > 0) {
      auto c = v;
      --c[i];
      add(std::move(c));
    }
    if (v[i] > 0 && 2 * v[i] <= max_value) {
      auto c = v;
      c[i] *= 2;
      add(std::move(c));
    }
  }
  if (static_cast<std::int64_t>(v.size()) < max_len) {
    auto front = v;
    front.insert(front.begin(), 1);
    add(std::move(front));
    auto back = v;
    back.push_back(1);
    add(std::move(back));
  }
  if (v.size() > 1) {
    add(std::vector<std::int64_t>(v.begin() + 1, v.end()));
    add(std::vector<std::int64_t>(v.begin(), v.end() - 1));
  }
  return out;
}

inline std::vector<std::int64_t> random_sequence(std::mt19937_64& rng, std::int64_t max_len, std::int64_t max_value) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(uniform(rng, 1, max_len)));
  for (auto& x : v) x = uniform(rng, 0, max_value);
  v.front() = std::max<std::int64_t>(v.front(), 1);
  v.back() = std::max<std::int64_t>(v.back(), 1);
  return v;
}

struct LemmaState {
  std::int64_t n;
  std::vector<std::int64_t> terms;
};

inline std::vector<LemmaState> lemma_neighbors(const LemmaState& s, std::int64_t max_len, std::int64_t range) {
  std::vector<LemmaState> out;
  const auto& t = s.terms;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto lo = i == 0 ? -range : t[i - 1] + 1;
    const auto hi = i + 1 == t.size() ? range : t[i + 1] - 1;
    for (const auto d : {-1, 1}) {
      const auto x = t[i] + d;
      if (x < lo || x > hi) continue;
      auto c = s;
      c.terms[i] = x;
      out.push_back(std::move(c));
    }
    if (t.size() > 1) {
      auto c = s;
      c.terms.erase(c.terms.begin() + static_cast<std::ptrdiff_t>(i));
      out.push_back(std::move(c));
    }
  }
  if (static_cast<std::int64_t>(t.size()) < max_len) {
    if (t.front() > -range) {
      auto c = s;
      c.terms.insert(c.terms.begin(), t.front() - 1);
      out.push_back(std::move(c));
    }
    if (t.back() < range) {
      auto c = s;
      c.terms.push_back(t.back() + 1);
      out.push_back(std::move(c));
    }
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (t[i] - t[i - 1] >= 2) {
        auto c = s;
        c.terms.insert(c.terms.begin() + static_cast<std::ptrdiff_t>(i), t[i - 1] + (t[i] - t[i - 1]) / 2);
        out.push_back(std::move(c));
      }
    }
  }
  for (const auto d : {-1, 1}) {
    const auto n = s.n + d;
    if (n < -range - 2 || n > range + 2) continue;
    out.push_back({n, t});
  }
  return out;
}

inline LemmaState random_lemma_state(std::mt19937_64& rng, std::int64_t max_len, std::int64_t range) {
  std::vector<std::int64_t> pool(static_cast<std::size_t>(2 * range + 1));
  std::iota(pool.begin(), pool.end(), -range);
  const auto len = uniform(rng, 1, std::min<std::int64_t>(max_len, static_cast<std::int64_t>(pool.size())));
  std::vector<std::int64_t> terms;
  for (std::int64_t k = 0; k < len; ++k) {
    const auto j = static_cast<std::size_t>(uniform(rng, k, static_cast<std::int64_t>(pool.size()) - 1));
    std::swap(pool[static_cast<std::size_t>(k)], pool[j]);
    terms.push_back(pool[static_cast<std::size_t>(k)]);
  }
  std::sort(terms.begin(), terms.end());
  return {uniform(rng, -range - 2, range + 2), std::move(terms)};
}

/// Generic seeded hill climb: random neighbor proposals, uphill moves always
/// accepted, sideways moves with probability 1/2, fresh random start after a
/// long stall.
template <class State, class Eval, class Neighbors, class Start>
void hill_climb(std::mt19937_64& rng, std::uint64_t budget, Eval&& eval, Neighbors&& neighbors, Start&& start) {
  if (budget == 0) return;
  State cur = start(rng);
  Rational cur_val = eval(cur);
  --budget;
  std::uint64_t stall = 0;
  while (budget > 0) {
    auto options = neighbors(cur);
    if (options.empty() || stall > 4 * options.size() + 8) {
      cur = start(rng);
      cur_val = eval(cur);
      --budget;
      stall = 0;
      continue;
    }
    auto cand = options[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(options.size()) - 1))];
    const Rational val = eval(cand);
    --budget;
    if (val > cur_val) {
      cur = std::move(cand);
      cur_val = val;
      stall = 0;
    } else {
      ++stall;
      if (val == cur_val && uniform(rng, 0, 1) == 1) cur = std::move(cand);
    }
  }
}

}  // namespace detail

/// Seeded hill climbing with restarts. The budget is split into restarts of
/// at most 256 evaluations, each with its own seed derived from the global
/// seed, so the result depends only on (seed, config).
inline SearchReport stochastic_search(const SearchConfig& config, std::uint32_t worker = 0,
                                      std::uint32_t workers = 1) {
  config.validate();
  auto r = detail::empty_report(config);
  const std::uint64_t restarts = (config.budget + detail::kRestartBudget - 1) / detail::kRestartBudget;
  for (std::uint64_t k = 0; k < restarts; ++k) {
    if (!detail::owns(config, k, worker, workers)) continue;
    std::mt19937_64 rng(detail::restart_seed(config.seed, k));
    const auto budget = std::min(detail::kRestartBudget, config.budget - k * detail::kRestartBudget);
    if (config.objective == Objective::lemma_sum) {
      auto eval = [&](const detail::LemmaState& s) {
        return detail::record_lemma(r, s.n, IncreasingIntSeq(s.terms));
      };
      detail::hill_climb<detail::LemmaState>(
          rng, budget, eval,
          [&](const detail::LemmaState& s) {
            return detail::lemma_neighbors(s, config.support_len_max, config.value_max);
          },
          [&](std::mt19937_64& g) {
            return detail::random_lemma_state(g, config.support_len_max, config.value_max);
          });
    } else {
      auto eval = [&](const std::vector<std::int64_t>& v) {
        return detail::record_sequence(r, canonicalize(Sequence::from_integers(0, v)));
      };
      detail::hill_climb<std::vector<std::int64_t>>(
          rng, budget, eval,
          [&](const std::vector<std::int64_t>& v) {
            return detail::sequence_neighbors(v, config.support_len_max, config.value_max);
          },
          [&](std::mt19937_64& g) { return detail::random_sequence(g, config.support_len_max, config.value_max); });
    }
  }
  detail::normalize(r);
  return r;
}

/// Runs the configured search on `parallel` threads (each a sub-shard of the
/// configured shard) and merges. The merged report does not depend on the
/// thread count.
inline SearchReport run_search(const SearchConfig& config, unsigned parallel = 1) {
  config.validate();
  parallel = std::max(1u, parallel);
  auto run_one = [&](std::uint32_t worker) {
    return config.mode == SearchMode::exhaustive ? exhaustive_search(config, worker, parallel)
                                                 : stochastic_search(config, worker, parallel);
  };
  if (parallel == 1) return run_one(0);
  std::vector<SearchReport> parts(parallel);
  std::vector<std::thread> threads;
  for (std::uint32_t w = 0; w < parallel; ++w) threads.emplace_back([&, w] { parts[w] = run_one(w); });
  for (auto& t : threads) t.join();
  auto merged = detail::empty_report(config);
  for (const auto& p : parts) merge(merged, p);
  return merged;
}

// ---------------------------------------------------------------------------
// Serialization.

inline nlohmann::json config_to_json(const SearchConfig& c) {
  nlohmann::json j{{"mode", std::string(to_string(c.mode))},
                   {"objective", std::string(to_string(c.objective))},
                   {"len", c.support_len_max},
                   {"vmax", c.value_max},
                   {"seed", c.seed},
                   {"budget", c.budget},
                   {"shard", std::to_string(c.shard.index) + "/" + std::to_string(c.shard.count)}};
  j["threshold"] = c.report_threshold ? nlohmann::json(c.report_threshold->str()) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json argmax_to_json(const Argmax& a) {
  if (const auto* f = std::get_if<Sequence>(&a)) return sequence_to_json(*f);
  if (const auto* l = std::get_if<LemmaPoint>(&a)) return {{"n", l->n}, {"a", l->a.terms()}};
  return nullptr;
}

inline nlohmann::json to_json(const SearchReport& r, bool decimal = false) {
  nlohmann::json j;
  j["objective"] = std::string(to_string(r.objective));
  j["best_value"] = r.best_value ? nlohmann::json(r.best_value->str()) : nlohmann::json(nullptr);
  if (decimal && r.best_value) j["best_value_approx"] = r.best_value->approx();
  j["argmax"] = argmax_to_json(r.argmax);
  j["count_examined"] = r.count_examined;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : r.violations) j["violations"].push_back(to_json(v));
  j["config"] = config_to_json(r.config);
  if (r.config.report_threshold) {
    j["above_threshold"] = nlohmann::json::array();
    for (const auto& [input, value] : r.above_threshold) {
      j["above_threshold"].push_back(nlohmann::json{{"input", nlohmann::json::parse(input)}, {"value", value.str()}});
    }
  }
  return j;
}

/// CSV rows `input,value` for every input at or above the report threshold.
inline std::string above_threshold_csv(const SearchReport& r) {
  std::string out = "input,value\n";
  for (const auto& [input, value] : r.above_threshold) {
    out += '"';
    for (char c : input) {
      if (c == '"') out += '"';
      out += c;
    }
    out += "\"," + value.str() + "\n";
  }
  return out;
}

}  // namespace dtm
