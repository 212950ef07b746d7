#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dtm/rational.hpp"
#include "dtm/sequence.hpp"

namespace dtm {

/// Raised when a computed object contradicts a property it is known to have
/// (e.g. a transform whose tails are not monotone). Indicates a bug.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// What a tabulated function does outside its window.
enum class TailLaw {
  /// identically zero (a finitely supported sequence)
  zero,
  /// non-decreasing on (-inf, start], non-increasing on [end, +inf), limit 0
  /// at both ends (a maximal transform)
  monotone_to_zero,
};

/// A function Z -> Q known exactly on a window, plus a few values on each
/// side of it used to confirm the tail law. `left_margin` holds
/// g(start - k), ..., g(start - 1); `right_margin` holds g(end + 1), ...
struct TabulatedFunction {
  std::int64_t start = 0;
  std::vector<Rational> values;
  std::vector<Rational> left_margin;
  std::vector<Rational> right_margin;
  TailLaw law = TailLaw::zero;

  std::int64_t end() const { return start + static_cast<std::int64_t>(values.size()) - 1; }
};

inline TabulatedFunction tabulate(const Sequence& f) {
  TabulatedFunction t;
  t.start = f.first_index();
  t.values.assign(f.values().begin(), f.values().end());
  t.left_margin.assign(2, Rational());
  t.right_margin.assign(2, Rational());
  t.law = TailLaw::zero;
  return t;
}

/// Alternating local maxima / minima, in the literal sense
///   max: g(n-1) <= g(n) and g(n) > g(n+1)
///   min: g(n-1) >= g(n) and g(n) < g(n+1)
/// so a plateau contributes its right edge only. Only turning points are kept
/// (see extrema_chain), so the chain alternates.
struct ExtremaChain {
  std::vector<std::int64_t> maxima;
  std::vector<std::int64_t> minima;

  bool empty() const { return maxima.empty() && minima.empty(); }
  bool first_is_maximum() const {
    return !maxima.empty() && (minima.empty() || maxima.front() < minima.front());
  }
  bool last_is_maximum() const {
    return !maxima.empty() && (minima.empty() || maxima.back() > minima.back());
  }

  friend bool operator==(const ExtremaChain&, const ExtremaChain&) = default;
};

namespace detail {

inline void check_tail_law(const TabulatedFunction& g) {
  if (g.values.empty()) return;
  if (g.law == TailLaw::zero) {
    for (const auto& v : g.left_margin)
      if (!v.is_zero()) throw InternalConsistencyError("zero tail law violated left of window");
    for (const auto& v : g.right_margin)
      if (!v.is_zero()) throw InternalConsistencyError("zero tail law violated right of window");
    return;
  }
  const Rational* prev = nullptr;
  for (const auto& v : g.left_margin) {
    if (v.sign() < 0 || (prev && *prev > v))
      throw InternalConsistencyError("left tail is not non-decreasing toward the window");
    prev = &v;
  }
  if (prev && *prev > g.values.front())
    throw InternalConsistencyError("left tail exceeds the first window value");
  prev = &g.values.back();
  for (const auto& v : g.right_margin) {
    if (v.sign() < 0 || *prev < v)
      throw InternalConsistencyError("right tail is not non-increasing away from the window");
    prev = &v;
  }
}

}  // namespace detail

/// Extrema of g on its window. Runs of equal values are collapsed to their
/// right edge, tails included (the limit 0 closes both ends), and a point is
/// kept when it is a strict turn of the collapsed sequence. Every kept point
/// meets the literal definitions. Literal points that are not turns sit on a
/// staircase (4,3,3,1 at the second 3, or 0,2,2,7 at the second 2) and are
/// skipped, which keeps the chain alternating. Indices outside the window are
/// not reported: there g moves monotonically to 0 and carries no turn.
inline ExtremaChain extrema_chain(const TabulatedFunction& g) {
  detail::check_tail_law(g);
  ExtremaChain chain;
  if (g.values.empty()) return chain;
  const auto nl = static_cast<std::int64_t>(g.left_margin.size());
  std::vector<std::pair<std::int64_t, const Rational*>> runs;
  auto push = [&](std::int64_t n, const Rational& v) {
    if (!runs.empty() && *runs.back().second == v) runs.back() = {n, &v};
    else runs.emplace_back(n, &v);
  };
  static const Rational zero;
  push(g.start - nl - 1, zero);
  for (std::int64_t k = 0; k < nl; ++k) push(g.start - nl + k, g.left_margin[static_cast<std::size_t>(k)]);
  for (std::size_t i = 0; i < g.values.size(); ++i) push(g.start + static_cast<std::int64_t>(i), g.values[i]);
  std::int64_t n = g.end();
  for (const auto& v : g.right_margin) push(++n, v);
  push(n + 1, zero);
  for (std::size_t k = 1; k + 1 < runs.size(); ++k) {
    const auto [idx, cur] = runs[k];
    if (idx < g.start || idx > g.end()) continue;
    const Rational& prev = *runs[k - 1].second;
    const Rational& next = *runs[k + 1].second;
    if (prev < *cur && *cur > next) chain.maxima.push_back(idx);
    else if (prev > *cur && *cur < next) chain.minima.push_back(idx);
  }
  return chain;
}

/// Every window index meeting the literal local-maximum definition, staircase
/// steps included.
inline std::vector<std::int64_t> literal_maxima(const TabulatedFunction& g) {
  detail::check_tail_law(g);
  std::vector<std::int64_t> out;
  static const Rational zero;
  const auto w = static_cast<std::ptrdiff_t>(g.values.size());
  auto at = [&](std::ptrdiff_t i) -> const Rational& {
    if (i < 0) return g.left_margin.empty() ? zero : g.left_margin.back();
    if (i >= w) return g.right_margin.empty() ? zero : g.right_margin.front();
    return g.values[static_cast<std::size_t>(i)];
  };
  for (std::ptrdiff_t i = 0; i < w; ++i) {
    if (at(i - 1) <= at(i) && at(i) > at(i + 1)) out.push_back(g.start + i);
  }
  return out;
}

inline ExtremaChain extrema_chain(const Sequence& f) { return extrema_chain(tabulate(f)); }

}  // namespace dtm
