#pragma once

// Discrete Hardy-Littlewood maximal transforms of finitely supported
// sequences, in exact arithmetic:
//
//   centered     Mf(n)  = sup_{r>=0}   (1/(2r+1))  sum_{k=-r..r} |f(n+k)|
//   noncentered  M~f(n) = sup_{r,s>=0} (1/(r+s+1)) sum_{k=-r..s} |f(n+k)|
//   left         M_Lf(n) = sup_{r>=0} (1/(r+1/2)) (|f(n)|/2 + sum_{k=1..r} |f(n-k)|)
//   right        M_Rf(n) = sup_{s>=0} (1/(s+1/2)) (|f(n)|/2 + sum_{k=1..s} |f(n+k)|)
//
// Truncation lemma. Let |f| be supported on [a, b]. Once an averaging window
// already covers the support on one side, pushing that side further out adds
// zeros to the numerator and strictly grows the denominator, so the average
// drops. Hence every supremum above is attained with windows inside
// [min(n, a), max(n, b)]: for the centered operator r <= max(|n-a|, |n-b|),
// and one-sided reaches stop at the support edge.
//
// Tail law. Outside [a, b] each transform is monotone: non-decreasing on
// (-inf, a], non-increasing on [b, +inf), tending to 0 at both ends. So the
// transform is fully described by its window values plus the closed forms for
// the tails evaluated in value_at().

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtm/detail/hull.hpp"
#include "dtm/extrema.hpp"
#include "dtm/rational.hpp"
#include "dtm/sequence.hpp"

namespace dtm {

enum class TransformKind { centered, noncentered, left, right };
enum class Side { left, right };

inline std::string_view to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::centered: return "centered";
    case TransformKind::noncentered: return "noncentered";
    case TransformKind::left: return "left";
    case TransformKind::right: return "right";
  }
  return "?";
}

inline std::optional<TransformKind> parse_transform_kind(std::string_view name) {
  if (name == "centered") return TransformKind::centered;
  if (name == "noncentered") return TransformKind::noncentered;
  if (name == "left") return TransformKind::left;
  if (name == "right") return TransformKind::right;
  return std::nullopt;
}

/// Kind of the mirror-image operator: reflect(T_kind f) = T_mirror(kind)(reflect f).
inline TransformKind mirror(TransformKind kind) {
  if (kind == TransformKind::left) return TransformKind::right;
  if (kind == TransformKind::right) return TransformKind::left;
  return kind;
}

inline constexpr std::string_view kTailLawStatement =
    "non-decreasing on (-inf,a]; non-increasing on [b,+inf); limit 0 at +-inf";

// ---------------------------------------------------------------------------
// Per-point evaluations straight from the definitions.

/// A_r f(n) = (1/(2r+1)) sum_{k=-r..r} |f(n+k)|.
inline Rational centered_average(const Sequence& f, std::int64_t n, std::int64_t r) {
  if (r < 0) throw std::domain_error("radius must be nonnegative");
  Rational sum;
  if (!f.is_zero()) {
    const auto lo = std::max(n - r, f.first_index());
    const auto hi = std::min(n + r, f.last_index());
    for (auto k = lo; k <= hi; ++k) sum += f[k].abs();
  }
  return sum / Rational(2 * r + 1);
}

/// Average of |f| over [n - r, n + s].
inline Rational window_average(const Sequence& f, std::int64_t n, std::int64_t r, std::int64_t s) {
  if (r < 0 || s < 0) throw std::domain_error("window extents must be nonnegative");
  Rational sum;
  if (!f.is_zero()) {
    const auto lo = std::max(n - r, f.first_index());
    const auto hi = std::min(n + s, f.last_index());
    for (auto k = lo; k <= hi; ++k) sum += f[k].abs();
  }
  return sum / Rational(r + s + 1);
}

/// M_L f(n) or M_R f(n) by scanning every reach up to the support edge.
inline Rational one_sided_value(const Sequence& f, std::int64_t n, Side side) {
  if (f.is_zero()) return {};
  const Rational half(1, 2);
  Rational acc = half * f[n].abs();
  Rational best = f[n].abs();
  const std::int64_t reach =
      side == Side::right ? f.last_index() - n : n - f.first_index();
  for (std::int64_t s = 1; s <= reach; ++s) {
    acc += f[side == Side::right ? n + s : n - s].abs();
    best = std::max(best, acc / (Rational(s) + half));
  }
  return best;
}

/// M~f(n) by enumerating every window [n - r, n + s] inside
/// [min(n, a), max(n, b)]. Quadratic in the support width per point.
inline Rational noncentered_value_naive(const Sequence& f, std::int64_t n) {
  if (f.is_zero()) return {};
  const auto lo = std::min(n, f.first_index());
  const auto hi = std::max(n, f.last_index());
  // prefix[i] = sum of |f| over [lo, lo + i - 1]
  std::vector<Rational> prefix(static_cast<std::size_t>(hi - lo + 2));
  for (auto k = lo; k <= hi; ++k) {
    prefix[static_cast<std::size_t>(k - lo + 1)] = prefix[static_cast<std::size_t>(k - lo)] + f[k].abs();
  }
  Rational best;
  for (auto left = lo; left <= n; ++left) {
    for (auto right = n; right <= hi; ++right) {
      const Rational mass =
          prefix[static_cast<std::size_t>(right - lo + 1)] - prefix[static_cast<std::size_t>(left - lo)];
      best = std::max(best, mass / Rational(right - left + 1));
    }
  }
  return best;
}

namespace detail {

/// Centered value and smallest maximizing radius at n, in O(W) for n outside
/// the support and O(W) per radius scan inside it.
inline std::pair<Rational, std::int64_t> centered_point(const Sequence& g, std::int64_t n) {
  const auto a = g.first_index();
  const auto b = g.last_index();
  Rational best;
  std::int64_t best_r = 0;
  if (n < a) {
    // window [n - r, n + r] meets the support in [a, n + r]
    Rational mass;
    for (auto m = a; m <= b; ++m) {
      mass += g[m];
      const Rational cand = mass / Rational(2 * (m - n) + 1);
      if (cand > best) {
        best = cand;
        best_r = m - n;
      }
    }
    return {best, best_r};
  }
  if (n > b) {
    Rational mass;
    for (auto m = b; m >= a; --m) {
      mass += g[m];
      const Rational cand = mass / Rational(2 * (n - m) + 1);
      if (cand > best) {
        best = cand;
        best_r = n - m;
      }
    }
    return {best, best_r};
  }
  Rational mass = g[n];
  best = mass;
  const auto reach = std::max(n - a, b - n);
  for (std::int64_t r = 1; r <= reach; ++r) {
    mass += g[n - r] + g[n + r];
    const Rational cand = mass / Rational(2 * r + 1);
    if (cand > best) {
      best = cand;
      best_r = r;
    }
  }
  return {best, best_r};
}

/// Non-centered value outside the support: the window must reach from n to
/// the support, so only its far end varies.
inline Rational noncentered_tail(const Sequence& g, std::int64_t n) {
  const auto a = g.first_index();
  const auto b = g.last_index();
  Rational best;
  Rational mass;
  if (n < a) {
    for (auto m = a; m <= b; ++m) {
      mass += g[m];
      best = std::max(best, mass / Rational(m - n + 1));
    }
  } else {
    for (auto m = b; m >= a; --m) {
      mass += g[m];
      best = std::max(best, mass / Rational(n - m + 1));
    }
  }
  return best;
}

/// One-sided value outside the support: zero on the side facing away from it,
/// otherwise mass / (distance + 1/2) maximized over the far end.
inline Rational one_sided_tail(const Sequence& g, std::int64_t n, Side side) {
  const auto a = g.first_index();
  const auto b = g.last_index();
  if ((side == Side::right && n > b) || (side == Side::left && n < a)) return {};
  const Rational half(1, 2);
  Rational best;
  Rational mass;
  if (n < a) {
    for (auto m = a; m <= b; ++m) {
      mass += g[m];
      best = std::max(best, mass / (Rational(m - n) + half));
    }
  } else {
    for (auto m = b; m >= a; --m) {
      mass += g[m];
      best = std::max(best, mass / (Rational(n - m) + half));
    }
  }
  return best;
}

/// |f| scaled to integers by the lcm of its denominators, as prefix sums.
struct ScaledProfile {
  mpz_class scale{1};
  std::vector<mpz_class> prefix;
  std::vector<std::int64_t> small_prefix;  // filled when the profile fits
  bool small = false;
};

inline ScaledProfile scaled_profile(const Sequence& g) {
  ScaledProfile out;
  for (const auto& v : g.values()) mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), v.denominator().get_mpz_t());
  out.prefix.resize(g.width() + 1);
  for (std::size_t i = 0; i < g.width(); ++i) {
    const auto& v = g.values()[i];
    const mpz_class h = ::abs(v.numerator()) * (out.scale / v.denominator());
    out.prefix[i + 1] = out.prefix[i] + h;
  }
  // products of a prefix difference (< 2^60) with a doubled coordinate
  // difference (< 2^33) stay far inside __int128
  static const mpz_class limit = mpz_class(1) << 60;
  out.small = out.prefix.back() < limit && g.width() < (std::size_t{1} << 30);
  if (out.small) {
    out.small_prefix.reserve(out.prefix.size());
    for (const auto& s : out.prefix) out.small_prefix.push_back(s.get_si());
  }
  return out;
}

inline Rational to_rational(const Fraction<std::int64_t>& x, const mpz_class& scale) {
  return Rational(mpz_class(static_cast<long>(x.num)), mpz_class(static_cast<long>(x.den)) * scale);
}
inline Rational to_rational(const Fraction<mpz_class>& x, const mpz_class& scale) {
  return Rational(x.num, x.den * scale);
}

template <class Int>
std::vector<Rational> convert(const std::vector<Fraction<Int>>& xs, const mpz_class& scale) {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(to_rational(x, scale));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// Tabulated values of one maximal operator applied to |f| on the support
/// [a, b] of f. For the zero sequence the window is empty and every value is 0.
class MaximalTransform {
 public:
  MaximalTransform(TransformKind kind, Sequence base, std::vector<Rational> values,
                   std::vector<std::int64_t> optimal_radius = {})
      : kind_(kind), base_(std::move(base)), abs_(abs_of(base_)), values_(std::move(values)),
        radius_(std::move(optimal_radius)) {
    if (values_.size() != base_.width()) throw std::invalid_argument("transform window does not match support");
  }

  TransformKind kind() const { return kind_; }
  const Sequence& base() const { return base_; }
  bool is_zero() const { return base_.is_zero(); }
  std::int64_t window_start() const { return base_.first_index(); }
  std::int64_t window_end() const { return base_.last_index(); }
  std::span<const Rational> values() const { return values_; }
  /// Smallest maximizing radius per window point (centered kind only).
  std::span<const std::int64_t> optimal_radius() const { return radius_; }

  /// Value at any integer n; outside the window the clipped maximization is
  /// evaluated directly in O(W).
  Rational value_at(std::int64_t n) const {
    if (is_zero()) return {};
    if (n >= window_start() && n <= window_end()) return values_[static_cast<std::size_t>(n - window_start())];
    switch (kind_) {
      case TransformKind::centered: return detail::centered_point(abs_, n).first;
      case TransformKind::noncentered: return detail::noncentered_tail(abs_, n);
      case TransformKind::left: return detail::one_sided_tail(abs_, n, Side::left);
      case TransformKind::right: return detail::one_sided_tail(abs_, n, Side::right);
    }
    return {};
  }

  /// Smallest maximizing radius at any n (centered kind only).
  std::optional<std::int64_t> radius_at(std::int64_t n) const {
    if (kind_ != TransformKind::centered || is_zero()) return std::nullopt;
    if (n >= window_start() && n <= window_end()) return radius_[static_cast<std::size_t>(n - window_start())];
    return detail::centered_point(abs_, n).second;
  }

 private:
  TransformKind kind_;
  Sequence base_;
  Sequence abs_;
  std::vector<Rational> values_;
  std::vector<std::int64_t> radius_;
};

inline Rational transform_value_at(const MaximalTransform& t, std::int64_t n) { return t.value_at(n); }

inline MaximalTransform centered_transform(const Sequence& f) {
  if (f.is_zero()) return MaximalTransform(TransformKind::centered, f, {});
  const auto profile = detail::scaled_profile(f);
  std::vector<Rational> values;
  std::vector<std::int64_t> radii;
  if (profile.small) {
    std::vector<detail::Fraction<std::int64_t>> raw;
    detail::centered_kernel<std::int64_t, __int128>(profile.small_prefix, raw, radii);
    values = detail::convert<std::int64_t>(raw, profile.scale);
  } else {
    std::vector<detail::Fraction<mpz_class>> raw;
    detail::centered_kernel<mpz_class, mpz_class>(profile.prefix, raw, radii);
    values = detail::convert<mpz_class>(raw, profile.scale);
  }
  return MaximalTransform(TransformKind::centered, f, std::move(values), std::move(radii));
}

/// Oracle: every clipped window at every point, in plain rational arithmetic.
inline MaximalTransform noncentered_transform_naive(const Sequence& f) {
  std::vector<Rational> values;
  values.reserve(f.width());
  for (std::int64_t n = f.first_index(); !f.is_zero() && n <= f.last_index(); ++n) {
    values.push_back(noncentered_value_naive(f, n));
  }
  return MaximalTransform(TransformKind::noncentered, f, std::move(values));
}

inline MaximalTransform noncentered_transform_fast(const Sequence& f) {
  if (f.is_zero()) return MaximalTransform(TransformKind::noncentered, f, {});
  const auto profile = detail::scaled_profile(f);
  std::vector<Rational> values;
  if (profile.small) {
    values = detail::convert<std::int64_t>(
        detail::noncentered_kernel<std::int64_t, __int128>(profile.small_prefix), profile.scale);
  } else {
    values = detail::convert<mpz_class>(
        detail::noncentered_kernel<mpz_class, mpz_class>(profile.prefix), profile.scale);
  }
  return MaximalTransform(TransformKind::noncentered, f, std::move(values));
}

inline MaximalTransform noncentered_transform(const Sequence& f) { return noncentered_transform_fast(f); }

namespace detail {

inline std::vector<Rational> right_one_sided_values(const Sequence& f) {
  const auto profile = scaled_profile(f);
  if (profile.small) {
    return convert<std::int64_t>(right_one_sided_kernel<std::int64_t, __int128>(profile.small_prefix),
                                       profile.scale);
  }
  return convert<mpz_class>(right_one_sided_kernel<mpz_class, mpz_class>(profile.prefix), profile.scale);
}

}  // namespace detail

/// One-sided transform by a right-to-left hull sweep; the left operator is
/// the right one applied to the mirror image.
inline MaximalTransform one_sided_transform(const Sequence& f, Side side) {
  const auto kind = side == Side::left ? TransformKind::left : TransformKind::right;
  if (f.is_zero()) return MaximalTransform(kind, f, {});
  if (side == Side::right) return MaximalTransform(kind, f, detail::right_one_sided_values(f));
  auto values = detail::right_one_sided_values(reflect(f));
  std::reverse(values.begin(), values.end());
  return MaximalTransform(kind, f, std::move(values));
}

inline MaximalTransform compute_transform(const Sequence& f, TransformKind kind) {
  switch (kind) {
    case TransformKind::centered: return centered_transform(f);
    case TransformKind::noncentered: return noncentered_transform_fast(f);
    case TransformKind::left: return one_sided_transform(f, Side::left);
    case TransformKind::right: return one_sided_transform(f, Side::right);
  }
  throw std::invalid_argument("unknown transform kind");
}

/// Window values with two margin points on each side, ready for extrema_chain.
inline TabulatedFunction tabulate(const MaximalTransform& t, std::int64_t margin = 2) {
  TabulatedFunction g;
  g.law = TailLaw::monotone_to_zero;
  if (t.is_zero()) return g;
  g.start = t.window_start();
  g.values.assign(t.values().begin(), t.values().end());
  for (std::int64_t k = margin; k >= 1; --k) g.left_margin.push_back(t.value_at(g.start - k));
  for (std::int64_t k = 1; k <= margin; ++k) g.right_margin.push_back(t.value_at(t.window_end() + k));
  return g;
}

inline ExtremaChain extrema_chain(const MaximalTransform& t) { return extrema_chain(tabulate(t)); }
inline std::vector<std::int64_t> literal_maxima(const MaximalTransform& t) { return literal_maxima(tabulate(t)); }

/// Var(Tf) over all of Z: the monotone tails contribute T(a) and T(b).
/// Re-checks the tail law on two margin points per side first.
inline Rational total_variation_of_transform(const MaximalTransform& t) {
  if (t.is_zero()) return {};
  const auto g = tabulate(t);
  detail::check_tail_law(g);
  Rational acc = g.values.front() + g.values.back();
  for (std::size_t i = 0; i + 1 < g.values.size(); ++i) acc += (g.values[i + 1] - g.values[i]).abs();
  return acc;
}

}  // namespace dtm
