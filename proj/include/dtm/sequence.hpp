#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dtm/rational.hpp"

namespace dtm {

class SequenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// How a constructor treats zero values at either end of the stored block.
enum class Trim { strict, automatic };

/// Finitely supported function Z -> Q. Stored densely on its support [a, b];
/// the first and last stored values are nonzero. No stored values means the
/// zero sequence.
class Sequence {
 public:
  Sequence() = default;

  Sequence(std::int64_t offset, std::vector<Rational> values, Trim trim = Trim::strict)
      : offset_(offset), values_(std::move(values)) {
    if (trim == Trim::automatic) {
      auto first = std::find_if(values_.begin(), values_.end(),
                                [](const Rational& v) { return !v.is_zero(); });
      if (first == values_.end()) {
        values_.clear();
        offset_ = 0;
        return;
      }
      auto last = std::find_if(values_.rbegin(), values_.rend(),
                               [](const Rational& v) { return !v.is_zero(); });
      values_.erase(last.base(), values_.end());
      offset_ += first - values_.begin();
      values_.erase(values_.begin(), first);
    } else if (!values_.empty() && (values_.front().is_zero() || values_.back().is_zero())) {
      throw SequenceError("support not tight: first and last stored values must be nonzero");
    }
    if (values_.empty()) offset_ = 0;
  }

  /// Convenience for integer data.
  static Sequence from_integers(std::int64_t offset, const std::vector<std::int64_t>& values,
                                Trim trim = Trim::strict) {
    std::vector<Rational> v(values.begin(), values.end());
    return Sequence(offset, std::move(v), trim);
  }

  /// Unit impulse at index n.
  static Sequence delta(std::int64_t n = 0) { return Sequence(n, {Rational(1)}); }

  bool is_zero() const { return values_.empty(); }
  std::size_t width() const { return values_.size(); }
  std::int64_t offset() const { return offset_; }
  std::int64_t first_index() const { return offset_; }
  std::int64_t last_index() const { return offset_ + static_cast<std::int64_t>(values_.size()) - 1; }
  std::span<const Rational> values() const { return values_; }

  const Rational& operator[](std::int64_t n) const {
    static const Rational zero;
    if (values_.empty() || n < first_index() || n > last_index()) return zero;
    return values_[static_cast<std::size_t>(n - offset_)];
  }

  bool is_nonnegative() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v.sign() >= 0; });
  }

  friend bool operator==(const Sequence& a, const Sequence& b) {
    return a.offset_ == b.offset_ && a.values_ == b.values_;
  }

 private:
  std::int64_t offset_ = 0;
  std::vector<Rational> values_;
};

inline Sequence abs_of(const Sequence& f) {
  std::vector<Rational> v;
  v.reserve(f.width());
  for (const auto& x : f.values()) v.push_back(x.abs());
  return Sequence(f.offset(), std::move(v));
}

inline Sequence translate(const Sequence& f, std::int64_t shift) {
  if (f.is_zero()) return f;
  return Sequence(f.offset() + shift, {f.values().begin(), f.values().end()});
}

/// n -> f(-n).
inline Sequence reflect(const Sequence& f) {
  if (f.is_zero()) return f;
  std::vector<Rational> v(f.values().rbegin(), f.values().rend());
  return Sequence(-f.last_index(), std::move(v));
}

inline Sequence scale(const Sequence& f, const Rational& c) {
  if (c.is_zero()) return Sequence();
  std::vector<Rational> v;
  v.reserve(f.width());
  for (const auto& x : f.values()) v.push_back(x * c);
  return Sequence(f.offset(), std::move(v));
}

/// Exponent p of an l^p norm: a positive integer or infinity.
class LpExponent {
 public:
  explicit LpExponent(long p) : p_(p) {
    if (p <= 0) throw std::domain_error("l^p exponent must be a positive integer or infinity");
  }
  static LpExponent infinity() { return LpExponent(); }

  bool is_infinite() const { return p_ == 0; }
  /// Power convention of the result of lp_norm: 1 for p = 1 and p = infinity.
  unsigned long power() const { return is_infinite() ? 1 : static_cast<unsigned long>(p_); }
  bool is_exact_norm() const { return is_infinite() || p_ == 1; }
  std::string str() const { return is_infinite() ? std::string("inf") : std::to_string(p_); }

 private:
  LpExponent() = default;
  long p_ = 0;
};

/// An exact l^p quantity: `value` equals the norm raised to `power`.
/// For p in {1, inf} power is 1 and value is the norm itself; otherwise it is
/// the p-th power sum, since the norm may be irrational.
struct NormValue {
  Rational value;
  unsigned long power = 1;

  friend bool operator==(const NormValue&, const NormValue&) = default;
};

inline NormValue lp_norm(const Sequence& f, LpExponent p) {
  Rational acc;
  if (p.is_infinite()) {
    for (const auto& x : f.values()) acc = std::max(acc, x.abs());
    return {acc, 1};
  }
  const unsigned long k = p.power();
  for (const auto& x : f.values()) {
    mpq_class t = ::abs(x.raw());
    mpz_pow_ui(t.get_num_mpz_t(), t.get_num_mpz_t(), k);
    mpz_pow_ui(t.get_den_mpz_t(), t.get_den_mpz_t(), k);
    acc += Rational(t);
  }
  return {acc, k};
}

/// k-fold forward difference, f'(n) = f(n+1) - f(n).
inline Sequence derivative(const Sequence& f, unsigned k) {
  Sequence g = f;
  for (unsigned step = 0; step < k && !g.is_zero(); ++step) {
    std::vector<Rational> d;
    d.reserve(g.width() + 1);
    for (std::int64_t n = g.first_index() - 1; n <= g.last_index(); ++n) d.push_back(g[n + 1] - g[n]);
    g = Sequence(g.first_index() - 1, std::move(d), Trim::automatic);
  }
  return g;
}

/// Var(f) = sum over n of |f(n+1) - f(n)|.
inline Rational total_variation(const Sequence& f) {
  if (f.is_zero()) return {};
  Rational acc = f.values().front().abs() + f.values().back().abs();
  for (std::size_t i = 0; i + 1 < f.width(); ++i) acc += (f.values()[i + 1] - f.values()[i]).abs();
  return acc;
}

/// w^{k,p} norm: the l^p quantities of f, f', ..., f^(k). `total` is their
/// exact sum when p is 1 or infinity; otherwise only the p-th power sums of
/// each term are exact and `total` is absent.
struct WkpNorm {
  std::vector<NormValue> terms;
  std::optional<Rational> total;
};

inline WkpNorm wkp_norm(const Sequence& f, unsigned k, LpExponent p) {
  WkpNorm out;
  Sequence g = f;
  Rational sum;
  for (unsigned j = 0; j <= k; ++j) {
    out.terms.push_back(lp_norm(g, p));
    sum += out.terms.back().value;
    g = derivative(g, 1);
  }
  if (p.is_exact_norm()) out.total = sum;
  return out;
}

}  // namespace dtm
