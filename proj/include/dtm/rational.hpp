#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dtm {

/// Thrown when text cannot be read as an exact rational.
class RationalFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arbitrary-precision signed rational, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : q_(static_cast<long>(value)) {}  // NOLINT(implicit)
  Rational(const mpz_class& value) : q_(value) {}                  // NOLINT(implicit)
  explicit Rational(const mpq_class& value) : q_(value) { q_.canonicalize(); }

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rational(std::int64_t num, std::int64_t den)
      : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

  /// Accepts `[-]digits` or `[-]digits/digits`; the denominator must be
  /// nonzero. Non-reduced input is normalized.
  static Rational parse(std::string_view text) {
    if (text.empty()) throw RationalFormatError("empty rational");
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text, true)) {
      throw RationalFormatError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class num(std::string(num_text), 10);
    if (slash == std::string_view::npos) return Rational(num);
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text, false)) {
      throw RationalFormatError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw RationalFormatError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  double approx() const { return q_.get_d(); }

  /// Lowest-terms rendering: `p` when the denominator is 1, else `p/q`.
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  static bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  }

  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

}  // namespace dtm
