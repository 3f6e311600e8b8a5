#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace tutte {

using Integer = mpz_class;

/// Exact rational number in canonical form (reduced, positive denominator).
///
/// Thin value wrapper over GMP's mpq_class. The wrapper exists so that every
/// constructor and operator leaves the value canonical, and so that parsing
/// and rendering follow one convention across the library: "p/q" (or "p"
/// when the denominator is 1) and terminating decimals read exactly.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Accepts "p", "p/q", and terminating decimals such as "-1.25" or "0.1".
  static Rational parse(std::string_view text);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;

  /// "p/q", or "p" for integers.
  std::string to_string() const;
  /// Decimal rendering truncated toward zero after `digits` fractional digits.
  std::string to_decimal(unsigned digits) const;
  double to_double() const { return v_.get_d(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class v_;
};

Rational pow(const Rational& base, unsigned long exponent);
Rational midpoint(const Rational& a, const Rational& b);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Natural log of |x| as a double, safe for values far outside double range.
/// Heuristic use only; never part of an exact decision.
double log_abs(const Rational& x);

/// Smallest integer >= x.
Integer ceil(const Rational& x);
/// Largest integer <= x.
Integer floor(const Rational& x);

}  // namespace tutte

template <>
struct std::hash<tutte::Rational> {
  std::size_t operator()(const tutte::Rational& r) const noexcept { return r.hash(); }
};
