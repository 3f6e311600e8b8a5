#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tutte/rational.hpp"

namespace tutte {

/// Univariate polynomial in q with rational coefficients; coeffs()[i] is the
/// coefficient of q^i. The zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static UniPoly variable() { return UniPoly({Rational(0), Rational(1)}); }
  static UniPoly monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  std::size_t low_degree() const;

  Rational operator()(const Rational& q) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  /// p(q + shift).
  UniPoly taylor_shift(const Rational& shift) const;
  /// p(q) / q^k; requires the k lowest coefficients to vanish.
  UniPoly divide_by_q_power(std::size_t k) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& p, unsigned long exponent);
/// p / gcd(p, p').
UniPoly square_free_part(const UniPoly& p);
/// Bound B with every real root of p in (-B, B).
Rational cauchy_root_bound(const UniPoly& p);

/// Rational function num/den in lowest terms with a monic denominator.
class RatFn {
 public:
  RatFn() : num_(), den_(Rational(1)) {}
  RatFn(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFn(const UniPoly& p) : num_(p), den_(Rational(1)) {}   // NOLINT(google-explicit-constructor)
  RatFn(UniPoly num, UniPoly den);

  static RatFn variable() { return RatFn(UniPoly::variable()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  /// Throws PoleAt when den(q) = 0.
  Rational operator()(const Rational& q) const;

  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  RatFn& operator*=(const RatFn& o);
  RatFn& operator/=(const RatFn& o);

  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }
  friend RatFn operator-(const RatFn& a) { return RatFn(-a.num_, a.den_); }
  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string() const;

 private:
  void normalize();
  UniPoly num_;
  UniPoly den_;
};

RatFn pow(const RatFn& r, unsigned long exponent);

/// Open-interval bracket with rational endpoints, lo < hi.
class Bracket {
 public:
  Bracket(Rational lo, Rational hi);
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return midpoint(lo_, hi_); }
  bool contains(const Rational& x) const { return lo_ < x && x < hi_; }
  friend bool operator==(const Bracket&, const Bracket&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

/// Closed interval [lo, hi] with exact rational endpoints, lo <= hi. Used for
/// certified enclosures: every operation returns a superset of the true range.
class Interval {
 public:
  Interval(const Rational& point) : lo_(point), hi_(point) {}  // NOLINT(google-explicit-constructor)
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  /// Strictly inside (a, b).
  bool within(const Rational& a, const Rational& b) const { return a < lo_ && hi_ < b; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws PoleAt when the divisor contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);
  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

Interval pow(const Interval& x, unsigned long exponent);

/// Centered-form enclosure of p over x.
Interval enclose(const UniPoly& p, const Interval& x);

/// Sturm chain of the square-free part of p.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p);
  const UniPoly& base() const { return chain_.front(); }
  int variations(const Rational& x) const;
  /// Distinct real roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const;

 private:
  std::vector<UniPoly> chain_;
};

/// Isolating brackets, ascending, one per distinct real root of p in the closed
/// window. p(lo) and p(hi) are nonzero for each bracket. A root sitting exactly
/// on a window endpoint gets a bracket that may reach slightly past it.
std::vector<Bracket> isolate_real_roots(const UniPoly& p, const Bracket& window);

/// Bisects a sign-change bracket of p down to width <= `width`.
Bracket refine_bracket(const UniPoly& p, const Bracket& b, const Rational& width);

/// True when p has no real root in the closed interval [lo, hi].
bool root_free(const UniPoly& p, const Rational& lo, const Rational& hi);

}  // namespace tutte
