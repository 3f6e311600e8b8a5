#include "tutte/rational.hpp"

#include <cmath>
#include <cctype>

#include "tutte/error.hpp"

namespace tutte {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::size_t hash_mpz(const mpz_class& z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 2);
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::PoleAt: return "PoleAt";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::NotSeriesParallel: return "NotSeriesParallel";
    case ErrorKind::UndefinedAtUnitLine: return "UndefinedAtUnitLine";
    case ErrorKind::DegenerateEffectiveWeight: return "DegenerateEffectiveWeight";
    case ErrorKind::IdenticallyDegenerate: return "IdenticallyDegenerate";
    case ErrorKind::NotTwoTerminalGraph: return "NotTwoTerminalGraph";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::WrongCase: return "WrongCase";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::ImmediateExhaustion: return "ImmediateExhaustion";
    case ErrorKind::AssertionFailure: return "AssertionFailure";
    case ErrorKind::NotInteriorPoint: return "NotInteriorPoint";
    case ErrorKind::UnsupportedRegion: return "UnsupportedRegion";
    case ErrorKind::NotStarredRegion: return "NotStarredRegion";
    case ErrorKind::NonPlanarPair: return "NonPlanarPair";
    case ErrorKind::PoleWindowEmpty: return "PoleWindowEmpty";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DegenerateRatio: return "DegenerateRatio";
  }
  return "Unknown";
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  const std::string original(text);
  if (s.empty()) fail(ErrorKind::ParseError, "empty rational");

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational out;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto p = s.substr(0, slash);
    const auto q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) fail(ErrorKind::ParseError, "malformed rational '" + original + "'");
    const Integer den(std::string(q), 10);
    if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + original + "'");
    out = Rational(Integer(std::string(p), 10), den);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    auto ip = s.substr(0, dot);
    auto fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) fail(ErrorKind::ParseError, "malformed decimal '" + original + "'");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      fail(ErrorKind::ParseError, "malformed decimal '" + original + "'");
    const std::string digits = std::string(ip) + std::string(fp);
    Integer den = 1;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    out = Rational(Integer(digits.empty() ? "0" : digits, 10), den);
  } else {
    if (!all_digits(s)) fail(ErrorKind::ParseError, "malformed rational '" + original + "'");
    out = Rational(Integer(std::string(s), 10));
  }
  return negative ? -out : out;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  return Rational(den(), num());
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_decimal(unsigned digits) const {
  Integer scale = 1;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Integer scaled = ::abs(v_.get_num()) * scale;
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), v_.get_den().get_mpz_t());
  std::string s = q.get_str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (sign() < 0) s.insert(0, "-");
  return s;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::size_t Rational::hash() const {
  return hash_mpz(v_.get_num()) * 31 + hash_mpz(v_.get_den());
}

Rational pow(const Rational& base, unsigned long exponent) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  mpq_class r;
  mpz_swap(mpq_numref(r.get_mpq_t()), n.get_mpz_t());
  mpz_swap(mpq_denref(r.get_mpq_t()), d.get_mpz_t());
  return Rational(r);
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

double log_abs(const Rational& x) {
  if (x.is_zero()) return -HUGE_VAL;
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, x.raw().get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, x.raw().get_den_mpz_t());
  return std::log(std::fabs(mn)) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

Integer ceil(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return r;
}

Integer floor(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return r;
}

}  // namespace tutte
