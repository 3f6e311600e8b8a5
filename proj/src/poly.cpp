#include "tutte/poly.hpp"

#include <algorithm>
#include <sstream>

#include "tutte/error.hpp"

namespace tutte {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::size_t UniPoly::low_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return 0;
}

Rational UniPoly::operator()(const Rational& q) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= q;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * leading().inverse();
}

UniPoly UniPoly::taylor_shift(const Rational& shift) const {
  // Repeated synthetic division (Horner's scheme), O(n^2).
  std::vector<Rational> a = c_;
  const std::size_t n = a.size();
  if (shift.is_zero() || n <= 1) return *this;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += shift * a[j];
  return UniPoly(std::move(a));
}

UniPoly UniPoly::divide_by_q_power(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  for (std::size_t i = 0; i < k && i < c_.size(); ++i)
    if (!c_[i].is_zero()) fail(ErrorKind::InvalidArgument, "polynomial not divisible by q^" + std::to_string(k));
  if (k >= c_.size()) return {};
  return UniPoly(std::vector<Rational>(c_.begin() + static_cast<long>(k), c_.end()));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UniPoly operator-(const UniPoly& a) {
  UniPoly r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational a = c.abs();
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = a == Rational(1);
    if (k == 0 || !unit) os << a.to_string();
    if (k >= 1) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Rational inv_lead = bc.back().inverse();
  std::vector<Rational> q(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].is_zero()) continue;
    const Rational f = r[k] * inv_lead;
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * bc[j];
  }
  r.resize(db);
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.monic();
  UniPoly y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x;
}

UniPoly pow(const UniPoly& p, unsigned long exponent) {
  UniPoly result(Rational(1));
  UniPoly base = p;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1UL;
    if (exponent > 0) base = base * base;
  }
  return result;
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.degree() <= 0) return p;
  const UniPoly g = gcd(p, p.derivative());
  return divmod(p, g).first;
}

Rational cauchy_root_bound(const UniPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m;
  const Rational lead = p.leading().abs();
  for (int i = 0; i < p.degree(); ++i) m = max(m, p.coeffs()[static_cast<std::size_t>(i)].abs() / lead);
  return m + 1;
}

// ---------------------------------------------------------------- RatFn

RatFn::RatFn(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
  normalize();
}

void RatFn::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly(Rational(1));
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    const UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  const Rational lead = den_.leading();
  if (lead != Rational(1)) {
    const Rational inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RatFn::operator()(const Rational& q) const {
  const Rational d = den_(q);
  if (d.is_zero()) fail(ErrorKind::PoleAt, "pole at q = " + q.to_string());
  return num_(q) / d;
}

RatFn& RatFn::operator+=(const RatFn& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const RatFn& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFn& RatFn::operator/=(const RatFn& o) {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "rational function division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

std::string RatFn::to_string() const {
  if (den_ == UniPoly(Rational(1))) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFn pow(const RatFn& r, unsigned long exponent) {
  return RatFn(pow(r.num(), exponent), pow(r.den(), exponent));
}

// ---------------------------------------------------------------- Bracket / Interval

Bracket::Bracket(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) fail(ErrorKind::InvalidArgument, "bracket requires lo < hi");
}

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) fail(ErrorKind::InvalidArgument, "interval requires lo <= hi");
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo_ + b.lo_, a.hi_ + b.hi_}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo_ - b.hi_, a.hi_ - b.lo_}; }
Interval operator-(const Interval& a) { return {-a.hi_, -a.lo_}; }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.lo_ == a.hi_ && b.lo_ == b.hi_) return Interval(a.lo_ * b.lo_);
  const Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
  return {min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4))};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) fail(ErrorKind::PoleAt, "interval divisor contains zero");
  return a * Interval(b.hi_.inverse(), b.lo_.inverse());
}

Interval pow(const Interval& x, unsigned long exponent) {
  if (exponent == 0) return Interval(Rational(1));
  const Rational a = pow(x.lo(), exponent), b = pow(x.hi(), exponent);
  if (exponent % 2 == 1 || x.lo().sign() >= 0) return {min(a, b), max(a, b)};
  if (x.hi().sign() <= 0) return {min(a, b), max(a, b)};
  return {Rational(0), max(a, b)};
}

Interval enclose(const UniPoly& p, const Interval& x) {
  if (p.is_zero()) return Interval(Rational(0));
  if (x.lo() == x.hi()) return Interval(p(x.lo()));
  const Rational m = midpoint(x.lo(), x.hi());
  const Rational r = (x.hi() - x.lo()) / 2;
  const UniPoly shifted = p.taylor_shift(m);
  const auto& c = shifted.coeffs();
  Rational spread;
  Rational rk = r;
  for (std::size_t i = 1; i < c.size(); ++i) {
    spread += c[i].abs() * rk;
    rk *= r;
  }
  return {c[0] - spread, c[0] + spread};
}

// ---------------------------------------------------------------- Sturm

SturmChain::SturmChain(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorKind::InvalidArgument, "Sturm chain of the zero polynomial");
  chain_.push_back(square_free_part(p).monic());
  if (chain_.back().degree() <= 0) return;
  chain_.push_back(chain_.back().derivative());
  while (true) {
    UniPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    r = -r;
    r *= r.leading().abs().inverse();
    chain_.push_back(std::move(r));
  }
}

int SturmChain::variations(const Rational& x) const {
  int v = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmChain::count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

namespace {

/// Radius r such that [x - r, x + r] holds x as the only root of the chain's
/// base polynomial and both ends are non-roots. Requires base(x) == 0.
Rational isolate_exact_root(const SturmChain& s, const Rational& x, Rational r) {
  const UniPoly& p = s.base();
  while (true) {
    const Rational a = x - r, b = x + r;
    if (!p(a).is_zero() && !p(b).is_zero() && s.count(a, b) == 1) return r;
    r /= 2;
  }
}

Rational nonroot_split(const UniPoly& p, const Rational& lo, const Rational& hi) {
  Rational m = midpoint(lo, hi);
  Rational step = (hi - lo) / 8;
  for (int k = 0; p(m).is_zero(); ++k) {
    m = midpoint(lo, hi) + ((k % 2 == 0) ? step : -step);
    if (k % 2 == 1) step /= 2;
  }
  return m;
}

void bisect_isolate(const SturmChain& s, const Rational& lo, const Rational& hi, int n, std::vector<Bracket>& out) {
  if (n <= 0) return;
  if (n == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  const Rational m = nonroot_split(s.base(), lo, hi);
  const int left = s.count(lo, m);
  bisect_isolate(s, lo, m, left, out);
  bisect_isolate(s, m, hi, n - left, out);
}

}  // namespace

std::vector<Bracket> isolate_real_roots(const UniPoly& p, const Bracket& window) {
  const SturmChain s(p);
  const UniPoly& base = s.base();
  std::vector<Bracket> out;
  if (base.degree() <= 0) return out;

  Rational lo = window.lo(), hi = window.hi();
  std::optional<Bracket> at_lo, at_hi;
  const Rational span = hi - lo;
  if (base(lo).is_zero()) {
    const Rational r = isolate_exact_root(s, lo, span / 4);
    at_lo.emplace(lo - r, lo + r);
    lo += r;
  }
  if (base(hi).is_zero()) {
    const Rational r = isolate_exact_root(s, hi, span / 4);
    at_hi.emplace(hi - r, hi + r);
    hi -= r;
  }
  if (at_lo) out.push_back(*at_lo);
  bisect_isolate(s, lo, hi, s.count(lo, hi), out);
  if (at_hi) out.push_back(*at_hi);
  return out;
}

Bracket refine_bracket(const UniPoly& p, const Bracket& b, const Rational& width) {
  if (width.sign() <= 0) fail(ErrorKind::InvalidArgument, "refine width must be positive");
  Rational lo = b.lo(), hi = b.hi();
  int slo = p(lo).sign();
  const int shi = p(hi).sign();
  if (slo == 0 || shi == 0) {
    const Rational r = slo == 0 ? lo : hi;
    const Rational h = width / 2;
    if (p(r - h).sign() * p(r + h).sign() < 0) return Bracket(r - h, r + h);
    fail(ErrorKind::NoSignChange, "root on bracket endpoint without sign change");
  }
  if (slo == shi) fail(ErrorKind::NoSignChange, "equal signs at bracket endpoints");
  while (hi - lo > width) {
    const Rational m = midpoint(lo, hi);
    const int sm = p(m).sign();
    if (sm == 0) {
      const Rational h = min(width / 2, (hi - lo) / 4);
      return Bracket(m - h, m + h);
    }
    if (sm == slo) {
      lo = m;
    } else {
      hi = m;
    }
  }
  return Bracket(lo, hi);
}

namespace {

// Exact Taylor-bound exclusion on a few subintervals; false means "unknown".
bool enclosure_excludes_zero(const UniPoly& p, const Rational& lo, const Rational& hi, int depth) {
  const Interval e = enclose(p, Interval(lo, hi));
  if (!e.contains_zero()) return true;
  if (depth == 0) return false;
  const Rational m = midpoint(lo, hi);
  return enclosure_excludes_zero(p, lo, m, depth - 1) && enclosure_excludes_zero(p, m, hi, depth - 1);
}

}  // namespace

bool root_free(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  if (p(lo).is_zero() || p(hi).is_zero()) return false;
  if (lo == hi) return true;
  // Sturm chains of high-degree leaf polynomials are costly; on the narrow
  // windows used by the zero finder an enclosure usually settles it.
  const int s0 = p(lo).sign();
  if (p(hi).sign() != s0) return false;
  for (int k = 1; k < 8; ++k)
    if (p(lo + (hi - lo) * Rational(k, 8)).sign() != s0) return false;
  if (enclosure_excludes_zero(p, lo, hi, 3)) return true;
  return SturmChain(p).count(lo, hi) == 0;
}

}  // namespace tutte
