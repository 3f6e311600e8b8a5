#include "tutte/regions.hpp"

#include <array>

#include "tutte/error.hpp"

namespace tutte {

namespace {

constexpr std::array<Region, 15> kInterior = {
    Region::I,     Region::II,     Region::III,     Region::IV,    Region::V,
    Region::VI,    Region::VII,    Region::VIII,    Region::IX,    Region::IStar,
    Region::IIStar, Region::IIIStar, Region::VStar, Region::VIIIStar, Region::IXStar,
};

// a < b, or a <= b when closed.
bool lt(const Rational& a, const Rational& b, bool closed) { return closed ? a <= b : a < b; }

bool member(Region r, const Rational& q, const Rational& v, bool closed) {
  const Rational zero(0), one(1), two(2), four(4), m1(-1), m2(-2);
  const Rational half_q = -q / 2;  // -q/2
  const Rational e = branch_end();
  auto in_q = [&](const Rational& a, const Rational& b) { return lt(a, q, closed) && lt(q, b, closed); };
  switch (r) {
    case Region::I: return lt(q, zero, closed) && lt(v, m2, closed);
    case Region::II: return in_q(zero, one) && lt(v, m2, closed);
    case Region::III: return in_q(one, two) && lt(v, m2, closed);
    case Region::IV: return in_q(two, four) && (closed || q != Rational(3)) && lt(v, -q, closed);
    case Region::V: return lt(two, q, closed) && lt(-q, v, closed) && lt(v, m2, closed);
    case Region::VI: return in_q(two, four) && lt(m2, v, closed) && lt(v, half_q, closed);
    case Region::VII: return lt(two, q, closed) && lt(m1, v, closed) && lt(v, zero, closed);
    case Region::VIII: {
      if (!(in_q(zero, e) && lt(m2, v, closed))) return false;
      const int c = compare_v_minus(q, v);
      return closed ? c <= 0 : c < 0;
    }
    case Region::IX: return in_q(e, two) && lt(m2, v, closed) && lt(v, m1, closed);
    case Region::IStar: return lt(q, zero, closed) && lt(zero, v, closed) && lt(v, half_q, closed);
    case Region::IIStar: return in_q(zero, one) && lt(half_q, v, closed) && lt(v, zero, closed);
    case Region::IIIStar: return in_q(one, two) && lt(half_q, v, closed) && lt(v, zero, closed);
    case Region::VStar: return lt(m2, v, closed) && lt(v, m1, closed) && lt(-(v * 2), q, closed);
    case Region::VIIIStar: {
      if (!(in_q(zero, e) && lt(v, half_q, closed))) return false;
      if (v.sign() >= 0) return false;
      const int c = compare_v_plus(q, v);
      return closed ? c >= 0 : c > 0;
    }
    case Region::IXStar: return in_q(e, two) && lt(m1, v, closed) && lt(v, half_q, closed);
    default: return false;
  }
}

}  // namespace

std::string_view to_string(Region r) {
  switch (r) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    case Region::IV: return "IV";
    case Region::V: return "V";
    case Region::VI: return "VI";
    case Region::VII: return "VII";
    case Region::VIII: return "VIII";
    case Region::IX: return "IX";
    case Region::IStar: return "I*";
    case Region::IIStar: return "II*";
    case Region::IIIStar: return "III*";
    case Region::VStar: return "V*";
    case Region::VIIIStar: return "VIII*";
    case Region::IXStar: return "IX*";
    case Region::Boundary: return "Boundary";
    case Region::Unsupported: return "Unsupported";
    case Region::NonNegativeV: return "NonNegativeV";
    case Region::Uncovered: return "Uncovered";
  }
  return "?";
}

std::optional<Region> region_from_string(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(Region::Uncovered); ++i)
    if (to_string(static_cast<Region>(i)) == s) return static_cast<Region>(i);
  return std::nullopt;
}

bool is_interior(Region r) { return static_cast<int>(r) <= static_cast<int>(Region::IXStar); }

bool is_starred(Region r) {
  return static_cast<int>(r) >= static_cast<int>(Region::IStar) && static_cast<int>(r) <= static_cast<int>(Region::IXStar);
}

Region primal_of(Region r) {
  switch (r) {
    case Region::IStar: return Region::I;
    case Region::IIStar: return Region::II;
    case Region::IIIStar: return Region::III;
    case Region::VStar: return Region::V;
    case Region::VIIIStar: return Region::VIII;
    case Region::IXStar: return Region::IX;
    default: return r;
  }
}

Rational branch_end() { return Rational(32, 27); }

DiamondBranches v_diamond(const Rational& q, const Rational& width) {
  if (!(q.sign() > 0 && q < branch_end())) fail(ErrorKind::OutOfDomain, "curve branches need 0 < q < 32/27, got " + q.to_string());
  if (width.sign() <= 0) fail(ErrorKind::InvalidArgument, "width must be positive");
  // v^3 - 2 q v - q^2
  const UniPoly curve({-(q * q), -(q * 2), Rational(0), Rational(1)});
  const Rational bound = cauchy_root_bound(curve);
  const auto roots = isolate_real_roots(curve, Bracket(-bound, bound));
  if (roots.size() != 3) fail(ErrorKind::AssertionFailure, "expected three real roots of the curve at q = " + q.to_string());
  Bracket plus = refine_bracket(curve, roots[1], width);
  // v^3 + 2 v^2 - q on (-2, -4/3).
  const UniPoly minus_poly({-q, Rational(0), Rational(2), Rational(1)});
  Bracket minus = refine_bracket(minus_poly, Bracket(Rational(-2), Rational(-4, 3)), width);
  return {plus, minus, width};
}

int compare_v_minus(const Rational& q, const Rational& v) {
  // v^2 (v + 2) is increasing on [-2, -4/3] from 0 to 32/27; v- is where it meets q.
  if (v <= Rational(-2)) return v == Rational(-2) && q.is_zero() ? 0 : -1;
  if (v > Rational(-4, 3)) return 1;
  const Rational g = v * v * (v + 2);
  return g < q ? -1 : (g == q ? 0 : 1);
}

int compare_v_plus(const Rational& q, const Rational& v) {
  if (v.sign() >= 0) fail(ErrorKind::InvalidArgument, "compare_v_plus needs v < 0");
  // v+ = q / v-, so with u = q/v < 0: v > v+ <=> u < v-.
  return -compare_v_minus(q, q / v);
}

bool in_region(Region r, const Rational& q, const Rational& v) { return member(r, q, v, false); }
bool in_closure(Region r, const Rational& q, const Rational& v) { return member(r, q, v, true); }

Region classify_region(const Rational& q, const Rational& v) {
  for (Region r : kInterior)
    if (in_region(r, q, v)) return r;
  if (q > Rational(4) && v < -q) return Region::Unsupported;
  for (Region r : kInterior)
    if (in_closure(r, q, v)) return Region::Boundary;
  if (v.sign() >= 0) return Region::NonNegativeV;
  return Region::Uncovered;
}

std::pair<Rational, Rational> dual_point(const Rational& q, const Rational& v) {
  if (v.is_zero()) fail(ErrorKind::DivisionByZero, "dual point undefined at v = 0");
  return {q, q / v};
}

}  // namespace tutte
