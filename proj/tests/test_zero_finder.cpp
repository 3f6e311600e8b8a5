#include <doctest.h>

#include <random>
#include <tuple>

#include "oracles.hpp"
#include "tutte/error.hpp"
#include "tutte/tutte.hpp"
#include "tutte/zeros.hpp"

using namespace tutte;

namespace {

Rational R(const char* s) { return Rational::parse(s); }
GadgetTerm E(const Rational& w) { return GadgetTerm::edge(w); }
const RatFn Q = RatFn::variable();

bool throws_kind(auto&& fn, ErrorKind k) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == k;
  }
  return false;
}

Rational h_at(const RatFn& a, const RatFn& b, const RatFn& c, const ExponentWitness& w, const Rational& q) {
  return pow(a(q), w.s) * pow(b(q), w.t) - c(q);
}

}  // namespace

TEST_CASE("find_st examples") {
  const ExponentWitness w = find_st(Q, RatFn(R("1/2")), RatFn(Rational(3)), Bracket(Rational(2), R("5/2")),
                                    Parity::Odd, Parity::Even);
  CHECK(w.s == 3);
  CHECK(w.t == 2);
  CHECK(h_at(Q, R("1/2"), Rational(3), w, w.bracket.lo()).sign() *
            h_at(Q, R("1/2"), Rational(3), w, w.bracket.hi()).sign() ==
        -1);

  CHECK(throws_kind([] { find_st(RatFn(Rational(4)), RatFn(R("1/2")), RatFn(Rational(3)), Bracket(Rational(2), Rational(3)),
                                 Parity::Any, Parity::Any); },
                    ErrorKind::DegenerateRatio));
  // b must lie in (0, 1) on the whole window.
  CHECK(throws_kind([] { find_st(Q, RatFn(Rational(2)), RatFn(Rational(3)), Bracket(Rational(2), Rational(3)), Parity::Any,
                                 Parity::Any); },
                    ErrorKind::PreconditionViolated));

  const RatFn a = Q, b = RatFn(Rational(2)) / Q, c = RatFn(Rational(4)) / Q;
  const ExponentWitness w2 = find_st(a, b, c, Bracket(R("5/2"), Rational(3)), Parity::Any, Parity::Any);
  // a b^2 = 4/q = c identically, so (1, 2) never changes sign.
  CHECK_FALSE((w2.s == 1 && w2.t == 2));
  CHECK(h_at(a, b, c, w2, w2.bracket.lo()).sign() * h_at(a, b, c, w2, w2.bracket.hi()).sign() == -1);
}

TEST_CASE("find_st property: random monomial targets") {
  std::mt19937 rng(7);
  for (int i = 0; i < 30; ++i) {
    const unsigned s = 1 + rng() % 6, t = 1 + rng() % 6;
    const Rational b(1 + rng() % 3, 5);
    // c chosen so that q^s b^t = c at q = 5/2 exactly inside [2, 3].
    const Rational c = pow(R("5/2"), s) * pow(b, t);
    const ExponentWitness w = find_st(Q, RatFn(b), RatFn(c), Bracket(Rational(2), Rational(3)), Parity::Any, Parity::Any);
    CHECK(w.s + w.t >= 2);
    CHECK(w.bracket.lo() >= Rational(2));
    CHECK(w.bracket.hi() <= Rational(3));
    CHECK(h_at(Q, b, c, w, w.bracket.lo()).sign() * h_at(Q, b, c, w, w.bracket.hi()).sign() == -1);
  }
}

TEST_CASE("assemble_f") {
  const ComplementaryPair p{E(Rational(-3)), GadgetTerm::series_power(E(Rational(-3)), 4), GadgetType::AMinus,
                            GadgetType::BPlus, true};
  const RatFn f = assemble_f(p, 1, 1, Rational(-3));
  CHECK(f(Rational(-1)) == R("-538/175"));
}

TEST_CASE("property: witness factorization q P_A^s P_B^t f = Z_G") {
  const std::vector<std::tuple<GadgetTerm, GadgetTerm, Rational>> pairs = {
      {E(Rational(-3)), GadgetTerm::series_power(E(Rational(-3)), 3), Rational(-3)},
      {double_parallel(E(R("-5/2"))), GadgetTerm::series_power(E(R("-5/2")), 2), R("-5/2")},
      {GadgetTerm::series({E(Rational(2)), GadgetTerm::parallel({E(Rational(2)), E(Rational(2))})}), E(Rational(2)),
       Rational(2)}};
  for (const auto& [a, b, v0] : pairs) {
    for (unsigned long s = 1; s <= 2; ++s)
      for (unsigned long t = 1; t <= 2; ++t) {
        ZeroCertificate c;
        c.a_term = a;
        c.b_term = b;
        c.s = s;
        c.t = t;
        c.v0 = v0;
        const Realization g = witness_graph(c);
        if (g.graph.edge_count() > 16) continue;
        const ComplementaryPair p{a, b, GadgetType::Boundary, GadgetType::Boundary, true};
        const RatFn f = assemble_f(p, s, t, v0);
        const SplitZ sa = term_split(a, v0), sb = term_split(b, v0);
        for (const Rational& q : {R("-3/2"), R("1/3"), R("5/2"), Rational(4)}) {
          const Rational pa = sa.z_diff(q) / (q * q), pb = sb.z_diff(q) / (q * q);
          CHECK(q * pow(pa, s) * pow(pb, t) * f(q) == oracle::z(g.graph, q));
        }
      }
  }
}

TEST_CASE("certificates in region I and the mirror region VI") {
  for (const auto& [qs, vs] : {std::pair{"-1", "-3"}, std::pair{"3", "-7/4"}}) {
    const Rational q0 = R(qs), v0 = R(vs), eps = R("1/10");
    const ZeroCertificate c = find_zero(q0, v0, eps);
    std::string diag;
    CHECK_MESSAGE(verify_certificate(c, true, &diag), diag);
    CHECK(c.bracket_lo < c.bracket_hi);
    CHECK(c.achieved_distance <= eps);
    CHECK(c.sign_lo * c.sign_hi == -1);
    CHECK_FALSE(c.dual);
    // Independent evaluation of Z at both endpoints.
    const Realization g = witness_graph(c);
    CHECK(z_del_con(g.graph, c.bracket_lo).sign() == c.sign_lo);
    CHECK(z_del_con(g.graph, c.bracket_hi).sign() == c.sign_hi);
  }
  const ZeroCertificate m = find_zero(Rational(3), R("-7/4"), R("1/10"));
  CHECK(m.a_type == GadgetType::APlus);
  CHECK(m.b_type == GadgetType::BMinus);
}

TEST_CASE("tampered certificates are rejected") {
  const ZeroCertificate c = find_zero(Rational(-1), Rational(-3), R("1/10"));
  ZeroCertificate swapped = c;
  std::swap(swapped.bracket_lo, swapped.bracket_hi);
  CHECK_FALSE(verify_certificate(swapped, false));
  ZeroCertificate bumped = c;
  bumped.s += 1;
  CHECK_FALSE(verify_certificate(bumped, false));
  ZeroCertificate flipped = c;
  flipped.sign_lo = -flipped.sign_lo;
  flipped.sign_hi = -flipped.sign_hi;
  std::string diag;
  CHECK_FALSE(verify_certificate(flipped, false, &diag));
  CHECK_FALSE(diag.empty());
}

TEST_CASE("certificate JSON round trip") {
  const ZeroCertificate c = find_zero(Rational(-1), Rational(-3), R("1/10"));
  const std::string text = certificate_to_json(c);
  const ZeroCertificate back = certificate_from_json(text);
  CHECK(certificate_to_json(back) == text);
  CHECK(verify_certificate(back, false));
  CHECK(throws_kind([] { certificate_from_json("{\"s\": 1"); }, ErrorKind::ParseError));
  CHECK(throws_kind([] { certificate_from_json("{}"); }, ErrorKind::ParseError));
}

TEST_CASE("dual certificates") {
  for (const auto& [qs, vs] : {std::pair{"-1", "1/4"}, std::pair{"7/2", "-3/2"}}) {
    const Rational q0 = R(qs), v0 = R(vs), eps = R("1/10");
    REQUIRE(is_starred(classify_region(q0, v0)));
    const ZeroCertificate c = find_zero(q0, v0, eps);
    CHECK(c.dual);
    std::string diag;
    CHECK_MESSAGE(verify_certificate(c, true, &diag), diag);
    CHECK(c.achieved_distance <= eps);
    // The certified graph is the dual; its Z changes sign along v = q / v0.
    const Multigraph lo = dual_witness_graph(c, c.bracket_lo / c.v0);
    const Multigraph hi = dual_witness_graph(c, c.bracket_hi / c.v0);
    CHECK(z_del_con(lo, c.bracket_lo).sign() * z_del_con(hi, c.bracket_hi).sign() == -1);
  }
  CHECK(throws_kind([] { find_zero_dual(Rational(-1), Rational(-3), R("1/10")); }, ErrorKind::NotStarredRegion));
}

TEST_CASE("working point leaves q = 1") {
  // The bracket may not contain 1, so the working point moves within the region.
  for (const auto& [qs, vs] : {std::pair{"1", "-15/8"}, std::pair{"1", "-11/20"}}) {
    const ZeroCertificate c = find_zero(R(qs), R(vs), R("1/20"));
    CHECK(c.working_q != Rational(1));
    CHECK(classify_region(c.working_q, R(vs)) == c.region);
    CHECK(verify_certificate(c, true));
    CHECK(c.achieved_distance <= R("1/20"));
  }
}

TEST_CASE("find_zero errors") {
  CHECK(throws_kind([] { find_zero(Rational(5), Rational(-6), R("1/10")); }, ErrorKind::UnsupportedRegion));
  CHECK(throws_kind([] { find_zero(Rational(-1), Rational(-3), Rational(0)); }, ErrorKind::InvalidArgument));
}
