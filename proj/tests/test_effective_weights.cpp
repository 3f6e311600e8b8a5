#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "tutte/error.hpp"
#include "tutte/weights.hpp"

using namespace tutte;

namespace {

Rational R(const char* s) { return Rational::parse(s); }
GadgetTerm E(const Rational& w) { return GadgetTerm::edge(w); }

bool throws_kind(auto&& fn, ErrorKind k) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == k;
  }
  return false;
}

// v_F = q z_same / z_diff from brute-force subset enumeration of the realization.
RatFn weight_by_enumeration(const GadgetTerm& t, const Rational& v0) {
  const Realization r = realize(t, v0);
  const auto [same, diff] = oracle::split(r.graph, r.x, r.y);
  return RatFn(UniPoly::variable() * same, diff);
}

}  // namespace

TEST_CASE("effective_weight examples") {
  const Rational v(-3);
  const RatFn dip = effective_weight(GadgetTerm::parallel({E(v), E(v)}), v);
  CHECK(dip == RatFn(Rational(3)));
  const RatFn p4 = effective_weight(GadgetTerm::series_power(E(v), 4), v);
  CHECK(p4(Rational(-1)) == R("-81/175"));
  CHECK(p4 == weight_by_enumeration(GadgetTerm::series_power(E(v), 4), v));
  const RatFn j3 = effective_weight(GadgetTerm::series_power(E(Rational(-1)), 3), Rational(-1));
  CHECK(j3 == RatFn(UniPoly(Rational(-1)), UniPoly({Rational(3), Rational(-3), Rational(1)})));
  CHECK(throws_kind([] { effective_weight(GadgetTerm::series({E(Rational(0)), E(Rational(1))}), Rational(0)); },
                    ErrorKind::IdenticallyDegenerate));
}

TEST_CASE("classify_type examples") {
  const Rational v(-3);
  CHECK(classify_type(effective_weight(E(v), v), R("7/3")) == GadgetType::AMinus);
  CHECK(classify_type(effective_weight(GadgetTerm::parallel({E(v), E(v)}), v), Rational(5)) == GadgetType::APlus);
  CHECK(classify_type(effective_weight(GadgetTerm::series_power(E(v), 4), v), Rational(-1)) == GadgetType::BPlus);
  const RatFn r(UniPoly(Rational(1)), UniPoly({Rational(-2), Rational(1)}));
  CHECK(throws_kind([&] { classify_type(r, Rational(2)); }, ErrorKind::PoleAt));
  CHECK(type_of_one_plus(Rational(0)) == GadgetType::Boundary);
  CHECK(type_of_one_plus(Rational(-1)) == GadgetType::Boundary);
  CHECK(type_of_one_plus(R("-1/2")) == GadgetType::BMinus);
}

TEST_CASE("double_parallel") {
  for (auto [vf, expect] : {std::pair{R("-3"), R("3")}, {R("-3/2"), R("-3/4")}, {R("-1"), R("-1")}}) {
    const GadgetTerm t = double_parallel(E(vf));
    CHECK(weight_at(t, Rational(2), vf) == expect);
  }
}

TEST_CASE("check_lemma3") {
  const Rational v(-3);
  const Lemma3Check c = check_lemma3(GadgetTerm::series({E(v), E(v)}), v);
  CHECK(c.nonconstant);
  const RatFn y = effective_weight(GadgetTerm::series({E(v), E(v)}), v) + RatFn(1);
  for (int k : {1, 10, 100}) CHECK(y(c.q_threshold + k).sign() > 0);
  CHECK(throws_kind([&] { check_lemma3(GadgetTerm::parallel({E(v), E(v)}), v); }, ErrorKind::NotTwoTerminalGraph));
  const Lemma3Check pc = check_lemma3(petersen_minus_edge(), v);
  CHECK(pc.nonconstant);
  const RatFn yp = effective_weight(petersen_minus_edge(), v) + RatFn(1);
  for (int k : {1, 10, 100}) CHECK(yp(pc.q_threshold + k).sign() > 0);
}

TEST_CASE("property: closed forms for dipoles and paths") {
  std::mt19937_64 rng(41);
  for (unsigned k = 2; k <= 6; ++k)
    for (int i = 0; i < 20; ++i) {
      const Rational v = gen::nonzero_rational(rng);
      if (v == Rational(-1)) continue;
      CHECK(effective_weight(GadgetTerm::parallel_power(E(v), k), v) == dipole_weight(k, v));
      CHECK(dipole_weight(k, v) == weight_by_enumeration(GadgetTerm::parallel_power(E(v), k), v));
      try {
        const RatFn pw = path_weight(k, v);
        CHECK(effective_weight(GadgetTerm::series_power(E(v), k), v) == pw);
        CHECK(pw == weight_by_enumeration(GadgetTerm::series_power(E(v), k), v));
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IdenticallyDegenerate);
      }
    }
}

TEST_CASE("property: composition matches enumeration on random terms") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 60; ++i) {
    const Rational v = gen::nonzero_rational(rng);
    const GadgetTerm t = gen::sp_term(rng, 1 + static_cast<int>(rng() % 8), v);
    try {
      const RatFn w = effective_weight(t, v);
      CHECK(w == weight_by_enumeration(t, v));
      const SplitZ s = term_split(t, v);
      const Realization r = realize(t);
      const auto [same, diff] = oracle::split(r.graph, r.x, r.y);
      CHECK(s.z_same == same);
      CHECK(s.z_diff == diff);
      if (t.is_two_terminal_graph()) {
        const Lemma3Check c = check_lemma3(t, v);
        CHECK(c.nonconstant);
        const RatFn y = w + RatFn(1);
        for (int k : {1, 10, 100}) CHECK(y(c.q_threshold + k).sign() > 0);
      }
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::IdenticallyDegenerate);
    }
  }
}

TEST_CASE("property: series of dipoles plus an edge") {
  // 1 + q/v_G = (1 + q/v_F)^s (1 + q/v) for F the two-edge dipole.
  const RatFn q = RatFn::variable();
  std::mt19937_64 rng(43);
  for (unsigned s = 1; s <= 5; ++s) {
    const Rational v = gen::nonzero_rational(rng);
    if (v == Rational(-1) || v == Rational(-2)) continue;
    const GadgetTerm f = GadgetTerm::parallel({E(v), E(v)});
    std::vector<GadgetTerm> parts(s, f);
    parts.push_back(E(v));
    const RatFn vg = effective_weight(GadgetTerm::series(parts), v);
    const RatFn vf = effective_weight(f, v);
    CHECK(RatFn(1) + q / vg == pow(RatFn(1) + q / vf, s) * (RatFn(1) + q / RatFn(v)));
  }
}
