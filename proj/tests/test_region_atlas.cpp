#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "tutte/error.hpp"
#include "tutte/regions.hpp"

using namespace tutte;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

bool throws_kind(auto&& fn, ErrorKind k) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == k;
  }
  return false;
}

const std::vector<Region> kInteriorList = {Region::I,     Region::II,     Region::III,      Region::IV,    Region::V,
                                           Region::VI,    Region::VII,    Region::VIII,     Region::IX,    Region::IStar,
                                           Region::IIStar, Region::IIIStar, Region::VStar, Region::VIIIStar, Region::IXStar};

}  // namespace

TEST_CASE("classify_region examples") {
  CHECK(classify_region(Rational(-1), Rational(-3)) == Region::I);
  CHECK(classify_region(R("1/2"), R("-39/20")) == Region::VIII);
  CHECK(classify_region(Rational(5), Rational(-6)) == Region::Unsupported);
  CHECK(classify_region(Rational(-1), R("1/4")) == Region::IStar);
  CHECK(classify_region(R("7/2"), R("-3/2")) == Region::VStar);
  CHECK(classify_region(R("3/2"), R("-3/5")) != Region::IXStar);
  CHECK(classify_region(Rational(3), Rational(-4)) == Region::Boundary);  // q = 3 excluded from IV
  CHECK(classify_region(Rational(1), Rational(-3)) == Region::Boundary);
  CHECK(classify_region(Rational(2), Rational(1)) == Region::NonNegativeV);
  CHECK(classify_region(R("11/10"), Rational(-1)) == Region::Uncovered);
  CHECK(classify_region(R("13/10"), Rational(-1)) == Region::Boundary);
  CHECK(classify_region(branch_end(), R("-3/2")) == Region::Boundary);
}

TEST_CASE("v_diamond") {
  const DiamondBranches d = v_diamond(Rational(1), Rational(1, 1000000000));
  CHECK(d.v_plus.width() <= Rational(1, 1000000000));
  CHECK(d.v_minus.width() <= Rational(1, 1000000000));
  // -(1 + sqrt 5)/2 is a root of x^2 + x - 1, (1 - sqrt 5)/2 of x^2 - x - 1.
  auto g1 = [](const Rational& x) { return x * x + x - 1; };
  auto g2 = [](const Rational& x) { return x * x - x - 1; };
  CHECK(g2(d.v_plus.lo()).sign() * g2(d.v_plus.hi()).sign() < 0);
  CHECK(d.v_plus.hi() < Rational(0));
  CHECK(g1(d.v_minus.lo()).sign() * g1(d.v_minus.hi()).sign() < 0);
  CHECK(d.v_minus.lo() < Rational(-1));

  const DiamondBranches h = v_diamond(R("1/2"), Rational(1, 1000));
  CHECK(h.v_minus.lo().to_double() == doctest::Approx(-1.8548).epsilon(0.0001));
  CHECK(throws_kind([] { v_diamond(branch_end(), Rational(1, 100)); }, ErrorKind::OutOfDomain));
  CHECK(throws_kind([] { v_diamond(Rational(0), Rational(1, 100)); }, ErrorKind::OutOfDomain));
}

TEST_CASE("property: branch brackets stay in their ranges and agree with the cubic test") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 50; ++i) {
    const Rational q = branch_end() * Rational(1 + static_cast<int>(rng() % 998), 1000);
    const DiamondBranches d = v_diamond(q, Rational(1, 1000000));
    CHECK(d.v_minus.lo() > Rational(-2));
    CHECK(d.v_minus.hi() < R("-4/3"));
    CHECK(d.v_plus.lo() > R("-8/9"));
    CHECK(d.v_plus.hi() < Rational(0));
    // v^2 (v + 2) - q changes sign across the v- bracket.
    auto g = [&](const Rational& v) { return v * v * (v + 2) - q; };
    CHECK(g(d.v_minus.lo()).sign() * g(d.v_minus.hi()).sign() < 0);
    CHECK(compare_v_minus(q, d.v_minus.lo()) < 0);
    CHECK(compare_v_minus(q, d.v_minus.hi()) > 0);
    CHECK(compare_v_plus(q, d.v_plus.lo()) < 0);
    CHECK(compare_v_plus(q, d.v_plus.hi()) > 0);
  }
}

TEST_CASE("property: classification is a partition") {
  for (int i = 0; i <= 200; ++i)
    for (int j = 0; j <= 200; j += 4) {
      const Rational q = Rational(-3) + Rational(9 * i, 200), v = Rational(-8) + Rational(10 * j, 200);
      int hits = 0;
      for (Region r : kInteriorList) hits += in_region(r, q, v);
      const Region c = classify_region(q, v);
      CHECK(hits <= 1);
      if (hits == 1) CHECK(is_interior(c));
      if (c == Region::Boundary) {
        bool closure = false;
        for (Region r : kInteriorList) closure = closure || in_closure(r, q, v);
        CHECK(closure);
      }
    }
}

TEST_CASE("property: starred regions map into their primal regions") {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<int> qd(-3000, 6000), vd(-3000, 3000);
  int found = 0;
  while (found < 600) {
    const Rational q(qd(rng), 1000), v(vd(rng), 1000);
    const Region r = classify_region(q, v);
    if (!is_starred(r) || v.is_zero()) continue;
    ++found;
    const auto [q2, v2] = dual_point(q, v);
    CHECK(q2 == q);
    CHECK(classify_region(q2, v2) == primal_of(r));
  }
  CHECK(throws_kind([] { dual_point(Rational(1), Rational(0)); }, ErrorKind::DivisionByZero));
}

TEST_CASE("region names") {
  CHECK(to_string(Region::VIIIStar) == "VIII*");
  CHECK(region_from_string("IX*") == Region::IXStar);
  CHECK_FALSE(region_from_string("X").has_value());
}
