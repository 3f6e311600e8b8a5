#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "tutte/error.hpp"
#include "tutte/gadgets.hpp"
#include "tutte/regions.hpp"

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

// Interior sample points per region used across tests.
const std::vector<std::pair<const char*, const char*>> kPlanarPoints = {
    {"-1", "-3"}, {"-1/2", "-5/2"}, {"1/2", "-5/2"}, {"3/4", "-3"},  {"3/2", "-5/2"}, {"7/4", "-3"},
    {"3", "-5/2"}, {"5", "-3"},     {"1/2", "-39/20"}, {"1", "-19/10"}, {"3/2", "-3/2"}, {"7/4", "-5/4"}};

}  // namespace

TEST_CASE("path_gadget") {
  const GadgetTerm t = path_gadget(Rational(-1), Rational(-3), GadgetType::BPlus);
  // The increasing scan stops at the first s with type B+; P_3 already qualifies.
  CHECK(t == GadgetTerm::series_power(E(Rational(-3)), 3));
  CHECK(weight_at(t, Rational(-1), Rational(-3)) == R("-27/37"));
  const GadgetTerm p4 = GadgetTerm::series_power(E(Rational(-3)), 4);
  CHECK(weight_at(p4, Rational(-1), Rational(-3)) == R("-81/175"));
  CHECK(classify_term(p4, Rational(-1), Rational(-3)) == GadgetType::BPlus);
  const GadgetTerm p2 = GadgetTerm::series_power(E(Rational(-3)), 2);
  CHECK(weight_at(p2, Rational(-1), Rational(-3)) == R("-9/7"));
  CHECK(classify_term(p2, Rational(-1), Rational(-3)) == GadgetType::BMinus);

  const GadgetTerm a = path_gadget(Rational(3), Rational(-1), GadgetType::APlus);
  CHECK(a.children().size() % 2 == 0);
  CHECK(weight_at(a, Rational(3), Rational(-1)) == Rational(1));
  CHECK(throws_kind([] { path_gadget(Rational(3), Rational(-1), GadgetType::BPlus); }, ErrorKind::WrongCase));
  SearchBudget tiny;
  tiny.max_path_length = 2;
  CHECK((throws_kind([&] { path_gadget(R("3/2"), Rational(-3), GadgetType::BMinus, tiny); }, ErrorKind::SearchExhausted) ||
         classify_term(path_gadget(R("3/2"), Rational(-3), GadgetType::BMinus, tiny), R("3/2"), Rational(-3)) ==
             GadgetType::BMinus));
}

TEST_CASE("series_dipole_bplus") {
  const Rational q(3), v = R("-5/2");
  CHECK(weight_at(double_parallel(E(v)), q, v) == R("5/4"));
  const GadgetTerm g = series_dipole_bplus(q, v);
  CHECK(classify_term(g, q, v) == GadgetType::BPlus);
  CHECK(throws_kind([] { series_dipole_bplus(Rational(3), Rational(-1)); }, ErrorKind::WrongCase));
}

TEST_CASE("petersen_bplus") {
  const GadgetTerm f = petersen_minus_edge();
  const Rational vf = weight_at(f, R("5/2"), Rational(-3));
  CHECK(vf > R("-5/2"));
  CHECK(vf < Rational(0));
  CHECK(classify_term(petersen_bplus(R("5/2"), Rational(-3)), R("5/2"), Rational(-3)) == GadgetType::BPlus);
  CHECK(throws_kind([] { petersen_bplus(Rational(3), Rational(-4)); }, ErrorKind::WrongCase));
  // Further from the line v = -q the plain leaf overshoots; subdivided edges bring it back.
  CHECK(weight_at(f, R("5/2"), Rational(-4)) > Rational(0));
  const GadgetTerm leaf = petersen_leaf(R("5/2"), Rational(-4));
  CHECK(leaf.to_string() == "PetersenMinusEdge(2)");
  CHECK(leaf.edge_count() == 28);
  const Rational w = weight_at(leaf, R("5/2"), Rational(-4));
  CHECK(w > R("-5/2"));
  CHECK(w < Rational(0));
  CHECK(classify_term(petersen_bplus(R("5/2"), Rational(-4)), R("5/2"), Rational(-4)) == GadgetType::BPlus);
  CHECK(GadgetTerm::parse("PetersenMinusEdge(2)") == leaf);
  CHECK(throws_kind([] { petersen_bplus(R("5/2"), Rational(-2)); }, ErrorKind::WrongCase));
}

TEST_CASE("leaf case analysis: every branch yields B+") {
  // A single edge of weight w stands in for a leaf whose effective weight is w.
  const Rational q = R("5/2");
  const std::vector<std::pair<Rational, LeafBranch>> cases = {
      {R("-1/2"), LeafBranch::Direct},     {R("-9/4"), LeafBranch::SeriesDipole}, {R("-3/2"), LeafBranch::DoubleParallel},
      {Rational(-1), LeafBranch::ThreeSeries}, {Rational(-2), LeafBranch::OddSeries}};
  for (const auto& [w, branch] : cases) {
    CHECK(leaf_branch(q, w) == branch);
    const GadgetTerm t = bplus_from_leaf(q, E(w), w);
    CHECK(classify_term(t, q, w) == GadgetType::BPlus);
  }
  CHECK(throws_kind([&] { leaf_branch(q, Rational(-3)); }, ErrorKind::AssertionFailure));
  CHECK(throws_kind([&] { leaf_branch(q, Rational(1)); }, ErrorKind::AssertionFailure));
}

TEST_CASE("leaf case analysis across a grid") {
  // Each branch appears and is re-verified on a grid of q in (2, 4), q != 3.
  std::set<LeafBranch> seen;
  for (int i = 1; i < 20; ++i) {
    const Rational q = Rational(2) + Rational(i, 10);
    if (q == Rational(3)) continue;
    for (const Rational& w : {R("-1/3"), -q + R("1/10"), R("-7/5"), Rational(-1), Rational(-2)}) {
      const LeafBranch b = leaf_branch(q, w);
      seen.insert(b);
      CHECK(classify_term(bplus_from_leaf(q, E(w), w), q, w) == GadgetType::BPlus);
    }
  }
  CHECK(seen.size() == 5);
}

TEST_CASE("sp_search") {
  const Rational q = R("1/2"), v = R("-39/20");
  const GadgetTerm h = double_parallel(E(v));
  CHECK(weight_at(h, q, v) == R("-39/400"));
  const GadgetTerm a = sp_search(q, v, {GadgetType::APlus}, {h});
  CHECK(classify_term(a, q, v) == GadgetType::APlus);
  CHECK_FALSE(a.is_dipole());
  const GadgetTerm a9 = sp_search(R("3/2"), R("-3/2"), {GadgetType::APlus}, {});
  CHECK(classify_term(a9, R("3/2"), R("-3/2")) == GadgetType::APlus);
  CHECK(a9.is_planar());
  CHECK(a9.is_series_parallel());
  CHECK(throws_kind([] { sp_search(Rational(2), Rational(-1), {}, {}); }, ErrorKind::ImmediateExhaustion));
  // Deterministic.
  CHECK(sp_search(q, v, {GadgetType::APlus}, {h}) == a);
}

TEST_CASE("kn_gadget_search") {
  const Rational q = R("5/2"), v = R("-9/10");
  try {
    const GadgetTerm t = kn_gadget_search(q, v);
    const GadgetType ty = classify_term(t, q, v);
    CHECK((ty == GadgetType::AMinus || ty == GadgetType::BMinus));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SearchExhausted);
  }
  CHECK(throws_kind([] { kn_gadget_search(Rational(3), R("1/2")); }, ErrorKind::WrongCase));
  // No leaf with 1 + v < 0 here: the search reports exhaustion at once.
  CHECK(throws_kind([] { kn_gadget_search(Rational(3), R("-1/2")); }, ErrorKind::SearchExhausted));
}

TEST_CASE("complementary_pair per region") {
  const ComplementaryPair p1 = complementary_pair(Rational(-1), Rational(-3));
  CHECK(p1.a == E(Rational(-3)));
  CHECK(p1.a_type == GadgetType::AMinus);
  CHECK(p1.b_type == GadgetType::BPlus);
  CHECK(p1.planar);
  const ComplementaryPair p4 = complementary_pair(R("5/2"), Rational(-3));
  CHECK_FALSE(p4.planar);
  CHECK(p4.b_type == GadgetType::BPlus);
  CHECK(throws_kind([] { complementary_pair(Rational(5), Rational(-6)); }, ErrorKind::NotInteriorPoint));
  CHECK(throws_kind([] { complementary_pair(Rational(1), Rational(-3)); }, ErrorKind::NotInteriorPoint));
  // VI exercises the mirror types (A+, B-).
  const ComplementaryPair p6 = complementary_pair(Rational(3), R("-7/4"));
  CHECK(p6.a_type == GadgetType::APlus);
  CHECK(p6.b_type == GadgetType::BMinus);
}

TEST_CASE("property: pairs are complementary, planar where required, and open in q") {
  for (const auto& [qs, vs] : kPlanarPoints) {
    const Rational q = R(qs), v = R(vs);
    const Region r = classify_region(q, v);
    REQUIRE(is_interior(r));
    const ComplementaryPair p = complementary_pair(q, v);
    CHECK_NOTHROW(check_complementary(p, q, v));
    CHECK(p.planar);
    // Persistence: the nearest root or pole of 1 + v_F and 1 + v_F -+ 1 is
    // at positive distance; the types hold halfway there.
    Rational delta(1);
    for (const GadgetTerm& t : {p.a, p.b}) {
      const RatFn y = effective_weight(t, v) + RatFn(1);
      for (const RatFn& g : {y, y - RatFn(1), y + RatFn(1)})
        for (const UniPoly& poly : {g.num(), g.den()}) {
          if (poly.is_constant()) continue;
          CHECK(poly(q).sign() != 0);
          const UniPoly sf = square_free_part(poly);
          for (Bracket b : isolate_real_roots(sf, Bracket(q - 1, q + 1))) {
            Rational width = (b.hi() - b.lo()) / 2;
            for (int i = 0; i < 80 && b.lo() <= q && q <= b.hi(); ++i, width /= 2) b = refine_bracket(sf, b, width);
            REQUIRE((q < b.lo() || b.hi() < q));
            delta = min(delta, b.hi() < q ? q - b.hi() : b.lo() - q);
          }
        }
    }
    CHECK(delta.sign() > 0);
    for (const Rational& x : {q - delta / 2, q + delta / 2}) {
      CHECK(classify_term(p.a, x, v) == p.a_type);
      CHECK(classify_term(p.b, x, v) == p.b_type);
    }
  }
}

TEST_CASE("boundary_pair on the chromatic line") {
  SearchBudget b;
  b.max_sp_term_size = 20;
  const ComplementaryPair p = boundary_pair(R("13/10"), Rational(-1), b);
  CHECK_NOTHROW(check_complementary(p, R("13/10"), Rational(-1)));
  CHECK(p.planar);
}
