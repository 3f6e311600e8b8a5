#include "tutte/weights.hpp"

#include "tutte/tutte.hpp"

namespace tutte {

std::string_view to_string(GadgetType t) {
  switch (t) {
    case GadgetType::APlus: return "A+";
    case GadgetType::AMinus: return "A-";
    case GadgetType::BPlus: return "B+";
    case GadgetType::BMinus: return "B-";
    case GadgetType::Boundary: return "Boundary";
  }
  return "?";
}

GadgetType type_of_one_plus(const Rational& y) {
  if (y > Rational(1)) return GadgetType::APlus;
  if (y < Rational(-1)) return GadgetType::AMinus;
  if (y.sign() > 0 && y < Rational(1)) return GadgetType::BPlus;
  if (y.sign() < 0 && y > Rational(-1)) return GadgetType::BMinus;
  return GadgetType::Boundary;
}

RatFn effective_weight(const GadgetTerm& t, const Rational& v0) {
  switch (t.kind()) {
    case GadgetTerm::Kind::Edge: return RatFn(t.weight());
    case GadgetTerm::Kind::Opaque: return weight_from_split(t.leaf().split_at(v0));
    case GadgetTerm::Kind::Parallel:
    case GadgetTerm::Kind::Series: {
      std::vector<RatFn> ws;
      for (const auto& c : t.children()) ws.push_back(effective_weight(c, v0));
      if (t.kind() == GadgetTerm::Kind::Parallel) return compose_parallel(ws);
      return compose_series(RatFn::variable(), ws);
    }
  }
  return {};
}

Rational weight_at(const GadgetTerm& t, const Rational& q, const Rational& v0) {
  switch (t.kind()) {
    case GadgetTerm::Kind::Edge: return t.weight();
    case GadgetTerm::Kind::Opaque: {
      const SplitZ s = t.leaf().split_at(v0);
      const Rational zd = s.z_diff(q);
      if (zd.is_zero()) fail(ErrorKind::DegenerateEffectiveWeight, t.leaf().name() + " has z_diff = 0 at q = " + q.to_string());
      return q * s.z_same(q) / zd;
    }
    case GadgetTerm::Kind::Parallel:
    case GadgetTerm::Kind::Series: {
      std::vector<Rational> ws;
      for (const auto& c : t.children()) ws.push_back(weight_at(c, q, v0));
      if (t.kind() == GadgetTerm::Kind::Parallel) return compose_parallel(ws);
      return compose_series(q, ws);
    }
  }
  return {};
}

SplitZ term_split(const GadgetTerm& t, const Rational& v0) {
  const UniPoly q = UniPoly::variable();
  switch (t.kind()) {
    case GadgetTerm::Kind::Edge: return {UniPoly::monomial(t.weight(), 1), UniPoly::monomial(Rational(1), 2)};
    case GadgetTerm::Kind::Opaque: return t.leaf().split_at(v0);
    case GadgetTerm::Kind::Parallel:
    case GadgetTerm::Kind::Series: {
      const bool par = t.kind() == GadgetTerm::Kind::Parallel;
      SplitZ acc = term_split(t.children().front(), v0);
      for (std::size_t i = 1; i < t.children().size(); ++i) {
        const SplitZ c = term_split(t.children()[i], v0);
        SplitZ next;
        if (par) {
          next.z_same = (q * acc.z_same * c.z_same + acc.z_same * c.z_diff + acc.z_diff * c.z_same).divide_by_q_power(2);
          next.z_diff = (acc.z_diff * c.z_diff).divide_by_q_power(2);
        } else {
          next.z_same = (acc.z_same * c.z_same).divide_by_q_power(1);
          next.z_diff = (acc.z_same * c.z_diff + acc.z_diff * c.z_same + acc.z_diff * c.z_diff).divide_by_q_power(1);
        }
        acc = std::move(next);
      }
      return acc;
    }
  }
  return {};
}

RatFn weight_from_split(const SplitZ& s) {
  if (s.z_diff.is_zero()) fail(ErrorKind::IdenticallyDegenerate, "z_diff is identically zero");
  return RatFn(UniPoly::variable() * s.z_same, s.z_diff);
}

RatFn dipole_weight(unsigned k, const Rational& v) { return RatFn(pow(v + 1, k) - 1); }

RatFn path_weight(unsigned s, const Rational& v) {
  const RatFn q = RatFn::variable();
  return q / (pow(RatFn(1) + q / RatFn(v), s) - RatFn(1));
}

GadgetType classify_type(const RatFn& w, const Rational& q) { return type_of_one_plus(w(q) + 1); }

GadgetType classify_term(const GadgetTerm& t, const Rational& q, const Rational& v0) {
  return type_of_one_plus(weight_at(t, q, v0) + 1);
}

GadgetTerm double_parallel(const GadgetTerm& t) { return GadgetTerm::parallel({t, t}); }

Lemma3Check check_lemma3(const GadgetTerm& t, const Rational& v0) {
  if (!t.is_two_terminal_graph()) fail(ErrorKind::NotTwoTerminalGraph, "terminals of " + t.to_string() + " are adjacent");
  const RatFn y = effective_weight(t, v0) + RatFn(1);
  Lemma3Check out;
  out.nonconstant = !y.is_constant();
  out.q_threshold = max(cauchy_root_bound(y.num()), cauchy_root_bound(y.den()));
  return out;
}

}  // namespace tutte
