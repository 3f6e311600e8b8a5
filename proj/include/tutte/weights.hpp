#pragma once

#include <string_view>
#include <type_traits>
#include <vector>

#include "tutte/error.hpp"
#include "tutte/graph.hpp"
#include "tutte/poly.hpp"

namespace tutte {

/// Position of 1 + v_F relative to {-1, 0, 1}.
enum class GadgetType { APlus, AMinus, BPlus, BMinus, Boundary };

std::string_view to_string(GadgetType t);
/// Type of a gadget whose effective weight satisfies 1 + v_F = one_plus.
GadgetType type_of_one_plus(const Rational& one_plus);

// Composition rules shared by the exact-number and rational-function domains.
// Parallel: 1 + v = prod(1 + v_i). Series: 1 + q/v = prod(1 + q/v_i).

template <class S>
S compose_parallel(const std::vector<S>& weights) {
  S y(1);
  for (const auto& w : weights) y *= w + S(1);
  return y - S(1);
}

/// Series weight. A zero constituent makes the whole chain weight zero at a
/// point; as a rational function it is reported as IdenticallyDegenerate, as
/// is a chain whose 1 + q/v product is identically one.
template <class S>
S compose_series(const S& q, const std::vector<S>& weights) {
  constexpr bool symbolic = !std::is_same_v<S, Rational>;
  S prod(1);
  for (const auto& w : weights) {
    if (w.is_zero()) {
      if constexpr (symbolic) fail(ErrorKind::IdenticallyDegenerate, "series constituent with zero weight");
      return S(0);
    }
    prod *= S(1) + q / w;
  }
  prod -= S(1);
  if (prod.is_zero()) {
    if constexpr (symbolic) fail(ErrorKind::IdenticallyDegenerate, "series product 1 + q/v is identically one");
    fail(ErrorKind::DegenerateEffectiveWeight, "series effective weight has a pole here");
  }
  return q / prod;
}

/// v_F as a rational function of q with the edges of opaque leaves weighted v0.
RatFn effective_weight(const GadgetTerm& t, const Rational& v0);

/// v_F at one rational q. Throws DegenerateEffectiveWeight at poles.
Rational weight_at(const GadgetTerm& t, const Rational& q, const Rational& v0);

/// Same/diff split of the realized term, built by composing splits:
/// Edge(w): (q w, q^2); parallel and series combine exactly in Q[q].
SplitZ term_split(const GadgetTerm& t, const Rational& v0);

/// q z_same / z_diff. Throws IdenticallyDegenerate when z_diff = 0.
RatFn weight_from_split(const SplitZ& s);

/// Closed forms: k parallel edges, and a path of s edges, each of weight v.
RatFn dipole_weight(unsigned k, const Rational& v);
RatFn path_weight(unsigned s, const Rational& v);

/// Throws PoleAt when q is a pole of w.
GadgetType classify_type(const RatFn& w, const Rational& q);
/// Pointwise type; propagates DegenerateEffectiveWeight.
GadgetType classify_term(const GadgetTerm& t, const Rational& q, const Rational& v0);

/// Parallel(t, t): 1 + v becomes (1 + v_t)^2.
GadgetTerm double_parallel(const GadgetTerm& t);

struct Lemma3Check {
  Rational q_threshold;
  bool nonconstant = false;
};

/// 1 + v_F is positive for every q above q_threshold, and v_F is not constant.
/// Throws NotTwoTerminalGraph for dipoles or other terms with adjacent terminals.
Lemma3Check check_lemma3(const GadgetTerm& t, const Rational& v0);

}  // namespace tutte
