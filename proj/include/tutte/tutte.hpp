#pragma once

#include <cstddef>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/poly.hpp"
#include "tutte/rational.hpp"

namespace tutte {

/// Edge weights v_e, indexed like Multigraph::edges().
using WeightAssignment = std::vector<Rational>;

inline constexpr std::size_t kDefaultSubsetBudget = 24;

/// Z_G(q, v) by direct expansion over all 2^|E| edge subsets, using the
/// weights stored on the edges. Throws BudgetExceeded above `budget` edges.
Rational z_subset(const Multigraph& g, const Rational& q, std::size_t budget = kDefaultSubsetBudget);
Rational z_subset(const Multigraph& g, const Rational& q, const WeightAssignment& w,
                  std::size_t budget = kDefaultSubsetBudget);

/// Z_G as a polynomial in q (weights fixed), by subset expansion.
UniPoly z_poly_q(const Multigraph& g, std::size_t budget = kDefaultSubsetBudget);
UniPoly z_poly_q(const Multigraph& g, const WeightAssignment& w, std::size_t budget = kDefaultSubsetBudget);

/// Z_G(q, v) by deletion-contraction with series/parallel/pendant reductions
/// and a memo on a refined relabelling of the reduced graph.
Rational z_del_con(const Multigraph& g, const Rational& q);
Rational z_del_con(const Multigraph& g, const Rational& q, const WeightAssignment& w);

/// Same/diff split of Z_F for a two-terminal graph with all edges weighted v
/// (the stored weights when v is absent). z_same sums subsets joining x and
/// y. Uses subset expansion up to `budget` edges and interpolation of
/// deletion-contraction values beyond it.
SplitZ z_split(const TwoTerminalGraph& f, const std::optional<Rational>& v = std::nullopt,
               std::size_t budget = kDefaultSubsetBudget);

/// Z_{F_xy}: terminals identified. Equals z_same + z_diff / q.
UniPoly z_identified(const SplitZ& s);
/// Z_{F+xy}(q, v, -1). Equals z_diff (q-1)/q.
UniPoly z_with_minus_one_edge(const SplitZ& s);

/// Z_{K_n}(q, v) via the connected-component recurrence.
Rational z_complete(int n, const Rational& q, const Rational& v);

/// Chromatic polynomial: Z with every edge weighted -1.
Rational chromatic(const Multigraph& g, const Rational& q);

/// Classical Tutte polynomial T_G(x, y). Throws UndefinedAtUnitLine for x = 1 or y = 1.
Rational classical_tutte(const Multigraph& g, const Rational& x, const Rational& y);

/// Checks Z_G = Z_{F+xy}(-1) Z_{H+xy}(v_F) / (q(q-1)) for G the gluing of F and
/// H at their terminals, all edges weighted v. Throws PoleAt for q in {0,1}
/// and DegenerateEffectiveWeight when Z_{F+xy}(-1) vanishes.
bool verify_lemma2(const TwoTerminalGraph& f, const Realization& h, const Rational& q, const Rational& v);

/// Glues two realizations at their terminals (F's vertices first).
Realization glue(const Realization& f, const Realization& h);

/// Closed graph used for duality checks: realization plus one x-y edge of weight w.
Multigraph with_return_edge(const Realization& r, const Rational& w);

}  // namespace tutte
