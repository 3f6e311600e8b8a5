#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "tutte/poly.hpp"
#include "tutte/rational.hpp"

namespace tutte {

/// Regions of the (q, v) plane. Interior regions use strict inequalities.
/// Boundary: in the closure of some region but not inside one. Uncovered: v < 0
/// and outside every closure (e.g. the zero-free strip near q = 1, v = -1).
enum class Region {
  I, II, III, IV, V, VI, VII, VIII, IX,
  IStar, IIStar, IIIStar, VStar, VIIIStar, IXStar,
  Boundary, Unsupported, NonNegativeV, Uncovered,
};

std::string_view to_string(Region r);
std::optional<Region> region_from_string(std::string_view s);

bool is_interior(Region r);
bool is_starred(Region r);
/// I* -> I, ..., IX* -> IX; identity on unstarred interior regions.
Region primal_of(Region r);

/// 32/27, the end of the curve branches.
Rational branch_end();

struct DiamondBranches {
  Bracket v_plus;
  Bracket v_minus;
  Rational width;
};

/// Brackets (width <= `width`) around the middle root v+ of v^3 - 2qv - q^2
/// and around v- = q / v+, the root of v^2 (v + 2) = q in (-2, -4/3).
/// Throws OutOfDomain unless 0 < q < 32/27.
DiamondBranches v_diamond(const Rational& q, const Rational& width);

/// Exact comparisons with the curve branches for 0 < q < 32/27 (closure
/// endpoints allowed). Each returns -1, 0, 1 as sign(v - branch(q)).
int compare_v_minus(const Rational& q, const Rational& v);
/// Requires v < 0.
int compare_v_plus(const Rational& q, const Rational& v);

/// Strict membership in one interior region.
bool in_region(Region r, const Rational& q, const Rational& v);
/// Membership in the closure of one interior region.
bool in_closure(Region r, const Rational& q, const Rational& v);

Region classify_region(const Rational& q, const Rational& v);

/// (q, q/v). Throws DivisionByZero at v = 0.
std::pair<Rational, Rational> dual_point(const Rational& q, const Rational& v);

}  // namespace tutte
