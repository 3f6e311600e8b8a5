#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/weights.hpp"

namespace tutte {

struct SearchBudget {
  std::size_t max_path_length = 64;
  std::size_t max_sp_term_size = 12;
  int max_kn = 7;
  std::size_t max_parallel_mult = 8;
  /// Cap on distinct closure entries kept per size level.
  std::size_t max_level_entries = 60000;
};

/// Gadgets A and B of a complementary pair at one point: types (A+, B-) or
/// (A-, B+), at most one of them a dipole.
struct ComplementaryPair {
  GadgetTerm a;
  GadgetTerm b;
  GadgetType a_type;
  GadgetType b_type;
  bool planar;
};

/// Throws AssertionFailure unless the pair is complementary at (q, v0).
void check_complementary(const ComplementaryPair& p, const Rational& q, const Rational& v0);

/// Path of s >= 2 edges of weight v with the target type at (q, v).
/// Throws WrongCase when no path lemma case yields `target` at (q, v).
GadgetTerm path_gadget(const Rational& q, const Rational& v, GadgetType target, const SearchBudget& budget = {});

/// Series(unit, ..., unit) of s >= 2 copies with the target type, where the
/// unit's effective weight at q is `unit_weight`. Throws SearchExhausted.
GadgetTerm path_over(const GadgetTerm& unit, const Rational& unit_weight, const Rational& q, GadgetType target,
                     const SearchBudget& budget = {});

/// Series(F, ..., F, Edge(v)) with F the two-edge dipole, of type B+.
/// Needs q > 2 and -q < v < -2 (WrongCase otherwise).
GadgetTerm series_dipole_bplus(const Rational& q, const Rational& v, const SearchBudget& budget = {});

/// The same construction with `unit` in place of the single edge; the unit's
/// weight at q must lie in (-q, -2).
GadgetTerm series_dipole_over(const GadgetTerm& unit, const Rational& unit_weight, const Rational& q,
                              const SearchBudget& budget = {});

/// Petersen graph minus an edge with the least subdivision k whose effective
/// weight at (q, v) lies in (-q, 0); needs 2 < q < 4, q != 3, v < -q.
GadgetTerm petersen_leaf(const Rational& q, const Rational& v, const SearchBudget& budget = {});

/// B+ gadget built from petersen_leaf by the leaf case analysis.
GadgetTerm petersen_bplus(const Rational& q, const Rational& v, const SearchBudget& budget = {});

/// The case analysis behind petersen_bplus, applied to any leaf whose
/// effective weight at q is `leaf_weight`. Throws AssertionFailure when the
/// weight is outside (-q, 0).
GadgetTerm bplus_from_leaf(const Rational& q, const GadgetTerm& leaf, const Rational& leaf_weight,
                           const SearchBudget& budget = {});

/// Which branch bplus_from_leaf takes for a given leaf weight.
enum class LeafBranch { Direct, SeriesDipole, DoubleParallel, ThreeSeries, OddSeries };
LeafBranch leaf_branch(const Rational& q, const Rational& leaf_weight);

/// Breadth-first closure of {Edge(v)} and the seeds under binary series and
/// parallel composition, by size (each seed has size 1). Returns the
/// lexicographically first term of the smallest size whose type is in
/// `targets`, skipping dipoles when `non_dipole`. Falls back to k-fold
/// powers of closure entries (k <= max_parallel_mult) past the size cap.
GadgetTerm sp_search(const Rational& q, const Rational& v, const std::set<GadgetType>& targets,
                     const std::vector<GadgetTerm>& seeds, const SearchBudget& budget = {}, bool non_dipole = true);

/// sp_search seeded with K_n minus an edge, 4 <= n <= max_kn, for types A-/B-.
/// Needs q > 2 and -1 < v < 0.
GadgetTerm kn_gadget_search(const Rational& q, const Rational& v, const SearchBudget& budget = {});

/// Complementary pair for an interior point of Regions I-IX.
ComplementaryPair complementary_pair(const Rational& q, const Rational& v, const SearchBudget& budget = {});

/// Pair search used at boundary points (for instance the line v = -1): one
/// closure over Edge(v) and the K_n leaves, stopping at the first size where
/// a complementary pair exists. `planar_only` drops the non-planar leaves.
ComplementaryPair boundary_pair(const Rational& q, const Rational& v, const SearchBudget& budget = {},
                                bool planar_only = false);

}  // namespace tutte
