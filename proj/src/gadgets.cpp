#include "tutte/gadgets.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <unordered_set>

#include "tutte/error.hpp"
#include "tutte/regions.hpp"

namespace tutte {

namespace {

bool between(const Rational& lo, const Rational& x, const Rational& hi) { return lo < x && x < hi; }

/// Effective weight of a chain of s units of weight u: q / ((1 + q/u)^s - 1).
std::optional<Rational> chain_weight(const Rational& q, const Rational& u, std::size_t s) {
  if (u.is_zero()) return Rational(0);
  const Rational d = pow(Rational(1) + q / u, s) - 1;
  if (d.is_zero()) return std::nullopt;
  return q / d;
}

std::optional<Rational> series_pair_weight(const Rational& q, const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  const Rational d = (Rational(1) + q / a) * (Rational(1) + q / b) - 1;
  if (d.is_zero()) return std::nullopt;
  return q / d;
}

// ---------------------------------------------------------------- closure

struct Entry {
  Rational w;
  bool dipole = false;
  bool planar = true;
  std::size_t size = 1;
  enum class Op { Leaf, Series, Parallel } op = Op::Leaf;
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t leaf = 0;
};

struct KeyHash {
  std::size_t operator()(const std::pair<Rational, bool>& k) const { return k.first.hash() * 2 + (k.second ? 1 : 0); }
};

/// Series-parallel closure by term size with exact weights at fixed (q, v).
/// Entries with an already seen (weight, dipole) key are dropped.
class Closure {
 public:
  Closure(const Rational& q, const Rational& v, const std::vector<GadgetTerm>& seeds, const SearchBudget& budget)
      : q_(q), budget_(budget) {
    leaves_.push_back(GadgetTerm::edge(v));
    leaves_.insert(leaves_.end(), seeds.begin(), seeds.end());
    levels_.resize(2);
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
      Rational w;
      try {
        w = weight_at(leaves_[i], q, v);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateEffectiveWeight) throw;
        continue;
      }
      Entry e;
      e.w = w;
      e.dipole = leaves_[i].is_dipole();
      e.planar = leaves_[i].is_planar();
      e.leaf = i;
      add(1, std::move(e));
    }
  }

  std::size_t max_size() const { return levels_.size() - 1; }
  const std::vector<std::size_t>& level(std::size_t n) const { return levels_[n]; }
  const Entry& entry(std::size_t i) const { return all_[i]; }
  std::size_t entry_count() const { return all_.size(); }

  /// Builds the next size level; false once the size cap is reached.
  bool grow() {
    const std::size_t n = levels_.size();
    if (n > budget_.max_sp_term_size) return false;
    levels_.emplace_back();
    for (std::size_t i = 1; i <= n / 2; ++i) {
      const std::size_t j = n - i;
      const auto& la = levels_[i];
      const auto& lb = levels_[j];
      for (std::size_t ai = 0; ai < la.size(); ++ai) {
        for (std::size_t bi = (i == j ? ai : 0); bi < lb.size(); ++bi) {
          if (levels_[n].size() >= budget_.max_level_entries) return true;
          const Entry& a = all_[la[ai]];
          const Entry& b = all_[lb[bi]];
          Entry p;
          p.w = (a.w + 1) * (b.w + 1) - 1;
          p.dipole = a.dipole && b.dipole;
          p.planar = a.planar && b.planar;
          p.size = n;
          p.op = Entry::Op::Parallel;
          p.left = la[ai];
          p.right = lb[bi];
          const auto sw = series_pair_weight(q_, a.w, b.w);
          Entry s;
          if (sw) {
            s.w = *sw;
            s.planar = p.planar;
            s.size = n;
            s.op = Entry::Op::Series;
            s.left = la[ai];
            s.right = lb[bi];
          }
          add(n, std::move(p));
          if (sw) add(n, std::move(s));
        }
      }
    }
    return true;
  }

  GadgetTerm build(std::size_t idx) const {
    const Entry& e = all_[idx];
    switch (e.op) {
      case Entry::Op::Leaf: return leaves_[e.leaf];
      case Entry::Op::Series: return GadgetTerm::series({build(e.left), build(e.right)});
      case Entry::Op::Parallel: return GadgetTerm::parallel({build(e.left), build(e.right)});
    }
    return leaves_.front();
  }

 private:
  void add(std::size_t n, Entry e) {
    if (!seen_.insert({e.w, e.dipole}).second) return;
    levels_[n].push_back(all_.size());
    all_.push_back(std::move(e));
  }

  Rational q_;
  SearchBudget budget_;
  std::vector<GadgetTerm> leaves_;
  std::vector<Entry> all_;
  std::vector<std::vector<std::size_t>> levels_;
  std::unordered_set<std::pair<Rational, bool>, KeyHash> seen_;
};

std::vector<GadgetTerm> kn_seeds(const SearchBudget& budget, bool planar_only) {
  std::vector<GadgetTerm> seeds;
  for (int n = 4; n <= budget.max_kn; ++n) {
    GadgetTerm t = complete_minus_edge(n, budget.max_kn);
    if (!planar_only || t.is_planar()) seeds.push_back(std::move(t));
  }
  return seeds;
}

bool is_pair_types(GadgetType a, GadgetType b) {
  return (a == GadgetType::APlus && b == GadgetType::BMinus) || (a == GadgetType::AMinus && b == GadgetType::BPlus);
}

ComplementaryPair make_pair(GadgetTerm a, GadgetTerm b, const Rational& q, const Rational& v) {
  ComplementaryPair p{a, b, classify_term(a, q, v), classify_term(b, q, v), a.is_planar() && b.is_planar()};
  check_complementary(p, q, v);
  return p;
}

}  // namespace

void check_complementary(const ComplementaryPair& p, const Rational& q, const Rational& v0) {
  const GadgetType ta = classify_term(p.a, q, v0);
  const GadgetType tb = classify_term(p.b, q, v0);
  if (ta != p.a_type || tb != p.b_type) fail(ErrorKind::AssertionFailure, "recorded pair types do not match recomputation");
  if (!is_pair_types(ta, tb))
    fail(ErrorKind::AssertionFailure, "types " + std::string(to_string(ta)) + "/" + std::string(to_string(tb)) + " are not complementary");
  if (p.a.is_dipole() && p.b.is_dipole()) fail(ErrorKind::AssertionFailure, "both gadgets are dipoles");
  if (p.planar != (p.a.is_planar() && p.b.is_planar())) fail(ErrorKind::AssertionFailure, "planarity flag mismatch");
}

GadgetTerm path_over(const GadgetTerm& unit, const Rational& unit_weight, const Rational& q, GadgetType target,
                     const SearchBudget& budget) {
  for (std::size_t s = 2; s <= budget.max_path_length; ++s) {
    const auto w = chain_weight(q, unit_weight, s);
    if (w && type_of_one_plus(*w + 1) == target) return GadgetTerm::series_power(unit, s);
  }
  fail(ErrorKind::SearchExhausted, "no chain of at most " + std::to_string(budget.max_path_length) + " units has type " +
                                       std::string(to_string(target)));
}

GadgetTerm path_gadget(const Rational& q, const Rational& v, GadgetType target, const SearchBudget& budget) {
  const Rational zero(0), one(1), two(2), m2(-2);
  const bool neg = v.sign() < 0;
  bool covered = false;
  if (neg && q < zero) covered |= target == GadgetType::BPlus;
  if (v < m2 && between(zero, q, one)) covered |= target == GadgetType::BPlus;
  if (v < m2 && between(one, q, two)) covered |= target == GadgetType::BMinus;
  if (neg && q > -(v * 2)) covered |= target == GadgetType::APlus;
  if (neg && between(two, q, -(v * 2))) covered |= target == GadgetType::AMinus;
  if (!covered)
    fail(ErrorKind::WrongCase, "no path case gives type " + std::string(to_string(target)) + " at (" + q.to_string() +
                                   ", " + v.to_string() + ")");
  return path_over(GadgetTerm::edge(v), v, q, target, budget);
}

GadgetTerm series_dipole_over(const GadgetTerm& unit, const Rational& u, const Rational& q, const SearchBudget& budget) {
  if (!(q > Rational(2) && between(-q, u, Rational(-2))))
    fail(ErrorKind::WrongCase, "series-dipole gadget needs q > 2 and -q < v < -2");
  const GadgetTerm f = double_parallel(unit);
  const Rational vf = u * (u + 2);
  const Rational r1 = Rational(1) + q / vf;
  const Rational r2 = Rational(1) + q / u;
  Rational acc = r1;
  for (std::size_t s = 1; s <= budget.max_path_length; ++s, acc *= r1) {
    const Rational d = acc * r2 - 1;
    if (d.is_zero()) continue;
    const Rational w = q / d;
    if (between(Rational(-1), w, Rational(0))) {
      std::vector<GadgetTerm> parts(s, f);
      parts.push_back(unit);
      return GadgetTerm::series(std::move(parts));
    }
  }
  fail(ErrorKind::SearchExhausted, "series-dipole chain exceeded max_path_length");
}

GadgetTerm series_dipole_bplus(const Rational& q, const Rational& v, const SearchBudget& budget) {
  return series_dipole_over(GadgetTerm::edge(v), v, q, budget);
}

LeafBranch leaf_branch(const Rational& q, const Rational& w) {
  if (between(Rational(-1), w, Rational(0))) return LeafBranch::Direct;
  if (between(-q, w, Rational(-2))) return LeafBranch::SeriesDipole;
  if (between(Rational(-2), w, Rational(-1))) return LeafBranch::DoubleParallel;
  if (w == Rational(-1)) return LeafBranch::ThreeSeries;
  if (w == Rational(-2)) return LeafBranch::OddSeries;
  fail(ErrorKind::AssertionFailure, "leaf weight " + w.to_string() + " lies outside (-q, 0) at q = " + q.to_string());
}

GadgetTerm bplus_from_leaf(const Rational& q, const GadgetTerm& leaf, const Rational& w, const SearchBudget& budget) {
  if (!(q > Rational(2) && q < Rational(4))) fail(ErrorKind::WrongCase, "leaf case analysis needs 2 < q < 4");
  std::optional<GadgetTerm> out;
  Rational result;
  switch (leaf_branch(q, w)) {
    case LeafBranch::Direct:
      out = leaf;
      result = w;
      break;
    case LeafBranch::SeriesDipole: {
      out = series_dipole_over(leaf, w, q, budget);
      // Recompute through the composition rule for the assertion below.
      const std::size_t s = out->children().size() - 1;
      result = q / (pow(Rational(1) + q / (w * (w + 2)), s) * (Rational(1) + q / w) - 1);
      break;
    }
    case LeafBranch::DoubleParallel:
      out = double_parallel(leaf);
      result = w * (w + 2);
      break;
    case LeafBranch::ThreeSeries:
      out = GadgetTerm::series_power(leaf, 3);
      result = *chain_weight(q, w, 3);
      break;
    case LeafBranch::OddSeries: {
      for (std::size_t s = 3; s <= budget.max_path_length && !out; s += 2) {
        const auto vj = chain_weight(q, w, s);
        if (vj && between(-q, *vj, Rational(-2))) {
          out = series_dipole_over(GadgetTerm::series_power(leaf, s), *vj, q, budget);
          const std::size_t k = out->children().size() - s;
          result = q / (pow(Rational(1) + q / (*vj * (*vj + 2)), k) * (Rational(1) + q / *vj) - 1);
        }
      }
      if (!out) fail(ErrorKind::SearchExhausted, "no odd chain of leaves reaches (-q, -2)");
      break;
    }
  }
  if (type_of_one_plus(result + 1) != GadgetType::BPlus)
    fail(ErrorKind::AssertionFailure, "leaf construction did not produce type B+");
  return *out;
}

GadgetTerm petersen_leaf(const Rational& q, const Rational& v, const SearchBudget& budget) {
  if (!(q > Rational(2) && q < Rational(4)) || q == Rational(3) || !(v < -q))
    fail(ErrorKind::WrongCase, "Petersen gadget needs 2 < q < 4 non-integer and v < -q");
  // Paths of weight v < -q have effective weight just below -q; subdividing
  // every Petersen edge walks the leaf's edge weight towards -q until v_F
  // lands in (-q, 0).
  for (std::size_t k = 1; k <= budget.max_path_length; ++k) {
    const GadgetTerm f = petersen_minus_edge(static_cast<int>(k));
    try {
      const Rational w = weight_at(f, q, v);
      if (w > -q && w.sign() < 0) return f;
    } catch (const Error&) {
    }
  }
  fail(ErrorKind::SearchExhausted, "no Petersen subdivision up to " + std::to_string(budget.max_path_length) +
                                       " has v_F in (-q, 0) at (" + q.to_string() + ", " + v.to_string() + ")");
}

GadgetTerm petersen_bplus(const Rational& q, const Rational& v, const SearchBudget& budget) {
  const GadgetTerm f = petersen_leaf(q, v, budget);
  const GadgetTerm t = bplus_from_leaf(q, f, weight_at(f, q, v), budget);
  if (classify_term(t, q, v) != GadgetType::BPlus) fail(ErrorKind::AssertionFailure, "Petersen gadget is not B+");
  return t;
}

GadgetTerm sp_search(const Rational& q, const Rational& v, const std::set<GadgetType>& targets,
                     const std::vector<GadgetTerm>& seeds, const SearchBudget& budget, bool non_dipole) {
  if (targets.empty()) fail(ErrorKind::ImmediateExhaustion, "sp_search called with no target types");
  Closure c(q, v, seeds, budget);
  auto hit = [&](const Entry& e) { return (!non_dipole || !e.dipole) && targets.count(type_of_one_plus(e.w + 1)); };
  std::size_t n = 1;
  do {
    std::optional<GadgetTerm> best;
    std::string best_key;
    for (std::size_t idx : c.level(n)) {
      if (!hit(c.entry(idx))) continue;
      GadgetTerm t = c.build(idx);
      std::string key = t.to_string();
      if (!best || key < best_key) {
        best = std::move(t);
        best_key = std::move(key);
      }
    }
    if (best) return *best;
    ++n;
  } while (c.grow());

  // k-fold powers of closure entries.
  for (std::size_t i = 0; i < c.entry_count(); ++i) {
    const Entry& e = c.entry(i);
    for (std::size_t k = 2; k <= budget.max_parallel_mult; ++k) {
      const Rational pw = pow(e.w + 1, k) - 1;
      if ((!non_dipole || !e.dipole) && targets.count(type_of_one_plus(pw + 1)))
        return GadgetTerm::parallel_power(c.build(i), k);
      const auto sw = chain_weight(q, e.w, k);
      if (sw && targets.count(type_of_one_plus(*sw + 1))) return GadgetTerm::series_power(c.build(i), k);
    }
  }
  fail(ErrorKind::SearchExhausted, "series-parallel closure up to size " + std::to_string(budget.max_sp_term_size) +
                                       " found no target type at (" + q.to_string() + ", " + v.to_string() + ")");
}

GadgetTerm kn_gadget_search(const Rational& q, const Rational& v, const SearchBudget& budget) {
  if (!(q > Rational(2) && between(Rational(-1), v, Rational(0))))
    fail(ErrorKind::WrongCase, "complete-graph search needs q > 2 and -1 < v < 0");
  const auto seeds = kn_seeds(budget, false);
  // For q > 2, series and parallel composition of gadgets with 1 + v > 0 never
  // leaves 1 + v > 0 (each series factor 1 + q/v_i is > 1 or < 1 - q), so
  // without a leaf of type A- or B- the closure cannot succeed.
  const bool any_negative = std::any_of(seeds.begin(), seeds.end(), [&](const GadgetTerm& t) {
    try {
      return weight_at(t, q, v) + 1 < Rational(0);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateEffectiveWeight) throw;
      return false;
    }
  });
  if (!any_negative)
    fail(ErrorKind::SearchExhausted, "no K_n minus edge leaf (n <= " + std::to_string(budget.max_kn) +
                                         ") has 1 + v_F < 0 at (" + q.to_string() + ", " + v.to_string() + ")");
  return sp_search(q, v, {GadgetType::AMinus, GadgetType::BMinus}, seeds, budget, true);
}

namespace {

std::optional<ComplementaryPair> closure_pair(const Rational& q, const Rational& v, const std::vector<GadgetTerm>& seeds,
                                              const SearchBudget& budget) {
  Closure c(q, v, seeds, budget);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  // First entry per type, any / non-dipole; index by GadgetType.
  std::array<std::size_t, 5> any{kNone, kNone, kNone, kNone, kNone};
  std::array<std::size_t, 5> nondip = any;
  std::size_t n = 1;
  do {
    for (std::size_t idx : c.level(n)) {
      const Entry& e = c.entry(idx);
      const auto ty = static_cast<std::size_t>(type_of_one_plus(e.w + 1));
      if (any[ty] == kNone) any[ty] = idx;
      if (!e.dipole && nondip[ty] == kNone) nondip[ty] = idx;
    }
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::size_t best_size = 0;
    const std::array<std::pair<GadgetType, GadgetType>, 2> combos = {
        std::pair{GadgetType::AMinus, GadgetType::BPlus}, std::pair{GadgetType::APlus, GadgetType::BMinus}};
    for (const auto& [ta, tb] : combos) {
      const auto ia = static_cast<std::size_t>(ta), ib = static_cast<std::size_t>(tb);
      for (const auto& [x, y] : {std::pair{nondip[ia], any[ib]}, std::pair{any[ia], nondip[ib]}}) {
        if (x == kNone || y == kNone) continue;
        if (c.entry(x).dipole && c.entry(y).dipole) continue;
        const std::size_t size = c.entry(x).size + c.entry(y).size;
        if (!best || size < best_size) {
          best = {x, y};
          best_size = size;
        }
      }
    }
    if (best) return make_pair(c.build(best->first), c.build(best->second), q, v);
    ++n;
  } while (c.grow());
  return std::nullopt;
}

}  // namespace

ComplementaryPair boundary_pair(const Rational& q, const Rational& v, const SearchBudget& budget, bool planar_only) {
  // Plain edges first: the leaves multiply the closure size, so they are only
  // added when the edge-only closure has nothing.
  if (auto p = closure_pair(q, v, {}, budget)) return *p;
  if (auto p = closure_pair(q, v, kn_seeds(budget, planar_only), budget)) return *p;
  fail(ErrorKind::SearchExhausted, "no complementary pair in the closure up to size " +
                                       std::to_string(budget.max_sp_term_size) + " at (" + q.to_string() + ", " +
                                       v.to_string() + ")");
}

ComplementaryPair complementary_pair(const Rational& q, const Rational& v, const SearchBudget& budget) {
  const Region r = classify_region(q, v);
  const GadgetTerm e = GadgetTerm::edge(v);
  switch (r) {
    case Region::I:
    case Region::II: return make_pair(e, path_gadget(q, v, GadgetType::BPlus, budget), q, v);
    case Region::III: return make_pair(double_parallel(e), path_gadget(q, v, GadgetType::BMinus, budget), q, v);
    case Region::IV: return make_pair(e, petersen_bplus(q, v, budget), q, v);
    case Region::V: return make_pair(e, series_dipole_bplus(q, v, budget), q, v);
    case Region::VI: return make_pair(double_parallel(path_gadget(q, v, GadgetType::AMinus, budget)), e, q, v);
    case Region::VII: {
      const GadgetTerm f = kn_gadget_search(q, v, budget);
      if (classify_term(f, q, v) == GadgetType::AMinus) return make_pair(f, e, q, v);
      // f is B-: -2 < v_f < -1. Build an A+ gadget out of copies of f.
      const Rational vf = weight_at(f, q, v);
      if (q < Rational(4) && vf < -q / 2)
        return make_pair(double_parallel(path_over(f, vf, q, GadgetType::AMinus, budget)), f, q, v);
      if (q > -(vf * 2)) return make_pair(path_over(f, vf, q, GadgetType::APlus, budget), f, q, v);
      fail(ErrorKind::SearchExhausted, "B- gadget weight lies on the line v = -q/2");
    }
    case Region::VIII:
      return make_pair(sp_search(q, v, {GadgetType::APlus}, {double_parallel(e)}, budget, true), e, q, v);
    case Region::IX: return make_pair(sp_search(q, v, {GadgetType::APlus}, {}, budget, true), e, q, v);
    default:
      fail(ErrorKind::NotInteriorPoint, "(" + q.to_string() + ", " + v.to_string() + ") lies in " +
                                            std::string(to_string(r)) + ", not in Regions I-IX");
  }
}

}  // namespace tutte
