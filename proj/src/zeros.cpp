#include "tutte/zeros.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tutte/error.hpp"
#include "tutte/tutte.hpp"

namespace tutte {

namespace {

bool parity_ok(unsigned long n, Parity p) {
  switch (p) {
    case Parity::Even: return n % 2 == 0;
    case Parity::Odd: return n % 2 == 1;
    case Parity::Any: return true;
  }
  return true;
}

int sgn_pow(int sign, unsigned long n) { return (sign < 0 && n % 2 == 1) ? -1 : (sign == 0 ? 0 : 1); }

// p(q) != 0 on the whole closed window.
bool free_on(const UniPoly& p, const Bracket& w) { return root_free(p, w.lo(), w.hi()); }

bool ratfn_free_on(const RatFn& r, const Bracket& w) { return free_on(r.num(), w) && free_on(r.den(), w); }

bool is_a_minus_case(GadgetType a_type) { return a_type == GadgetType::AMinus; }

struct Side {
  bool above_one;  // the whole window lies in q > 1
  Parity s_parity;
  Parity t_parity;
};

Side side_of(const Rational& q, GadgetType a_type) {
  Side s{q > Rational(1), Parity::Any, Parity::Any};
  const Parity p = s.above_one ? Parity::Odd : Parity::Even;
  if (is_a_minus_case(a_type))
    s.s_parity = p;
  else
    s.t_parity = p;
  return s;
}

struct Evaluated {
  Rational y_a, y_b, f, p_a, p_b;
};

Evaluated evaluate(const GadgetTerm& a, const GadgetTerm& b, const SplitZ& sa, const SplitZ& sb, unsigned long s,
                   unsigned long t, const Rational& v0, const Rational& q) {
  Evaluated e;
  e.y_a = weight_at(a, q, v0) + 1;
  e.y_b = weight_at(b, q, v0) + 1;
  e.f = q - 1 + pow(e.y_a, s) * pow(e.y_b, t);
  const Rational q2 = q * q;
  e.p_a = sa.z_diff(q) / q2;
  e.p_b = sb.z_diff(q) / q2;
  return e;
}

int z_sign_product(const Rational& q, const Evaluated& e, unsigned long s, unsigned long t) {
  return q.sign() * sgn_pow(e.p_a.sign(), s) * sgn_pow(e.p_b.sign(), t) * e.f.sign();
}

// Closed form through u = q z_same + z_diff:
// Z_G = (u_A^s u_B^t + (q - 1) zd_A^s zd_B^t) / q^(2(s+t)-1).
int z_sign_closed(const Rational& q, const SplitZ& sa, const SplitZ& sb, unsigned long s, unsigned long t) {
  const Rational ua = q * sa.z_same(q) + sa.z_diff(q);
  const Rational ub = q * sb.z_same(q) + sb.z_diff(q);
  const Rational num = pow(ua, s) * pow(ub, t) + (q - 1) * pow(sa.z_diff(q), s) * pow(sb.z_diff(q), t);
  return num.sign() * sgn_pow(q.sign(), 2 * (s + t) - 1);
}

// Sign of q^(1-n) (q/w)^m, the factor relating Z_{G*}(q, q/w) to Z_G(q, w).
int duality_factor_sign(const Rational& q, const Rational& w, int n, std::size_t m) {
  const int a = sgn_pow(q.sign(), static_cast<unsigned long>(std::abs(1 - n)));
  return a * sgn_pow((q / w).sign(), m);
}

Rational abs_diff(const Rational& a, const Rational& b) { return (a - b).abs(); }

std::vector<Rational> retarget_offsets(const Rational& eps) {
  std::vector<Rational> out;
  auto push = [&](const Rational& d) {
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  };
  // Mid-range offsets first: tiny offsets leave a tiny window and force huge s, t.
  push(eps / 4);
  push(eps * Rational(3, 8));
  push(eps / 8);
  push(eps / 2);
  for (int k = 1; k < 32; ++k) push(eps / 2 * Rational(k, 32));
  for (int j = 6; j <= 30; ++j) push(eps / pow(Rational(2), static_cast<unsigned long>(j)));
  return out;
}

struct PrimalRun {
  ZeroCertificate cert;
  int z_lo = 0;  // signs of Z_G
  int z_hi = 0;
};

/// Window, exponents and bracket for a pair already valid at (q_w, v).
/// `radius` bounds the distance of the bracket from q_w: window <= radius/8.
PrimalRun run_primal(const ComplementaryPair& pair, const Rational& q_w, const Rational& v, const Rational& radius,
                     const ZeroOptions& opts) {
  check_complementary(pair, q_w, v);
  const RatFn ya = effective_weight(pair.a, v) + RatFn(1);
  const RatFn yb = effective_weight(pair.b, v) + RatFn(1);
  const SplitZ sa = term_split(pair.a, v);
  const SplitZ sb = term_split(pair.b, v);
  const std::array<RatFn, 6> type_walls = {ya, ya - RatFn(1), ya + RatFn(1), yb, yb - RatFn(1), yb + RatFn(1)};

  // Pole-free window on which both types and the prefactors persist.
  Rational delta = radius / 8;
  std::optional<Bracket> window;
  for (int i = 0; i < 64 && !window; ++i, delta /= 2) {
    const Bracket w(q_w - delta, q_w + delta);
    if (!(w.lo() > Rational(1) || w.hi() < Rational(1))) continue;
    if (!(w.lo().sign() > 0 || w.hi().sign() < 0)) continue;
    bool ok = free_on(sa.z_diff, w) && free_on(sb.z_diff, w);
    for (const auto& r : type_walls) ok = ok && ratfn_free_on(r, w);
    if (ok) window = w;
  }
  if (!window) fail(ErrorKind::PoleWindowEmpty, "no certified window around q = " + q_w.to_string());

  const Side side = side_of(q_w, pair.a_type);
  const bool a_minus = is_a_minus_case(pair.a_type);
  const RatFn a = a_minus ? -ya : ya;
  const RatFn b = a_minus ? yb : -yb;
  const RatFn c = side.above_one ? RatFn::variable() - RatFn(1) : RatFn(1) - RatFn::variable();
  const ExponentWitness ew = find_st(a, b, c, *window, side.s_parity, side.t_parity, opts.max_exponent_total);

  auto f_at = [&](const Rational& q) { return q - 1 + pow(ya(q), ew.s) * pow(yb(q), ew.t); };
  Rational lo = ew.bracket.lo(), hi = ew.bracket.hi();
  int s_lo = f_at(lo).sign();
  const Rational target_width = radius / 16;
  while (hi - lo > target_width) {
    const Rational m = midpoint(lo, hi);
    const int sm = f_at(m).sign();
    if (sm == 0) {
      // Exact rational zero: close in on it from both sides.
      Rational h = (hi - lo) / 4;
      while (h > Rational(0)) {
        if (f_at(m - h).sign() * f_at(m + h).sign() < 0) break;
        h /= 2;
        if (h < target_width / 1024) fail(ErrorKind::NoSignChange, "f vanishes without a sign change at " + m.to_string());
      }
      lo = m - h;
      hi = m + h;
      s_lo = f_at(lo).sign();
      continue;
    }
    if (sm == s_lo)
      lo = m;
    else
      hi = m;
  }

  PrimalRun run;
  ZeroCertificate& c_out = run.cert;
  c_out.a_term = pair.a;
  c_out.b_term = pair.b;
  c_out.a_type = pair.a_type;
  c_out.b_type = pair.b_type;
  c_out.s = ew.s;
  c_out.t = ew.t;
  c_out.v0 = v;
  c_out.bracket_lo = lo;
  c_out.bracket_hi = hi;
  const Evaluated el = evaluate(pair.a, pair.b, sa, sb, ew.s, ew.t, v, lo);
  const Evaluated eh = evaluate(pair.a, pair.b, sa, sb, ew.s, ew.t, v, hi);
  if (el.p_a.is_zero() || el.p_b.is_zero() || eh.p_a.is_zero() || eh.p_b.is_zero())
    fail(ErrorKind::AssertionFailure, "prefactor vanishes at a bracket endpoint");
  c_out.prefactor_witness = {{"q", lo.sign(), hi.sign()},
                             {"P_A", el.p_a.sign(), eh.p_a.sign()},
                             {"P_B", el.p_b.sign(), eh.p_b.sign()},
                             {"f", el.f.sign(), eh.f.sign()}};
  run.z_lo = z_sign_product(lo, el, ew.s, ew.t);
  run.z_hi = z_sign_product(hi, eh, ew.s, ew.t);
  if (run.z_lo * run.z_hi >= 0) fail(ErrorKind::AssertionFailure, "Z_G does not change sign on the refined bracket");
  c_out.sign_lo = run.z_lo;
  c_out.sign_hi = run.z_hi;
  c_out.witness_edge_count = ew.s * pair.a.edge_count() + ew.t * pair.b.edge_count();
  c_out.working_q = q_w;
  c_out.working_v = v;
  return run;
}

ZeroCertificate finish_primal(PrimalRun run, const Rational& q0, const Rational& v0, const Rational& eps, Region region) {
  ZeroCertificate c = std::move(run.cert);
  c.target_q0 = q0;
  c.target_v0 = v0;
  c.eps = eps;
  c.region = region;
  c.achieved_distance = max(abs_diff(c.bracket_lo, q0), abs_diff(c.bracket_hi, q0));
  return c;
}

ComplementaryPair pair_for(const Rational& q, const Rational& v, const ZeroOptions& opts) {
  ComplementaryPair p = complementary_pair(q, v, opts.budget);
  if (opts.planar_only && !p.planar)
    fail(ErrorKind::NonPlanarPair, "pair at (" + q.to_string() + ", " + v.to_string() + ") is not planar");
  return p;
}

/// Dual certificate around the starred point (q_w, v0); distances are
/// measured from the target (q0, v0).
ZeroCertificate dual_at(const Rational& q0, const Rational& v0, const Rational& eps, const Rational& q_w,
                        Region region, const ZeroOptions& opts) {
  const Rational w = q_w / v0;
  const Region primal = classify_region(q_w, w);
  if (primal != primal_of(region))
    fail(ErrorKind::AssertionFailure, "primal point of " + std::string(to_string(region)) + " classified as " +
                                          std::string(to_string(primal)));
  const ComplementaryPair pair = complementary_pair(q_w, w, opts.budget);
  if (!pair.planar) fail(ErrorKind::NonPlanarPair, "starred region needs a planar pair");
  const Rational room = eps - abs_diff(q_w, q0);
  const Rational radius = room / (Rational(2) + v0.abs() / q_w.abs());
  PrimalRun run = run_primal(pair, q_w, w, radius, opts);

  ZeroCertificate c = std::move(run.cert);
  c.dual = true;
  c.dual_a_term = dual_term(c.a_term);
  c.dual_b_term = dual_term(c.b_term);
  const Realization g = witness_graph(c);
  const int n = g.graph.vertex_count();
  const std::size_t m = g.graph.edge_count();
  c.sign_lo = duality_factor_sign(c.bracket_lo, w, n, m) * run.z_lo;
  c.sign_hi = duality_factor_sign(c.bracket_hi, w, n, m) * run.z_hi;
  c.target_q0 = q0;
  c.target_v0 = v0;
  c.eps = eps;
  c.region = region;
  Rational d(0);
  for (const Rational& q : {c.bracket_lo, c.bracket_hi}) d = max(d, max(abs_diff(q, q0), abs_diff(q / w, v0)));
  c.achieved_distance = d;
  return c;
}

bool retryable(ErrorKind k) {
  return k == ErrorKind::SearchExhausted || k == ErrorKind::ImmediateExhaustion || k == ErrorKind::PoleWindowEmpty ||
         k == ErrorKind::NonPlanarPair || k == ErrorKind::WrongCase || k == ErrorKind::DegenerateEffectiveWeight;
}

/// Certificate for an interior point of region r. When no window fits
/// around q0 itself (q0 = 1, or a pole of the pair sits on q0) the working
/// point moves along q inside r, by at most eps/2.
ZeroCertificate interior_search(const Rational& q0, const Rational& v0, const Rational& eps, Region r,
                                const ZeroOptions& opts) {
  auto attempt = [&](const Rational& q) {
    if (is_starred(r)) return dual_at(q0, v0, eps, q, r, opts);
    return finish_primal(run_primal(pair_for(q, v0, opts), q, v0, eps - abs_diff(q, q0), opts), q0, v0, eps, r);
  };
  try {
    return attempt(q0);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PoleWindowEmpty) throw;
  }
  for (const Rational& d : retarget_offsets(eps))
    for (const Rational& q : {q0 + d, q0 - d}) {
      if (classify_region(q, v0) != r) continue;
      try {
        return attempt(q);
      } catch (const Error& e) {
        if (!retryable(e.kind())) throw;
      }
    }
  fail(ErrorKind::PoleWindowEmpty, "no certified window near q = " + q0.to_string());
}

ZeroCertificate boundary_search(const Rational& q0, const Rational& v0, const Rational& eps, const ZeroOptions& opts) {
  // Retarget along q to an interior point at distance <= eps/2.
  for (const Rational& d : retarget_offsets(eps)) {
    for (const Rational& q : {q0 + d, q0 - d}) {
      const Region r = classify_region(q, v0);
      if (!is_interior(r)) continue;
      try {
        if (is_starred(r)) return dual_at(q0, v0, eps, q, r, opts);
        return finish_primal(run_primal(pair_for(q, v0, opts), q, v0, eps, opts), q0, v0, eps, r);
      } catch (const Error& e) {
        if (!retryable(e.kind())) throw;
      }
    }
  }
  // Lines such as v = -1 stay on the boundary under q shifts: search pairs there.
  SearchBudget b = opts.budget;
  b.max_sp_term_size = std::max(b.max_sp_term_size, opts.boundary_term_size);
  std::vector<Rational> qs{q0};
  for (int k = 1; k <= 4; ++k) {
    qs.push_back(q0 + eps * Rational(k, 8));
    qs.push_back(q0 - eps * Rational(k, 8));
  }
  for (const Rational& q : qs) {
    if (q.is_zero() || q == Rational(1)) continue;
    try {
      const ComplementaryPair p = boundary_pair(q, v0, b, opts.planar_only);
      return finish_primal(run_primal(p, q, v0, eps, opts), q0, v0, eps, Region::Boundary);
    } catch (const Error& e) {
      if (!retryable(e.kind())) throw;
    }
  }
  fail(ErrorKind::SearchExhausted, "no certificate near boundary point (" + q0.to_string() + ", " + v0.to_string() + ")");
}

}  // namespace

// ---------------------------------------------------------------- find_st

ExponentWitness find_st(const RatFn& a, const RatFn& b, const RatFn& c, const Bracket& window, Parity s_parity,
                        Parity t_parity, std::size_t max_total) {
  if (a.is_constant() && b.is_constant())
    fail(ErrorKind::DegenerateRatio, "a and b are both constant, so log a / log b is fixed");
  const Rational mid = window.mid();
  auto holds = [&](const RatFn& r, bool positive_at_mid) {
    return ratfn_free_on(r, window) && (r(mid).sign() > 0) == positive_at_mid;
  };
  if (!(holds(a - RatFn(1), true) && holds(b, true) && holds(b - RatFn(1), false) && holds(c, true)))
    fail(ErrorKind::PreconditionViolated, "0 < b < 1 < a and c > 0 must hold on the window");

  constexpr int kSamples = 5;
  std::array<Rational, kSamples> x, av, bv, cv;
  std::array<double, kSamples> la{}, lb{}, lc{};
  for (int k = 0; k < kSamples; ++k) {
    x[k] = window.lo() + window.width() * Rational(k, kSamples - 1);
    av[k] = a(x[k]);
    bv[k] = b(x[k]);
    cv[k] = c(x[k]);
    la[k] = log_abs(av[k]);
    lb[k] = log_abs(bv[k]);
    lc[k] = log_abs(cv[k]);
  }
  auto h_sign = [&](int k, unsigned long s, unsigned long t) {
    return (pow(av[k], s) * pow(bv[k], t) - cv[k]).sign();
  };

  for (unsigned long s = 1; s < max_total; ++s) {
    if (!parity_ok(s, s_parity)) continue;
    // t*(q) solves s log a + t log b = log c.
    double tmin = INFINITY, tmax = -INFINITY;
    for (int k = 0; k < kSamples; ++k) {
      const double ts = (static_cast<double>(s) * la[k] - lc[k]) / -lb[k];
      tmin = std::min(tmin, ts);
      tmax = std::max(tmax, ts);
    }
    const double lo_t = std::max(1.0, std::floor(tmin) - 1);
    const double hi_t = std::ceil(tmax) + 1;
    if (lo_t + static_cast<double>(s) > static_cast<double>(max_total)) break;
    for (auto t = static_cast<unsigned long>(lo_t); static_cast<double>(t) <= hi_t && s + t <= max_total; ++t) {
      if (!parity_ok(t, t_parity)) continue;
      std::array<double, kSamples> g{};
      for (int k = 0; k < kSamples; ++k) g[k] = static_cast<double>(s) * la[k] + static_cast<double>(t) * lb[k] - lc[k];
      for (int k = 0; k + 1 < kSamples; ++k) {
        const bool plausible = (g[k] <= 0) != (g[k + 1] <= 0) || std::abs(g[k]) < 1e-9 || std::abs(g[k + 1]) < 1e-9;
        if (!plausible) continue;
        const int s0 = h_sign(k, s, t), s1 = h_sign(k + 1, s, t);
        if (s0 * s1 < 0) return {s, t, Bracket(x[k], x[k + 1])};
      }
    }
  }
  fail(ErrorKind::SearchExhausted, "no exponents with s + t <= " + std::to_string(max_total) + " on [" +
                                       window.lo().to_string() + ", " + window.hi().to_string() + "]");
}

RatFn assemble_f(const ComplementaryPair& pair, unsigned long s, unsigned long t, const Rational& v0) {
  const RatFn ya = effective_weight(pair.a, v0) + RatFn(1);
  const RatFn yb = effective_weight(pair.b, v0) + RatFn(1);
  return RatFn::variable() - RatFn(1) + pow(ya, s) * pow(yb, t);
}

// ---------------------------------------------------------------- witnesses

namespace {

std::vector<GadgetTerm> copies(const GadgetTerm& a, unsigned long s, const GadgetTerm& b, unsigned long t) {
  std::vector<GadgetTerm> parts(s, a);
  parts.insert(parts.end(), t, b);
  return parts;
}

}  // namespace

Realization witness_graph(const ZeroCertificate& c) {
  return realize(GadgetTerm::parallel(copies(c.a_term, c.s, c.b_term, c.t)), c.v0);
}

Multigraph dual_witness_graph(const ZeroCertificate& c, const Rational& w) {
  const GadgetTerm da = c.dual_a_term ? *c.dual_a_term : dual_term(c.a_term);
  const GadgetTerm db = c.dual_b_term ? *c.dual_b_term : dual_term(c.b_term);
  const Realization r = realize(GadgetTerm::series(copies(da, c.s, db, c.t)));
  return r.graph.identify(r.x, r.y).with_uniform_weight(w);
}

// ---------------------------------------------------------------- find_zero

ZeroCertificate find_zero(const Rational& q0, const Rational& v0, const Rational& eps, const ZeroOptions& opts) {
  if (eps.sign() <= 0) fail(ErrorKind::InvalidArgument, "eps must be positive");
  const Region r = classify_region(q0, v0);
  if (r == Region::Unsupported)
    fail(ErrorKind::UnsupportedRegion, "(" + q0.to_string() + ", " + v0.to_string() + ") lies in q > 4, v < -q");
  if (is_interior(r)) return interior_search(q0, v0, eps, r, opts);
  if (r == Region::Boundary) return boundary_search(q0, v0, eps, opts);
  fail(ErrorKind::NotInteriorPoint, "(" + q0.to_string() + ", " + v0.to_string() + ") is " + std::string(to_string(r)));
}

ZeroCertificate find_zero_dual(const Rational& q0, const Rational& v0, const Rational& eps, const ZeroOptions& opts) {
  if (eps.sign() <= 0) fail(ErrorKind::InvalidArgument, "eps must be positive");
  const Region r = classify_region(q0, v0);
  if (!is_starred(r))
    fail(ErrorKind::NotStarredRegion, "(" + q0.to_string() + ", " + v0.to_string() + ") is " + std::string(to_string(r)));
  return interior_search(q0, v0, eps, r, opts);
}

// ---------------------------------------------------------------- verification

namespace {

struct Reject {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Reject{why};
}

}  // namespace

bool verify_certificate(const ZeroCertificate& c, bool exhaustive, std::string* diag) {
  try {
    const Rational& lo = c.bracket_lo;
    const Rational& hi = c.bracket_hi;
    require(lo < hi, "bracket endpoints out of order");
    require(c.s >= 1 && c.t >= 1, "exponents must be positive");
    require((c.a_type == GadgetType::AMinus && c.b_type == GadgetType::BPlus) ||
                (c.a_type == GadgetType::APlus && c.b_type == GadgetType::BMinus),
            "types are not complementary");
    require(!(c.a_term.is_dipole() && c.b_term.is_dipole()), "both gadgets are dipoles");
    require(lo > Rational(1) || hi < Rational(1), "bracket contains q = 1");
    require(lo.sign() > 0 || hi.sign() < 0, "bracket contains q = 0");
    require(c.sign_lo * c.sign_hi == -1, "recorded signs do not change");

    const Side side = side_of(lo, c.a_type);
    require(parity_ok(c.s, side.s_parity) && parity_ok(c.t, side.t_parity), "exponent parity does not match the case");

    const SplitZ sa = term_split(c.a_term, c.v0);
    const SplitZ sb = term_split(c.b_term, c.v0);
    std::array<Evaluated, 2> ev;
    std::array<int, 2> z{};
    const std::array<Rational, 2> ends = {lo, hi};
    for (int i = 0; i < 2; ++i) {
      const Rational& q = ends[i];
      require(classify_term(c.a_term, q, c.v0) == c.a_type, "A has the wrong type at " + q.to_string());
      require(classify_term(c.b_term, q, c.v0) == c.b_type, "B has the wrong type at " + q.to_string());
      ev[i] = evaluate(c.a_term, c.b_term, sa, sb, c.s, c.t, c.v0, q);
      require(!ev[i].p_a.is_zero() && !ev[i].p_b.is_zero(), "prefactor vanishes at " + q.to_string());
      z[i] = z_sign_product(q, ev[i], c.s, c.t);
      require(z[i] == z_sign_closed(q, sa, sb, c.s, c.t), "product formula and closed form disagree at " + q.to_string());
    }
    require(ev[0].f.sign() * ev[1].f.sign() < 0, "f does not change sign on the bracket");
    const std::vector<SignPair> expect = {{"q", lo.sign(), hi.sign()},
                                          {"P_A", ev[0].p_a.sign(), ev[1].p_a.sign()},
                                          {"P_B", ev[0].p_b.sign(), ev[1].p_b.sign()},
                                          {"f", ev[0].f.sign(), ev[1].f.sign()}};
    require(c.prefactor_witness.size() == expect.size(), "prefactor witness has the wrong length");
    for (std::size_t i = 0; i < expect.size(); ++i) {
      const SignPair& p = c.prefactor_witness[i];
      require(p.id == expect[i].id && p.sign_lo == expect[i].sign_lo && p.sign_hi == expect[i].sign_hi,
              "prefactor witness " + expect[i].id + " does not match");
    }
    require(c.witness_edge_count == c.s * c.a_term.edge_count() + c.t * c.b_term.edge_count(),
            "witness edge count does not match");

    Rational dist(0);
    if (!c.dual) {
      require(z[0] == c.sign_lo && z[1] == c.sign_hi, "recorded signs of Z_G do not match");
      const Rational mid = midpoint(lo, hi);
      require(abs_diff(mid, c.target_q0) + (hi - lo) <= c.eps, "bracket is not within eps of the target");
      dist = max(abs_diff(lo, c.target_q0), abs_diff(hi, c.target_q0));
      if (exhaustive) {
        const Realization g = witness_graph(c);
        if (g.graph.edge_count() <= kDefaultSubsetBudget) {
          require(z_subset(g.graph, lo).sign() == c.sign_lo, "subset expansion disagrees at lo");
          require(z_subset(g.graph, hi).sign() == c.sign_hi, "subset expansion disagrees at hi");
        }
      }
    } else {
      require(c.dual_a_term && *c.dual_a_term == dual_term(c.a_term), "dual A is not the structural dual");
      require(c.dual_b_term && *c.dual_b_term == dual_term(c.b_term), "dual B is not the structural dual");
      const Realization g = witness_graph(c);
      const int n = g.graph.vertex_count();
      const std::size_t m = g.graph.edge_count();
      const std::array<int, 2> rec = {c.sign_lo, c.sign_hi};
      for (int i = 0; i < 2; ++i) {
        const Rational& q = ends[i];
        const Rational w = q / c.v0;
        require(duality_factor_sign(q, c.v0, n, m) * z[i] == rec[i], "recorded dual signs do not match");
        // Z_{G*}(q, q/v) = q^(1-n) (q/v)^m Z_G(q, v)
        const Multigraph gd = dual_witness_graph(c, w);
        const Rational zd = z_del_con(gd, q);
        const Rational zg = z_del_con(g.graph, q);
        Rational factor = pow(w, m);
        factor = n >= 1 ? factor / pow(q, static_cast<unsigned long>(n - 1)) : factor * q;
        require(zd == factor * zg, "duality identity fails at " + q.to_string());
        require(zd.sign() == rec[i], "dual graph Z has the wrong sign at " + q.to_string());
        if (exhaustive && gd.edge_count() <= kDefaultSubsetBudget)
          require(z_subset(gd, q).sign() == rec[i], "subset expansion of the dual disagrees at " + q.to_string());
        const Rational d = max(abs_diff(q, c.target_q0), abs_diff(w, c.target_v0));
        require(d <= c.eps, "dual witness point is not within eps of the target");
        dist = max(dist, d);
      }
    }
    require(dist == c.achieved_distance, "achieved distance does not match");
    return true;
  } catch (const Reject& r) {
    if (diag) *diag = r.why;
  } catch (const Error& e) {
    if (diag) *diag = e.what();
  }
  return false;
}

// ---------------------------------------------------------------- JSON

namespace {

using ojson = nlohmann::ordered_json;

GadgetType type_from_string(const std::string& s) {
  for (GadgetType t : {GadgetType::APlus, GadgetType::AMinus, GadgetType::BPlus, GadgetType::BMinus, GadgetType::Boundary})
    if (to_string(t) == s) return t;
  fail(ErrorKind::ParseError, "unknown gadget type " + s);
}

}  // namespace

std::string certificate_to_json(const ZeroCertificate& c) {
  ojson j;
  j["a_term"] = c.a_term.to_string();
  j["b_term"] = c.b_term.to_string();
  j["a_type"] = std::string(to_string(c.a_type));
  j["b_type"] = std::string(to_string(c.b_type));
  j["s"] = c.s;
  j["t"] = c.t;
  j["v0"] = c.v0.to_string();
  j["bracket"] = ojson::array({c.bracket_lo.to_string(), c.bracket_hi.to_string()});
  j["sign_lo"] = c.sign_lo;
  j["sign_hi"] = c.sign_hi;
  ojson pw = ojson::array();
  for (const auto& p : c.prefactor_witness) pw.push_back({{"id", p.id}, {"sign_lo", p.sign_lo}, {"sign_hi", p.sign_hi}});
  j["prefactor_witness"] = pw;
  j["dual"] = c.dual;
  j["dual_a_term"] = c.dual_a_term ? ojson(c.dual_a_term->to_string()) : ojson(nullptr);
  j["dual_b_term"] = c.dual_b_term ? ojson(c.dual_b_term->to_string()) : ojson(nullptr);
  j["target"] = {{"q0", c.target_q0.to_string()}, {"v0", c.target_v0.to_string()}, {"eps", c.eps.to_string()}};
  j["working_target"] = {{"q", c.working_q.to_string()}, {"v", c.working_v.to_string()}};
  j["region"] = std::string(to_string(c.region));
  j["achieved_distance"] = c.achieved_distance.to_string();
  j["witness_edge_count"] = c.witness_edge_count;
  return j.dump(2) + "\n";
}

ZeroCertificate certificate_from_json(const std::string& text) {
  try {
    const ojson j = ojson::parse(text);
    auto rat = [](const ojson& v) { return Rational::parse(v.get<std::string>()); };
    auto term = [](const ojson& v) { return GadgetTerm::parse(v.get<std::string>()); };
    ZeroCertificate c;
    c.a_term = term(j.at("a_term"));
    c.b_term = term(j.at("b_term"));
    c.a_type = type_from_string(j.at("a_type").get<std::string>());
    c.b_type = type_from_string(j.at("b_type").get<std::string>());
    c.s = j.at("s").get<unsigned long>();
    c.t = j.at("t").get<unsigned long>();
    c.v0 = rat(j.at("v0"));
    const ojson& br = j.at("bracket");
    if (!br.is_array() || br.size() != 2) fail(ErrorKind::ParseError, "bracket must have two entries");
    c.bracket_lo = rat(br[0]);
    c.bracket_hi = rat(br[1]);
    c.sign_lo = j.at("sign_lo").get<int>();
    c.sign_hi = j.at("sign_hi").get<int>();
    for (const auto& p : j.at("prefactor_witness"))
      c.prefactor_witness.push_back({p.at("id").get<std::string>(), p.at("sign_lo").get<int>(), p.at("sign_hi").get<int>()});
    c.dual = j.at("dual").get<bool>();
    if (!j.at("dual_a_term").is_null()) c.dual_a_term = term(j.at("dual_a_term"));
    if (!j.at("dual_b_term").is_null()) c.dual_b_term = term(j.at("dual_b_term"));
    const ojson& tg = j.at("target");
    c.target_q0 = rat(tg.at("q0"));
    c.target_v0 = rat(tg.at("v0"));
    c.eps = rat(tg.at("eps"));
    const ojson& wt = j.at("working_target");
    c.working_q = rat(wt.at("q"));
    c.working_v = rat(wt.at("v"));
    const auto region = region_from_string(j.at("region").get<std::string>());
    if (!region) fail(ErrorKind::ParseError, "unknown region");
    c.region = *region;
    c.achieved_distance = rat(j.at("achieved_distance"));
    c.witness_edge_count = j.at("witness_edge_count").get<std::size_t>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("certificate JSON: ") + e.what());
  }
}

}  // namespace tutte
