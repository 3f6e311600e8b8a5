#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "tutte/gadgets.hpp"
#include "tutte/poly.hpp"
#include "tutte/regions.hpp"

namespace tutte {

enum class Parity { Even, Odd, Any };

struct ExponentWitness {
  unsigned long s = 0;
  unsigned long t = 0;
  /// h = a^s b^t - c has strictly opposite signs at the endpoints.
  Bracket bracket;
};

/// Search for exponents with a(q)^s b(q)^t = c(q) somewhere in the window.
/// Requires 0 < b < 1 < a and c > 0 on the closed window (PreconditionViolated)
/// and a, b not both constant (DegenerateRatio). Logarithms only propose
/// candidates; acceptance is an exact sign change of h at two dyadic points.
/// SearchExhausted once s + t would exceed `max_total`.
ExponentWitness find_st(const RatFn& a, const RatFn& b, const RatFn& c, const Bracket& window, Parity s_parity,
                        Parity t_parity, std::size_t max_total = 10000);

/// q - 1 + (1 + v_A)^s (1 + v_B)^t with the edges of both terms weighted v0.
RatFn assemble_f(const ComplementaryPair& pair, unsigned long s, unsigned long t, const Rational& v0);

struct ZeroOptions {
  SearchBudget budget;
  /// Budget used by the closure search at boundary points.
  std::size_t boundary_term_size = 20;
  std::size_t max_exponent_total = 10000;
  bool planar_only = false;
};

struct SignPair {
  std::string id;
  int sign_lo = 0;
  int sign_hi = 0;
};

/// A witness G = Parallel(A^s, B^t), its edges weighted v0, and a bracket on
/// which Z_G(., v0) changes sign. When `dual` is set the certified graph is the
/// planar dual G*: Series(dual A^s, dual B^t) with its terminals identified and
/// every edge weighted q/v0, which moves along the line v = q/v0.
struct ZeroCertificate {
  GadgetTerm a_term = GadgetTerm::edge(Rational(0));
  GadgetTerm b_term = GadgetTerm::edge(Rational(0));
  GadgetType a_type = GadgetType::Boundary;
  GadgetType b_type = GadgetType::Boundary;
  unsigned long s = 0;
  unsigned long t = 0;
  Rational v0;
  Rational bracket_lo;
  Rational bracket_hi;
  /// Signs of Z of the certified graph at the bracket endpoints.
  int sign_lo = 0;
  int sign_hi = 0;
  /// q, P_A = z_diff(A)/q^2, P_B, and f at both endpoints.
  std::vector<SignPair> prefactor_witness;
  bool dual = false;
  std::optional<GadgetTerm> dual_a_term;
  std::optional<GadgetTerm> dual_b_term;
  Rational target_q0;
  Rational target_v0;
  Rational eps;
  Rational working_q;
  Rational working_v;
  Region region = Region::Boundary;
  Rational achieved_distance;
  std::size_t witness_edge_count = 0;
};

/// Realized witness graph of the certificate's primal side.
Realization witness_graph(const ZeroCertificate& c);
/// Realized planar dual of the witness with every edge weighted w.
Multigraph dual_witness_graph(const ZeroCertificate& c, const Rational& w);

/// Certificate for a real zero within eps of (q0, v0). Dispatches starred
/// regions to find_zero_dual. Errors: UnsupportedRegion, NotInteriorPoint,
/// SearchExhausted, PoleWindowEmpty.
ZeroCertificate find_zero(const Rational& q0, const Rational& v0, const Rational& eps, const ZeroOptions& opts = {});

/// Certificate for a starred region through the primal point (q0, q0/v0).
/// NotStarredRegion unless classify_region(q0, v0) is starred.
ZeroCertificate find_zero_dual(const Rational& q0, const Rational& v0, const Rational& eps,
                               const ZeroOptions& opts = {});

/// Recomputes the certificate. `exhaustive` adds raw subset expansion when the
/// certified graph has at most 24 edges. Never throws; `diag` gets the reason
/// for a rejection.
bool verify_certificate(const ZeroCertificate& c, bool exhaustive, std::string* diag = nullptr);

std::string certificate_to_json(const ZeroCertificate& c);
/// Throws ParseError on malformed input.
ZeroCertificate certificate_from_json(const std::string& text);

}  // namespace tutte
