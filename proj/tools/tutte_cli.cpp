// Command-line front end: classify, pair, find-zero, verify, sweep, region-map.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "tutte/error.hpp"
#include "tutte/gadgets.hpp"
#include "tutte/regions.hpp"
#include "tutte/zeros.hpp"

using namespace tutte;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUnsupported = 2;
constexpr int kExhausted = 3;
constexpr int kMalformed = 4;

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnsupportedRegion:
    case ErrorKind::NotInteriorPoint:
    case ErrorKind::NotStarredRegion: return kUnsupported;
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument: return kMalformed;
    default: return kExhausted;
  }
}

struct BudgetFlags {
  std::size_t path = SearchBudget{}.max_path_length;
  std::size_t sp = SearchBudget{}.max_sp_term_size;
  int kn = SearchBudget{}.max_kn;
  std::size_t boundary = ZeroOptions{}.boundary_term_size;
  std::size_t exponent = ZeroOptions{}.max_exponent_total;
  bool planar_only = false;

  void attach(CLI::App* app) {
    app->add_option("--budget-path", path, "longest path gadget tried")->capture_default_str();
    app->add_option("--budget-sp", sp, "largest series-parallel term in the closure search")->capture_default_str();
    app->add_option("--budget-kn", kn, "largest n for K_n minus an edge leaves")->capture_default_str();
    app->add_option("--budget-boundary", boundary, "term size for pair search on boundary lines")->capture_default_str();
    app->add_option("--budget-exponent", exponent, "cap on s + t")->capture_default_str();
    app->add_flag("--planar-only", planar_only, "reject non-planar pairs");
  }

  ZeroOptions options() const {
    ZeroOptions o;
    o.budget.max_path_length = path;
    o.budget.max_sp_term_size = sp;
    o.budget.max_kn = kn;
    o.boundary_term_size = boundary;
    o.max_exponent_total = exponent;
    o.planar_only = planar_only;
    return o;
  }
};

// Rationals are taken as strings so "-39/20" and "0.1" parse exactly.
Rational rat(const std::string& s) { return Rational::parse(s); }

std::vector<Rational> grid(const Rational& lo, const Rational& hi, int steps) {
  if (steps < 1) fail(ErrorKind::InvalidArgument, "steps must be positive");
  if (steps == 1) return {lo};
  std::vector<Rational> out;
  for (int i = 0; i < steps; ++i) out.push_back(lo + (hi - lo) * Rational(i, steps - 1));
  return out;
}

int write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return kMalformed;
  }
  out << text;
  return kOk;
}

int cmd_classify(const std::string& qs, const std::string& vs) {
  const Rational q = rat(qs), v = rat(vs);
  const Region r = classify_region(q, v);
  if (r == Region::Unsupported)
    std::cout << "Unsupported (open: q>4, v<-q)\n";
  else
    std::cout << to_string(r) << "\n";
  if (q.sign() > 0 && q < branch_end()) {
    const DiamondBranches d = v_diamond(q, Rational(1, 1000000000));
    std::cout << "v_plus in [" << d.v_plus.lo().to_decimal(12) << ", " << d.v_plus.hi().to_decimal(12) << "]\n";
    std::cout << "v_minus in [" << d.v_minus.lo().to_decimal(12) << ", " << d.v_minus.hi().to_decimal(12) << "]\n";
  }
  return kOk;
}

int cmd_pair(const std::string& qs, const std::string& vs, const BudgetFlags& b) {
  const Rational q = rat(qs), v = rat(vs);
  const ZeroOptions o = b.options();
  const Region r = classify_region(q, v);
  SearchBudget boundary = o.budget;
  boundary.max_sp_term_size = std::max(boundary.max_sp_term_size, o.boundary_term_size);
  const ComplementaryPair p =
      r == Region::Boundary ? boundary_pair(q, v, boundary, o.planar_only) : complementary_pair(q, v, o.budget);
  std::cout << "region " << to_string(r) << "\n";
  std::cout << "A " << p.a.to_string() << " " << to_string(p.a_type) << "\n";
  std::cout << "B " << p.b.to_string() << " " << to_string(p.b_type) << "\n";
  std::cout << "planar " << (p.planar ? "true" : "false") << "\n";
  return kOk;
}

int cmd_find_zero(const std::string& qs, const std::string& vs, const std::string& es, const std::string& out,
                  const BudgetFlags& b) {
  const ZeroCertificate c = find_zero(rat(qs), rat(vs), rat(es), b.options());
  if (!out.empty()) {
    const int rc = write_or_print(out, certificate_to_json(c));
    if (rc != kOk) return rc;
  }
  std::cout << "certified " << (c.dual ? "dual " : "") << "zero in [" << c.bracket_lo.to_string() << ", "
            << c.bracket_hi.to_string() << "] ~ " << c.bracket_lo.to_decimal(8) << "\n";
  std::cout << "region " << to_string(c.region) << " s=" << c.s << " t=" << c.t
            << " witness_edges=" << c.witness_edge_count << " distance=" << c.achieved_distance.to_decimal(8) << "\n";
  if (out.empty()) std::cout << certificate_to_json(c);
  return kOk;
}

int cmd_verify(const std::string& path, bool exhaustive) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return kMalformed;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  ZeroCertificate c;
  try {
    c = certificate_from_json(ss.str());
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kMalformed;
  }
  std::string diag;
  if (verify_certificate(c, exhaustive, &diag)) {
    std::cout << "valid\n";
    return kOk;
  }
  std::cout << "invalid: " << diag << "\n";
  return kInvalid;
}

std::string outcome_of(ErrorKind k) {
  return (k == ErrorKind::UnsupportedRegion || k == ErrorKind::NotInteriorPoint) ? "unsupported" : "exhausted";
}

int cmd_sweep(const std::string& qmin, const std::string& qmax, const std::string& vmin, const std::string& vmax,
              int steps, const std::string& es, const std::string& out, const BudgetFlags& b) {
  const Rational eps = rat(es);
  const ZeroOptions o = b.options();
  std::ostringstream csv;
  csv << "q0,v0,region,outcome,achieved_distance,s,t,witness_edge_count,wall_time_ms\n";
  std::map<std::string, std::pair<int, int>> tally;  // region -> (certified, total)
  for (const Rational& q : grid(rat(qmin), rat(qmax), steps)) {
    for (const Rational& v : grid(rat(vmin), rat(vmax), steps)) {
      const std::string region(to_string(classify_region(q, v)));
      const auto t0 = std::chrono::steady_clock::now();
      std::string outcome = "certified", dist, s, t, edges;
      try {
        const ZeroCertificate c = find_zero(q, v, eps, o);
        dist = c.achieved_distance.to_string();
        s = std::to_string(c.s);
        t = std::to_string(c.t);
        edges = std::to_string(c.witness_edge_count);
      } catch (const Error& e) {
        outcome = outcome_of(e.kind());
      }
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
      csv << q.to_string() << "," << v.to_string() << "," << region << "," << outcome << "," << dist << "," << s << ","
          << t << "," << edges << "," << ms << "\n";
      auto& [ok, total] = tally[region];
      ok += outcome == "certified";
      ++total;
    }
  }
  const int rc = write_or_print(out, csv.str());
  for (const auto& [region, counts] : tally)
    std::cerr << region << ": " << counts.first << "/" << counts.second << " certified\n";
  return rc;
}

int cmd_region_map(int resolution, const std::string& qmin, const std::string& qmax, const std::string& vmin,
                   const std::string& vmax, const std::string& out) {
  std::ostringstream csv;
  csv << "q,v,region\n";
  for (const Rational& q : grid(rat(qmin), rat(qmax), resolution))
    for (const Rational& v : grid(rat(vmin), rat(vmax), resolution))
      csv << q.to_string() << "," << v.to_string() << "," << to_string(classify_region(q, v)) << "\n";
  return write_or_print(out, csv.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real zeros of the random-cluster Tutte polynomial: regions, gadgets and certificates"};
  app.require_subcommand(1);

  std::string q, v, q0, eps = "1/10", out, path, qmin = "-2", qmax = "5", vmin = "-6", vmax = "1";
  bool exhaustive = false;
  int steps = 10, resolution = 50;
  BudgetFlags budget;

  auto* classify = app.add_subcommand("classify", "print the region of (q, v)");
  classify->add_option("--q", q, "q as p/q or decimal")->required();
  classify->add_option("--v", v, "v as p/q or decimal")->required();

  auto* pair = app.add_subcommand("pair", "print a complementary pair at (q, v)");
  pair->add_option("--q", q)->required();
  pair->add_option("--v", v)->required();
  budget.attach(pair);

  auto* find = app.add_subcommand("find-zero", "certify a real zero near (q0, v); exit 0 certified, 2 unsupported, 3 exhausted");
  find->add_option("--q0", q0)->required();
  find->add_option("--v", v)->required();
  find->add_option("--eps", eps)->capture_default_str();
  find->add_option("--out", out, "certificate JSON path");
  budget.attach(find);

  auto* verify = app.add_subcommand("verify", "re-check a certificate; exit 0 valid, 1 invalid, 4 malformed");
  verify->add_option("cert", path)->required();
  verify->add_flag("--exhaustive", exhaustive, "add subset expansion for witnesses with at most 24 edges");

  auto* sweep = app.add_subcommand(
      "sweep", "grid of find-zero runs; CSV columns q0,v0,region,outcome,achieved_distance,s,t,witness_edge_count,wall_time_ms");
  sweep->add_option("--qmin", qmin)->required();
  sweep->add_option("--qmax", qmax)->required();
  sweep->add_option("--vmin", vmin)->required();
  sweep->add_option("--vmax", vmax)->required();
  sweep->add_option("--steps", steps, "grid points per axis")->capture_default_str();
  sweep->add_option("--eps", eps)->capture_default_str();
  sweep->add_option("--out", out, "CSV path (stdout when absent)");
  budget.attach(sweep);

  auto* rmap = app.add_subcommand("region-map", "classification grid; CSV columns q,v,region");
  rmap->add_option("--resolution", resolution, "grid points per axis")->capture_default_str();
  rmap->add_option("--qmin", qmin)->capture_default_str();
  rmap->add_option("--qmax", qmax)->capture_default_str();
  rmap->add_option("--vmin", vmin)->capture_default_str();
  rmap->add_option("--vmax", vmax)->capture_default_str();
  rmap->add_option("--out", out, "CSV path (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*classify) return cmd_classify(q, v);
    if (*pair) return cmd_pair(q, v, budget);
    if (*find) return cmd_find_zero(q0, v, eps, out, budget);
    if (*verify) return cmd_verify(path, exhaustive);
    if (*sweep) return cmd_sweep(qmin, qmax, vmin, vmax, steps, eps, out, budget);
    if (*rmap) return cmd_region_map(resolution, qmin, qmax, vmin, vmax, out);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kOk;
}
