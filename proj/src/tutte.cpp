#include "tutte/tutte.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "tutte/error.hpp"

namespace tutte {

namespace {

class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1), comps_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int a) const {
    while (parent_[a] != a) a = parent_[a];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history_.push_back(-1);
      return;
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --comps_;
    history_.push_back(b);
  }
  void rollback() {
    const int b = history_.back();
    history_.pop_back();
    if (b < 0) return;
    const int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
    ++comps_;
  }
  int components() const { return comps_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
  int comps_;
};

void check_budget(const Multigraph& g, std::size_t budget) {
  if (g.edge_count() > budget)
    fail(ErrorKind::BudgetExceeded, "subset expansion over " + std::to_string(g.edge_count()) +
                                        " edges exceeds budget " + std::to_string(budget));
}

/// Subset enumeration with all edges of one weight: counts[same][k][j] is the
/// number of subsets with k components, j edges, and terminals joined (same=1)
/// or not. Terminals are ignored when x < 0.
struct CountTable {
  int n = 0;
  int m = 0;
  std::vector<std::uint64_t> c;  // [same][k][j]
  std::uint64_t& at(int same, int k, int j) { return c[(static_cast<std::size_t>(same) * (n + 1) + k) * (m + 1) + j]; }
};

CountTable count_subsets(const Multigraph& g, int x, int y) {
  CountTable t;
  t.n = g.vertex_count();
  t.m = static_cast<int>(g.edge_count());
  t.c.assign(2 * static_cast<std::size_t>(t.n + 1) * (t.m + 1), 0);
  RollbackDsu d(t.n);
  const auto& edges = g.edges();
  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i == t.m) {
      const int same = x >= 0 && d.find(x) == d.find(y) ? 1 : 0;
      ++t.at(same, d.components(), j);
      return;
    }
    self(self, i + 1, j);
    d.unite(edges[i].u, edges[i].v);
    self(self, i + 1, j + 1);
    d.rollback();
  };
  rec(rec, 0, 0);
  return t;
}

/// Generic-weight enumeration: coefficient of q^k split by terminal status.
std::pair<std::vector<Rational>, std::vector<Rational>> weighted_subsets(const Multigraph& g, int x, int y) {
  const int n = g.vertex_count();
  const int m = static_cast<int>(g.edge_count());
  std::vector<Rational> same(static_cast<std::size_t>(n + 1)), diff(static_cast<std::size_t>(n + 1));
  RollbackDsu d(n);
  const auto& edges = g.edges();
  std::vector<Rational> prod(static_cast<std::size_t>(m + 1));
  prod[0] = Rational(1);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      auto& target = x >= 0 && d.find(x) == d.find(y) ? same : diff;
      target[d.components()] += prod[i];
      return;
    }
    prod[i + 1] = prod[i];
    self(self, i + 1);
    if (edges[i].w.is_zero()) return;
    prod[i + 1] = prod[i] * edges[i].w;
    d.unite(edges[i].u, edges[i].v);
    self(self, i + 1);
    d.rollback();
  };
  rec(rec, 0);
  return {std::move(same), std::move(diff)};
}

UniPoly poly_from_counts(CountTable& t, int same, const Rational& w) {
  std::vector<Rational> wp(static_cast<std::size_t>(t.m + 1));
  wp[0] = Rational(1);
  for (int j = 1; j <= t.m; ++j) wp[j] = wp[j - 1] * w;
  std::vector<Rational> coeffs(static_cast<std::size_t>(t.n + 1));
  for (int k = 0; k <= t.n; ++k)
    for (int j = 0; j <= t.m; ++j) {
      const std::uint64_t c = t.at(same, k, j);
      if (c) coeffs[k] += Rational(Integer(static_cast<unsigned long>(c))) * wp[j];
    }
  return UniPoly(std::move(coeffs));
}

std::pair<UniPoly, UniPoly> split_by_subsets(const Multigraph& g, int x, int y) {
  if (const auto w = g.uniform_weight()) {
    CountTable t = count_subsets(g, x, y);
    return {poly_from_counts(t, 1, *w), poly_from_counts(t, 0, *w)};
  }
  auto [s, d] = weighted_subsets(g, x, y);
  return {UniPoly(std::move(s)), UniPoly(std::move(d))};
}

// ---------------------------------------------------------------- deletion-contraction

struct DcGraph {
  int n = 0;
  std::vector<WeightedEdge> e;
};

/// Applies the value-preserving reductions (loops, zero edges, parallel
/// classes, isolated/pendant vertices, series pairs) until every remaining
/// vertex has degree >= 3. Removed parts are multiplied into `factor`.
class Reducer {
 public:
  Reducer(const DcGraph& g, const Rational& q) : q_(q), adj_(static_cast<std::size_t>(g.n)), alive_(static_cast<std::size_t>(g.n), true) {
    for (const auto& e : g.e) add_edge(e.u, e.v, e.w);
    for (int v = 0; v < g.n; ++v) queue_.push_back(v);
  }

  void run() {
    while (!queue_.empty() && !factor_.is_zero()) {
      const int x = queue_.back();
      queue_.pop_back();
      if (!alive_[x]) continue;
      const std::size_t deg = adj_[x].size();
      if (deg == 0) {
        factor_ *= q_;
        alive_[x] = false;
      } else if (deg == 1) {
        const auto [y, w] = *adj_[x].begin();
        factor_ *= q_ + w;
        erase_edge(x, y);
        alive_[x] = false;
        queue_.push_back(y);
      } else if (deg == 2) {
        auto it = adj_[x].begin();
        const auto [a, w1] = *it;
        const auto [b, w2] = *++it;
        erase_edge(x, a);
        erase_edge(x, b);
        alive_[x] = false;
        const Rational s = q_ + w1 + w2;
        if (!s.is_zero()) {
          factor_ *= s;
          add_edge(a, b, w1 * w2 / s);
        } else {
          factor_ *= w1 * w2;
          merge(a, b);
        }
        queue_.push_back(a);
        queue_.push_back(b);
      }
    }
  }

  const Rational& factor() const { return factor_; }

  DcGraph remaining() const {
    std::vector<int> id(alive_.size(), -1);
    DcGraph g;
    for (std::size_t v = 0; v < alive_.size(); ++v)
      if (alive_[v]) id[v] = g.n++;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (!alive_[v]) continue;
      for (const auto& [u, w] : adj_[v])
        if (static_cast<int>(v) < u) g.e.push_back({id[v], id[u], w});
    }
    return g;
  }

 private:
  void add_edge(int u, int v, const Rational& w) {
    if (w.is_zero()) return;
    if (u == v) {
      factor_ *= w + 1;
      return;
    }
    auto it = adj_[u].find(v);
    if (it == adj_[u].end()) {
      adj_[u].emplace(v, w);
      adj_[v].emplace(u, w);
    } else {
      const Rational merged = (it->second + 1) * (w + 1) - 1;
      if (merged.is_zero()) {
        erase_edge(u, v);
      } else {
        it->second = merged;
        adj_[v][u] = merged;
      }
    }
    queue_.push_back(u);
    queue_.push_back(v);
  }

  void erase_edge(int u, int v) {
    adj_[u].erase(v);
    adj_[v].erase(u);
  }

  // Identify b into a.
  void merge(int a, int b) {
    std::vector<std::pair<int, Rational>> moved(adj_[b].begin(), adj_[b].end());
    for (const auto& [u, w] : moved) erase_edge(b, u);
    alive_[b] = false;
    for (const auto& [u, w] : moved) add_edge(a, u == b ? a : u, w);
  }

  const Rational& q_;
  Rational factor_{1};
  std::vector<std::map<int, Rational>> adj_;
  std::vector<bool> alive_;
  std::vector<int> queue_;
};

DcGraph contract(const DcGraph& g, int a, int b) {
  Multigraph m(g.n);
  for (const auto& x : g.e) m.add_edge(x.u, x.v, x.w);
  const Multigraph c = m.identify(std::min(a, b), std::max(a, b));
  return {c.vertex_count(), c.edges()};
}

class DelCon {
 public:
  explicit DelCon(Rational q) : q_(std::move(q)) {}

  Rational eval(const DcGraph& input) {
    Reducer r(input, q_);
    r.run();
    Rational factor = r.factor();
    if (factor.is_zero()) return factor;
    const DcGraph g = r.remaining();
    if (g.n == 0) return factor;

    std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (const auto& e : g.e) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    int k = 0;
    for (int s = 0; s < g.n; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> stack{s};
      comp[s] = k;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int o : adj[x])
          if (comp[o] < 0) {
            comp[o] = k;
            stack.push_back(o);
          }
      }
      ++k;
    }
    if (k == 1) return factor * branch(g);
    for (int c = 0; c < k && !factor.is_zero(); ++c) {
      std::vector<int> id(static_cast<std::size_t>(g.n), -1);
      DcGraph h;
      for (int v = 0; v < g.n; ++v)
        if (comp[v] == c) id[v] = h.n++;
      for (const auto& e : g.e)
        if (comp[e.u] == c) h.e.push_back({id[e.u], id[e.v], e.w});
      factor *= branch(h);
    }
    return factor;
  }

 private:
  static std::string key_of(const DcGraph& g) {
    // Colour refinement gives a relabelling that is stable under many vertex
    // permutations; ties fall back to the current index. Exact key equality
    // decides memo hits, so an imperfect canonical form only costs misses.
    std::vector<std::size_t> color(static_cast<std::size_t>(g.n), 0);
    for (const auto& e : g.e) {
      ++color[e.u];
      ++color[e.v];
    }
    for (int round = 0; round < 3; ++round) {
      std::vector<std::vector<std::size_t>> sig(static_cast<std::size_t>(g.n));
      for (const auto& e : g.e) {
        sig[e.u].push_back(color[e.v] * 1000003u ^ e.w.hash());
        sig[e.v].push_back(color[e.u] * 1000003u ^ e.w.hash());
      }
      std::vector<std::size_t> next(color.size());
      for (int v = 0; v < g.n; ++v) {
        std::sort(sig[v].begin(), sig[v].end());
        std::size_t h = color[v];
        for (auto s : sig[v]) h = h * 0x100000001b3ULL ^ s;
        next[v] = h;
      }
      color = std::move(next);
    }
    std::vector<int> order(static_cast<std::size_t>(g.n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
    std::vector<int> pos(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    std::vector<std::tuple<int, int, const Rational*>> edges;
    for (const auto& e : g.e) {
      int a = pos[e.u], b = pos[e.v];
      if (a > b) std::swap(a, b);
      edges.emplace_back(a, b, &e.w);
    }
    std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
      if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
      if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) < std::get<1>(y);
      return *std::get<2>(x) < *std::get<2>(y);
    });
    std::string key = std::to_string(g.n);
    for (const auto& [a, b, w] : edges) key += ";" + std::to_string(a) + "," + std::to_string(b) + "," + w->to_string();
    return key;
  }

  // Z of a connected, fully reduced graph: Z = Z(G - e) + w Z(G / e).
  Rational branch(const DcGraph& g) {
    if (g.e.empty()) return pow(q_, static_cast<unsigned long>(g.n));
    const std::string key = key_of(g);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
    for (const auto& e : g.e) {
      ++deg[e.u];
      ++deg[e.v];
    }
    std::size_t pick = 0;
    for (std::size_t i = 1; i < g.e.size(); ++i)
      if (deg[g.e[i].u] + deg[g.e[i].v] > deg[g.e[pick].u] + deg[g.e[pick].v]) pick = i;
    const WeightedEdge e = g.e[pick];
    DcGraph deleted = g;
    deleted.e.erase(deleted.e.begin() + static_cast<long>(pick));
    const DcGraph contracted = contract(deleted, e.u, e.v);
    Rational z = eval(deleted);
    z += e.w * eval(contracted);
    memo_.emplace(key, z);
    return z;
  }

  Rational q_;
  std::map<std::string, Rational> memo_;
};

/// Polynomial through (xs[i], ys[i]) via Newton divided differences.
UniPoly interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UniPoly p(ys[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) p = p * UniPoly({-xs[i], Rational(1)}) + UniPoly(ys[i]);
  return p;
}

}  // namespace

Rational z_subset(const Multigraph& g, const Rational& q, std::size_t budget) {
  return z_poly_q(g, budget)(q);
}

Rational z_subset(const Multigraph& g, const Rational& q, const WeightAssignment& w, std::size_t budget) {
  return z_subset(g.with_weights(w), q, budget);
}

UniPoly z_poly_q(const Multigraph& g, std::size_t budget) {
  check_budget(g, budget);
  auto [same, diff] = split_by_subsets(g, -1, -1);
  return same + diff;
}

UniPoly z_poly_q(const Multigraph& g, const WeightAssignment& w, std::size_t budget) {
  return z_poly_q(g.with_weights(w), budget);
}

Rational z_del_con(const Multigraph& g, const Rational& q) {
  DelCon dc(q);
  return dc.eval({g.vertex_count(), g.edges()});
}

Rational z_del_con(const Multigraph& g, const Rational& q, const WeightAssignment& w) {
  return z_del_con(g.with_weights(w), q);
}

SplitZ z_split(const TwoTerminalGraph& f, const std::optional<Rational>& v, std::size_t budget) {
  const Multigraph g = v ? f.graph().with_uniform_weight(*v) : f.graph();
  if (g.edge_count() <= budget) {
    auto [same, diff] = split_by_subsets(g, f.x(), f.y());
    return {std::move(same), std::move(diff)};
  }
  // Interpolate Z_F and Z_{F_xy} from deletion-contraction values.
  const Multigraph gxy = g.identify(std::min(f.x(), f.y()), std::max(f.x(), f.y()));
  std::vector<Rational> xs, zf, zxy;
  for (int i = 0; i <= g.vertex_count(); ++i) {
    xs.emplace_back(i + 2);
    zf.push_back(z_del_con(g, xs.back()));
    zxy.push_back(z_del_con(gxy, xs.back()));
  }
  const UniPoly pf = interpolate(xs, zf);
  const UniPoly pxy = interpolate(xs, zxy);
  const auto [quot, rem] = divmod((pf - pxy) * UniPoly::variable(), UniPoly({Rational(-1), Rational(1)}));
  if (!rem.is_zero()) fail(ErrorKind::AssertionFailure, "split interpolation left a remainder");
  return {pf - quot, quot};
}

UniPoly z_identified(const SplitZ& s) { return s.z_same + s.z_diff.divide_by_q_power(1); }

UniPoly z_with_minus_one_edge(const SplitZ& s) {
  return s.z_diff.divide_by_q_power(1) * UniPoly({Rational(-1), Rational(1)});
}

SplitZ OpaqueLeaf::split_at(const Rational& w) const {
  {
    std::lock_guard lock(mu_);
    for (const auto& [k, s] : cache_)
      if (k == w) return s;
  }
  SplitZ s = z_split(graph_, w);
  std::lock_guard lock(mu_);
  cache_.emplace_back(w, s);
  return s;
}

Rational z_complete(int n, const Rational& q, const Rational& v) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "z_complete needs n >= 0");
  const Rational y = v + 1;
  auto binom = [](int a, int b) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return Rational(r);
  };
  auto ypow = [&](int k) { return pow(y, static_cast<unsigned long>(k) * (k - 1) / 2); };
  std::vector<Rational> d(static_cast<std::size_t>(n + 1)), z(static_cast<std::size_t>(n + 1));
  z[0] = Rational(1);
  for (int m = 1; m <= n; ++m) {
    Rational dm = ypow(m);
    for (int k = 1; k < m; ++k) dm -= binom(m - 1, k - 1) * d[k] * ypow(m - k);
    d[m] = dm;
    Rational zm;
    for (int k = 1; k <= m; ++k) zm += binom(m - 1, k - 1) * q * d[k] * z[m - k];
    z[m] = zm;
  }
  return z[n];
}

Rational chromatic(const Multigraph& g, const Rational& q) { return z_del_con(g.with_uniform_weight(Rational(-1)), q); }

Rational classical_tutte(const Multigraph& g, const Rational& x, const Rational& y) {
  if (x == Rational(1) || y == Rational(1)) fail(ErrorKind::UndefinedAtUnitLine, "classical Tutte polynomial needs x != 1 and y != 1");
  const Rational xm = x - 1, ym = y - 1;
  const Rational z = z_del_con(g.with_uniform_weight(ym), xm * ym);
  return z / pow(xm, static_cast<unsigned long>(g.component_count())) /
         pow(ym, static_cast<unsigned long>(g.vertex_count()));
}

Realization glue(const Realization& f, const Realization& h) {
  Realization r;
  r.graph = f.graph;
  r.x = f.x;
  r.y = f.y;
  std::vector<int> map(static_cast<std::size_t>(h.graph.vertex_count()), -1);
  map[h.x] = f.x;
  map[h.y] = f.y;
  for (int i = 0; i < h.graph.vertex_count(); ++i)
    if (map[i] < 0) map[i] = r.graph.add_vertex();
  for (const auto& e : h.graph.edges()) r.graph.add_edge(map[e.u], map[e.v], e.w);
  return r;
}

Multigraph with_return_edge(const Realization& r, const Rational& w) {
  Multigraph g = r.graph;
  g.add_edge(r.x, r.y, w);
  return g;
}

bool verify_lemma2(const TwoTerminalGraph& f, const Realization& h, const Rational& q, const Rational& v) {
  if (q.is_zero() || q == Rational(1)) fail(ErrorKind::PoleAt, "prefactor 1/(q(q-1)) has a pole at q = " + q.to_string());
  const Realization fr{f.graph().with_uniform_weight(v), f.x(), f.y()};
  const Realization hr{h.graph.with_uniform_weight(v), h.x, h.y};

  auto z = [&](const Multigraph& g) {
    return g.edge_count() <= 18 ? z_subset(g, q, kDefaultSubsetBudget) : z_del_con(g, q);
  };
  const Rational zf_minus = z(with_return_edge(fr, Rational(-1)));
  if (zf_minus.is_zero()) fail(ErrorKind::DegenerateEffectiveWeight, "Z_{F+xy}(q, v, -1) vanishes");
  const Multigraph fxy = fr.graph.identify(std::min(fr.x, fr.y), std::max(fr.x, fr.y));
  const Rational v_f = (q - 1) * z(fxy) / zf_minus - 1;
  const Rational rhs = zf_minus * z(with_return_edge(hr, v_f)) / (q * (q - 1));
  return z(glue(fr, hr).graph) == rhs;
}

}  // namespace tutte
