#include "tutte/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

#include "tutte/error.hpp"

namespace tutte {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[b] = a;
    return true;
  }
};

}  // namespace

// ---------------------------------------------------------------- Multigraph

void Multigraph::add_edge(int u, int v, Rational w) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) fail(ErrorKind::InvalidGraph, "edge endpoint out of range");
  edges_.push_back({u, v, std::move(w)});
}

Multigraph Multigraph::with_uniform_weight(const Rational& w) const {
  Multigraph g = *this;
  for (auto& e : g.edges_) e.w = w;
  return g;
}

Multigraph Multigraph::with_weights(const std::vector<Rational>& weights) const {
  if (weights.size() != edges_.size()) fail(ErrorKind::InvalidArgument, "weight assignment must cover every edge");
  Multigraph g = *this;
  for (std::size_t i = 0; i < weights.size(); ++i) g.edges_[i].w = weights[i];
  return g;
}

Multigraph Multigraph::disjoint_union(const Multigraph& other) const {
  Multigraph g = *this;
  const int shift = n_;
  g.n_ += other.n_;
  for (const auto& e : other.edges_) g.edges_.push_back({e.u + shift, e.v + shift, e.w});
  return g;
}

Multigraph Multigraph::identify(int a, int b) const {
  if (a == b) return *this;
  if (a < 0 || b < 0 || a >= n_ || b >= n_) fail(ErrorKind::InvalidGraph, "identify: vertex out of range");
  auto map = [&](int x) {
    if (x == b) x = a;
    return x > b ? x - 1 : x;
  };
  Multigraph g(n_ - 1);
  for (const auto& e : edges_) g.edges_.push_back({map(e.u), map(e.v), e.w});
  return g;
}

std::optional<Rational> Multigraph::uniform_weight() const {
  if (edges_.empty()) return std::nullopt;
  for (const auto& e : edges_)
    if (e.w != edges_.front().w) return std::nullopt;
  return edges_.front().w;
}

int Multigraph::component_count() const {
  Dsu d(n_);
  int k = n_;
  for (const auto& e : edges_)
    if (d.unite(e.u, e.v)) --k;
  return k;
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool Multigraph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.u == e.v; });
}

bool Multigraph::adjacent(int a, int b) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [&](const auto& e) { return (e.u == a && e.v == b) || (e.u == b && e.v == a); });
}

std::string Multigraph::to_string() const {
  std::ostringstream os;
  os << "V=" << n_ << " E=[";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) os << ",";
    os << "(" << edges_[i].u << "," << edges_[i].v << "," << edges_[i].w.to_string() << ")";
  }
  os << "]";
  return os.str();
}

int girth(const Multigraph& g) {
  int best = 0;
  auto better = [&](int c) {
    if (best == 0 || c < best) best = c;
  };
  for (const auto& e : g.edges())
    if (e.u == e.v) better(1);
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    for (std::size_t j = i + 1; j < g.edge_count(); ++j) {
      const auto &a = g.edges()[i], &b = g.edges()[j];
      if (a.u != a.v && ((a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u))) better(2);
    }
  // Shortest cycle through each edge: remove it, BFS between its ends.
  const int n = g.vertex_count();
  for (std::size_t skip = 0; skip < g.edge_count(); ++skip) {
    const auto& se = g.edges()[skip];
    if (se.u == se.v) continue;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (i == skip) continue;
      const auto& e = g.edges()[i];
      if (e.u == e.v) continue;
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::queue<int> bfs;
    dist[se.u] = 0;
    bfs.push(se.u);
    while (!bfs.empty()) {
      const int x = bfs.front();
      bfs.pop();
      for (int y : adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          bfs.push(y);
        }
    }
    if (dist[se.v] > 0) better(dist[se.v] + 1);
  }
  return best;
}

// ---------------------------------------------------------------- TwoTerminalGraph

TwoTerminalGraph::TwoTerminalGraph(Multigraph g, int x, int y) : g_(std::move(g)), x_(x), y_(y) {
  const int n = g_.vertex_count();
  if (x_ < 0 || y_ < 0 || x_ >= n || y_ >= n) fail(ErrorKind::NotTwoTerminalGraph, "terminal out of range");
  if (x_ == y_) fail(ErrorKind::NotTwoTerminalGraph, "terminals coincide");
  if (g_.has_loop()) fail(ErrorKind::NotTwoTerminalGraph, "graph has a loop");
  if (g_.component_count() != 1) fail(ErrorKind::NotTwoTerminalGraph, "graph is disconnected");
  if (g_.adjacent(x_, y_)) fail(ErrorKind::NotTwoTerminalGraph, "terminals are adjacent");
}

// ---------------------------------------------------------------- GadgetTerm

GadgetTerm GadgetTerm::edge(Rational w) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Edge;
  n->w = std::move(w);
  n->dipole = true;
  n->edges = 1;
  return GadgetTerm(std::move(n));
}

GadgetTerm GadgetTerm::opaque(std::shared_ptr<const OpaqueLeaf> leaf) {
  if (!leaf) fail(ErrorKind::InvalidArgument, "null opaque leaf");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Opaque;
  n->planar = leaf->planar();
  n->sp = false;
  n->non_adjacent = true;
  n->edges = leaf->graph().graph().edge_count();
  n->vertices = static_cast<std::size_t>(leaf->graph().graph().vertex_count());
  n->leaf = std::move(leaf);
  return GadgetTerm(std::move(n));
}

GadgetTerm GadgetTerm::compose(Kind kind, std::vector<GadgetTerm> parts) {
  std::vector<GadgetTerm> flat;
  for (auto& p : parts) {
    if (p.kind() == kind) {
      flat.insert(flat.end(), p.children().begin(), p.children().end());
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.size() < 2) fail(ErrorKind::InvalidArgument, "series/parallel needs at least two parts");
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->leaves = 0;
  n->dipole = kind == Kind::Parallel;
  n->non_adjacent = true;
  n->vertices = kind == Kind::Series ? 0 : 2;
  for (const auto& c : flat) {
    n->leaves += c.leaf_count();
    n->edges += c.edge_count();
    n->planar = n->planar && c.is_planar();
    n->sp = n->sp && c.is_series_parallel();
    if (c.kind() != Kind::Edge) n->dipole = false;
    if (kind == Kind::Parallel && !c.is_two_terminal_graph()) n->non_adjacent = false;
    n->vertices += c.vertex_count() - 2;
  }
  if (kind == Kind::Series) n->vertices += flat.size() + 1;
  n->kids = std::move(flat);
  return GadgetTerm(std::move(n));
}

GadgetTerm GadgetTerm::series(std::vector<GadgetTerm> parts) { return compose(Kind::Series, std::move(parts)); }
GadgetTerm GadgetTerm::parallel(std::vector<GadgetTerm> parts) { return compose(Kind::Parallel, std::move(parts)); }

GadgetTerm GadgetTerm::series_power(const GadgetTerm& t, std::size_t k) {
  return series(std::vector<GadgetTerm>(k, t));
}

GadgetTerm GadgetTerm::parallel_power(const GadgetTerm& t, std::size_t k) {
  return parallel(std::vector<GadgetTerm>(k, t));
}

bool operator==(const GadgetTerm& a, const GadgetTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.leaf_count() != b.leaf_count()) return false;
  switch (a.kind()) {
    case GadgetTerm::Kind::Edge: return a.weight() == b.weight();
    case GadgetTerm::Kind::Opaque: return a.leaf().name() == b.leaf().name();
    default: return a.children() == b.children();
  }
}

std::string GadgetTerm::to_string() const {
  switch (kind()) {
    case Kind::Edge: return "E(" + weight().to_string() + ")";
    case Kind::Opaque: return leaf().name();
    case Kind::Series:
    case Kind::Parallel: {
      std::string s = kind() == Kind::Series ? "S(" : "P(";
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i) s += ",";
        s += children()[i].to_string();
      }
      return s + ")";
    }
  }
  return {};
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view s, int max_kn) : s_(s), max_kn_(max_kn) {}

  GadgetTerm parse_all() {
    GadgetTerm t = parse_term();
    skip_ws();
    if (pos_ != s_.size()) error("trailing characters");
    return t;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, "term: " + what + " at offset " + std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) error(std::string("expected '") + c + "'");
  }
  std::string_view until_close() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ')') ++pos_;
    return s_.substr(start, pos_ - start);
  }
  bool starts_with(std::string_view word) {
    skip_ws();
    if (s_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  GadgetTerm parse_term() {
    if (starts_with("PetersenMinusEdge")) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != '(') return petersen_minus_edge();
      expect('(');
      const std::string_view num = until_close();
      expect(')');
      const Rational k = Rational::parse(num);
      if (!k.is_integer() || k.sign() <= 0 || k > Rational(1000)) error("bad PetersenMinusEdge parameter");
      return petersen_minus_edge(static_cast<int>(k.num().get_si()));
    }
    if (starts_with("KnMinusEdge")) {
      expect('(');
      const std::string_view num = until_close();
      expect(')');
      const Rational n = Rational::parse(num);
      if (!n.is_integer() || n.sign() <= 0 || n > Rational(1000)) error("bad KnMinusEdge parameter");
      return complete_minus_edge(static_cast<int>(n.num().get_si()), max_kn_);
    }
    skip_ws();
    if (pos_ >= s_.size()) error("unexpected end");
    const char head = s_[pos_++];
    expect('(');
    if (head == 'E') {
      const std::string_view w = until_close();
      expect(')');
      return GadgetTerm::edge(Rational::parse(w));
    }
    if (head != 'S' && head != 'P') error("unknown constructor");
    std::vector<GadgetTerm> parts;
    parts.push_back(parse_term());
    while (eat(',')) parts.push_back(parse_term());
    expect(')');
    if (parts.size() < 2) error("series/parallel needs at least two parts");
    return head == 'S' ? GadgetTerm::series(std::move(parts)) : GadgetTerm::parallel(std::move(parts));
  }

  std::string_view s_;
  int max_kn_;
  std::size_t pos_ = 0;
};

void realize_into(const GadgetTerm& t, Multigraph& g, int x, int y, const std::optional<Rational>& ow) {
  switch (t.kind()) {
    case GadgetTerm::Kind::Edge:
      g.add_edge(x, y, t.weight());
      return;
    case GadgetTerm::Kind::Parallel:
      for (const auto& c : t.children()) realize_into(c, g, x, y, ow);
      return;
    case GadgetTerm::Kind::Series: {
      const auto& kids = t.children();
      std::vector<int> joints{x};
      for (std::size_t i = 1; i < kids.size(); ++i) joints.push_back(g.add_vertex());
      joints.push_back(y);
      for (std::size_t i = 0; i < kids.size(); ++i) realize_into(kids[i], g, joints[i], joints[i + 1], ow);
      return;
    }
    case GadgetTerm::Kind::Opaque: {
      const TwoTerminalGraph& f = t.leaf().graph();
      const Multigraph& h = f.graph();
      std::vector<int> map(static_cast<std::size_t>(h.vertex_count()), -1);
      map[f.x()] = x;
      map[f.y()] = y;
      for (int i = 0; i < h.vertex_count(); ++i)
        if (map[i] < 0) map[i] = g.add_vertex();
      for (const auto& e : h.edges()) g.add_edge(map[e.u], map[e.v], ow ? *ow : e.w);
      return;
    }
  }
}

}  // namespace

GadgetTerm GadgetTerm::parse(std::string_view text, int max_kn) { return TermParser(text, max_kn).parse_all(); }

Realization realize(const GadgetTerm& t, const std::optional<Rational>& opaque_weight) {
  Realization r;
  r.graph = Multigraph(2);
  realize_into(t, r.graph, 0, 1, opaque_weight);
  return r;
}

GadgetTerm petersen_minus_edge(int subdivision) {
  if (subdivision < 1) fail(ErrorKind::InvalidArgument, "Petersen subdivision must be >= 1");
  static std::mutex mu;
  static std::vector<std::pair<int, std::shared_ptr<const OpaqueLeaf>>> cache;
  std::lock_guard lock(mu);
  for (const auto& [k, l] : cache)
    if (k == subdivision) return GadgetTerm::opaque(l);
  Multigraph g(10);
  // Each Petersen edge becomes a path of `subdivision` edges.
  auto link = [&](int a, int b) {
    int prev = a;
    for (int i = 1; i < subdivision; ++i) {
      const int mid = g.add_vertex();
      g.add_edge(prev, mid, Rational(1));
      prev = mid;
    }
    g.add_edge(prev, b, Rational(1));
  };
  for (int i = 1; i < 5; ++i) link(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) link(i, i + 5);
  for (int i = 0; i < 5; ++i) link(5 + i, 5 + (i + 2) % 5);
  const std::string name =
      subdivision == 1 ? std::string("PetersenMinusEdge") : "PetersenMinusEdge(" + std::to_string(subdivision) + ")";
  auto leaf = std::make_shared<const OpaqueLeaf>(name, TwoTerminalGraph(std::move(g), 0, 1), false);
  cache.emplace_back(subdivision, leaf);
  return GadgetTerm::opaque(leaf);
}

GadgetTerm complete_minus_edge(int n, int max_kn) {
  if (n < 3) fail(ErrorKind::InvalidArgument, "complete_minus_edge needs n >= 3");
  if (n > max_kn) fail(ErrorKind::BudgetExceeded, "K_" + std::to_string(n) + " exceeds max_kn = " + std::to_string(max_kn));
  static std::mutex mu;
  static std::vector<std::shared_ptr<const OpaqueLeaf>> cache;
  std::lock_guard lock(mu);
  for (const auto& l : cache)
    if (l->graph().graph().vertex_count() == n) return GadgetTerm::opaque(l);
  Multigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(i == 0 && j == 1)) g.add_edge(i, j, Rational(1));
  auto leaf = std::make_shared<const OpaqueLeaf>("KnMinusEdge(" + std::to_string(n) + ")",
                                                 TwoTerminalGraph(std::move(g), 0, 1), n <= 4);
  cache.push_back(leaf);
  return GadgetTerm::opaque(leaf);
}

GadgetTerm dual_term(const GadgetTerm& t) {
  switch (t.kind()) {
    case GadgetTerm::Kind::Edge: return t;
    case GadgetTerm::Kind::Opaque: fail(ErrorKind::NotSeriesParallel, "opaque leaf " + t.leaf().name() + " has no structural dual");
    case GadgetTerm::Kind::Series:
    case GadgetTerm::Kind::Parallel: {
      std::vector<GadgetTerm> parts;
      for (const auto& c : t.children()) parts.push_back(dual_term(c));
      return t.kind() == GadgetTerm::Kind::Series ? GadgetTerm::parallel(std::move(parts))
                                                  : GadgetTerm::series(std::move(parts));
    }
  }
  return t;
}

}  // namespace tutte
