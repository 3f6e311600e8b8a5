#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tutte/poly.hpp"
#include "tutte/rational.hpp"

namespace tutte {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  Rational w;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Undirected multigraph; loops and parallel edges allowed. Edge order is
/// part of the identity (certificates re-serialize bit-stably).
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count) : n_(vertex_count) {}

  int add_vertex() { return n_++; }
  void add_edge(int u, int v, Rational w);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

  /// Copy with every edge weight replaced by w.
  Multigraph with_uniform_weight(const Rational& w) const;
  /// Copy with edge i weighted by weights[i].
  Multigraph with_weights(const std::vector<Rational>& weights) const;
  /// Disjoint union; the other graph's vertices are shifted by vertex_count().
  Multigraph disjoint_union(const Multigraph& other) const;
  /// Identify vertex b into a (b's edges move to a, vertex ids above b shift down).
  Multigraph identify(int a, int b) const;

  std::optional<Rational> uniform_weight() const;
  int component_count() const;
  std::vector<int> degrees() const;
  bool has_loop() const;
  bool adjacent(int a, int b) const;

  std::string to_string() const;
  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int n_ = 0;
  std::vector<WeightedEdge> edges_;
};

/// Connected loopless multigraph with distinguished non-adjacent terminals.
class TwoTerminalGraph {
 public:
  /// Throws NotTwoTerminalGraph when an invariant fails.
  TwoTerminalGraph(Multigraph g, int x, int y);

  const Multigraph& graph() const { return g_; }
  int x() const { return x_; }
  int y() const { return y_; }

 private:
  Multigraph g_;
  int x_;
  int y_;
};

/// Cached same/diff split of a leaf at one weight; see tutte.hpp.
struct SplitZ {
  UniPoly z_same;
  UniPoly z_diff;
};

/// A named, non-decomposed two-terminal gadget (Petersen minus an edge, K_n
/// minus an edge). Edge weights are assigned when the term is evaluated.
class OpaqueLeaf {
 public:
  OpaqueLeaf(std::string name, TwoTerminalGraph graph, bool planar)
      : name_(std::move(name)), graph_(std::move(graph)), planar_(planar) {}

  const std::string& name() const { return name_; }
  const TwoTerminalGraph& graph() const { return graph_; }
  bool planar() const { return planar_; }

  /// Split of the leaf with all edges weighted w, memoized per weight.
  SplitZ split_at(const Rational& w) const;

 private:
  std::string name_;
  TwoTerminalGraph graph_;
  bool planar_;
  mutable std::mutex mu_;
  mutable std::vector<std::pair<Rational, SplitZ>> cache_;
};

/// Two-terminal gadget recipe: Edge(w) | Series(...) | Parallel(...) | Opaque.
/// Immutable, cheap to copy (shared nodes). Series/Parallel factories flatten
/// nested nodes of the same kind, so terms are kept in a normal form.
class GadgetTerm {
 public:
  enum class Kind { Edge, Series, Parallel, Opaque };

  static GadgetTerm edge(Rational w);
  static GadgetTerm series(std::vector<GadgetTerm> parts);
  static GadgetTerm parallel(std::vector<GadgetTerm> parts);
  static GadgetTerm opaque(std::shared_ptr<const OpaqueLeaf> leaf);
  /// k-fold series / parallel power of one term (k >= 2).
  static GadgetTerm series_power(const GadgetTerm& t, std::size_t k);
  static GadgetTerm parallel_power(const GadgetTerm& t, std::size_t k);

  /// Parses the prefix notation produced by to_string().
  static GadgetTerm parse(std::string_view text, int max_kn = 7);

  Kind kind() const { return node_->kind; }
  /// Edge weight; only for Kind::Edge.
  const Rational& weight() const { return node_->w; }
  const std::vector<GadgetTerm>& children() const { return node_->kids; }
  const OpaqueLeaf& leaf() const { return *node_->leaf; }
  const std::shared_ptr<const OpaqueLeaf>& leaf_ptr() const { return node_->leaf; }

  bool is_dipole() const { return node_->dipole; }
  bool is_planar() const { return node_->planar; }
  bool is_series_parallel() const { return node_->sp; }
  /// Realization has non-adjacent terminals.
  bool is_two_terminal_graph() const { return node_->non_adjacent; }
  /// Edges in the realization.
  std::size_t edge_count() const { return node_->edges; }
  /// Vertices in the realization.
  std::size_t vertex_count() const { return node_->vertices; }
  /// Number of leaves (Edge or Opaque) in the term.
  std::size_t leaf_count() const { return node_->leaves; }

  std::string to_string() const;

  friend bool operator==(const GadgetTerm& a, const GadgetTerm& b);

 private:
  struct Node {
    Kind kind = Kind::Edge;
    Rational w;
    std::vector<GadgetTerm> kids;
    std::shared_ptr<const OpaqueLeaf> leaf;
    bool dipole = false;
    bool planar = true;
    bool sp = true;
    bool non_adjacent = false;
    std::size_t edges = 0;
    std::size_t vertices = 2;
    std::size_t leaves = 1;
  };
  explicit GadgetTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static GadgetTerm compose(Kind kind, std::vector<GadgetTerm> parts);
  std::shared_ptr<const Node> node_;
};

struct Realization {
  Multigraph graph;
  int x = 0;
  int y = 1;
};

/// Materializes t. Terminals are vertices 0 and 1; further vertices are
/// numbered depth-first. Opaque leaf edges get `opaque_weight` (the leaf's
/// stored weights when absent).
Realization realize(const GadgetTerm& t, const std::optional<Rational>& opaque_weight = std::nullopt);

/// Petersen graph minus the edge (0, 1), each remaining edge subdivided into a
/// path of `subdivision` edges.
GadgetTerm petersen_minus_edge(int subdivision = 1);
/// Throws InvalidArgument for n < 3 and BudgetExceeded for n > max_kn.
GadgetTerm complete_minus_edge(int n, int max_kn = 7);

/// Series <-> Parallel swap. Throws NotSeriesParallel on Opaque leaves.
GadgetTerm dual_term(const GadgetTerm& t);

/// Length of a shortest cycle; 0 for forests. Loops count as 1, parallel pairs as 2.
int girth(const Multigraph& g);

}  // namespace tutte
