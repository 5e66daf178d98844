#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qmac/rational.hpp"
#include "qmac/root_datum.hpp"
#include "qmac/weyl.hpp"

namespace qmac {

enum class EdgeKind { Bruhat, Quantum };

/// w --beta--> floor(w r_beta). Vertices and labels are indices into the
/// owning graph's vertex list and the datum's positive roots.
struct QBGEdge {
  int source = 0;
  int target = 0;
  int root = 0;
  EdgeKind kind = EdgeKind::Bruhat;
};

/// The parabolic quantum Bruhat graph QB(W^J), built eagerly and frozen.
class QBGraph {
 public:
  QBGraph(const RootDatum& datum, IndexSet J);

  const RootDatum& datum() const { return datum_; }
  IndexSet parabolic() const { return J_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const WeylElt& vertex(int v) const { return vertices_[v]; }
  const std::vector<WeylElt>& vertices() const { return vertices_; }
  /// -1 if w is not a vertex.
  int vertex_index(const WeylElt& w) const;

  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<QBGEdge>& edges() const { return edges_; }
  /// Outgoing edges of v, ordered lexicographically by label coordinates.
  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  const QBGEdge& edge(int e) const { return edges_[e]; }
  /// The edge out of v labelled by positive root k, if present.
  const QBGEdge* find_edge(int v, int root) const;

  /// QB_{sigma lambda}(W^J): keep only edges with sigma <beta^vee, lambda> integral.
  QBGraph restricted(const Rational& sigma, const Weight& lambda) const;

 private:
  QBGraph(const QBGraph& base, std::vector<QBGEdge> edges);
  void index_edges();

  RootDatum datum_;
  IndexSet J_;
  std::vector<WeylElt> vertices_;
  std::unordered_map<WeylElt, int, WeylEltHash> index_;
  std::vector<QBGEdge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<int> edge_table_;  // vertex * N + root -> edge or -1
};

QBGraph build_qbg(const RootDatum& datum, IndexSet J);
QBGraph sigma_restricted(const QBGraph& graph, const Rational& sigma, const Weight& lambda);

/// Shortest directed path from x to y found by BFS (edge indices, in order).
/// Throws InvariantError if y is unreachable.
std::vector<int> shortest_path(const QBGraph& graph, int x, int y);

/// wt_lambda(x => y): sum of <beta^vee, lambda> over the quantum edges of a
/// shortest path from x to y.
std::int64_t wt_lambda(const QBGraph& graph, const WeylElt& x, const WeylElt& y,
                       const Weight& lambda);

/// All-pairs wt_lambda, one BFS per source.
class WtLambdaTable {
 public:
  WtLambdaTable(const QBGraph& graph, const Weight& lambda);
  std::int64_t operator()(int x, int y) const { return table_[x * n_ + y]; }

 private:
  int n_;
  std::vector<std::int64_t> table_;
};

/// Vertices reachable from v (including v).
std::vector<bool> reachable_from(const QBGraph& graph, int v);

}  // namespace qmac
