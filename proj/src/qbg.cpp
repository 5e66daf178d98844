#include "qmac/qbg.hpp"

#include <algorithm>
#include <deque>

#include "qmac/errors.hpp"

namespace qmac {

QBGraph::QBGraph(const RootDatum& datum, IndexSet J)
    : datum_(datum), J_(J), vertices_(enumerate_minimal_reps(datum, J)) {
  for (int v = 0; v < num_vertices(); ++v) index_.emplace(vertices_[v], v);

  const Weight two_rho_J = datum.two_rho(J);
  for (int v = 0; v < num_vertices(); ++v) {
    const WeylElt& w = vertices_[v];
    for (int k = 0; k < datum.num_positive_roots(); ++k) {
      if (datum.in_parabolic(k, J)) continue;
      const WeylElt t = min_coset_rep(datum, times_reflection(datum, w, k), J);
      // 2 <beta^vee, rho - rho_J>
      const std::int64_t c =
          2 * datum.coroot_height(k) - pairing(datum.coroot(k), two_rho_J);
      QMAC_ENSURE(c > 0, "<beta^vee, rho - rho_J> must be positive off Phi_J");
      EdgeKind kind;
      if (t.length() == w.length() + 1)
        kind = EdgeKind::Bruhat;
      else if (t.length() == w.length() - c + 1)
        kind = EdgeKind::Quantum;
      else
        continue;
      const int target = vertex_index(t);
      QMAC_ENSURE(target >= 0, "edge target outside W^J");
      edges_.push_back(QBGEdge{v, target, k, kind});
    }
  }
  index_edges();
}

QBGraph::QBGraph(const QBGraph& base, std::vector<QBGEdge> edges)
    : datum_(base.datum_),
      J_(base.J_),
      vertices_(base.vertices_),
      index_(base.index_),
      edges_(std::move(edges)) {
  index_edges();
}

void QBGraph::index_edges() {
  const int n_roots = datum_.num_positive_roots();
  out_.assign(vertices_.size(), {});
  edge_table_.assign(vertices_.size() * n_roots, -1);
  for (int e = 0; e < num_edges(); ++e) {
    out_[edges_[e].source].push_back(e);
    edge_table_[edges_[e].source * n_roots + edges_[e].root] = e;
  }
  for (auto& list : out_) {
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      const auto& ra = datum_.root(edges_[a].root);
      const auto& rb = datum_.root(edges_[b].root);
      return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
    });
  }
}

int QBGraph::vertex_index(const WeylElt& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

const QBGEdge* QBGraph::find_edge(int v, int root) const {
  const int e = edge_table_[v * datum_.num_positive_roots() + root];
  return e < 0 ? nullptr : &edges_[e];
}

QBGraph QBGraph::restricted(const Rational& sigma, const Weight& lambda) const {
  std::vector<QBGEdge> kept;
  for (const auto& e : edges_)
    if (is_integer(sigma * Rational(pairing(datum_.coroot(e.root), lambda))))
      kept.push_back(e);
  return QBGraph(*this, std::move(kept));
}

QBGraph build_qbg(const RootDatum& datum, IndexSet J) { return QBGraph(datum, J); }

QBGraph sigma_restricted(const QBGraph& graph, const Rational& sigma, const Weight& lambda) {
  return graph.restricted(sigma, lambda);
}

namespace {

// BFS tree from x: parent edge per vertex (-1 for x and unreached).
std::vector<int> bfs_tree(const QBGraph& graph, int x, std::vector<int>& dist) {
  const int n = graph.num_vertices();
  std::vector<int> parent(n, -1);
  dist.assign(n, -1);
  dist[x] = 0;
  std::deque<int> queue{x};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int e : graph.out_edges(v)) {
      const int t = graph.edge(e).target;
      if (dist[t] >= 0) continue;
      dist[t] = dist[v] + 1;
      parent[t] = e;
      queue.push_back(t);
    }
  }
  return parent;
}

}  // namespace

std::vector<int> shortest_path(const QBGraph& graph, int x, int y) {
  std::vector<int> dist;
  const auto parent = bfs_tree(graph, x, dist);
  QMAC_ENSURE(dist[y] >= 0, "no directed path in the quantum Bruhat graph");
  std::vector<int> path;
  for (int v = y; v != x; v = graph.edge(parent[v]).source) path.push_back(parent[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::int64_t wt_lambda(const QBGraph& graph, const WeylElt& x, const WeylElt& y,
                       const Weight& lambda) {
  const int xi = graph.vertex_index(x), yi = graph.vertex_index(y);
  if (xi < 0 || yi < 0) throw ValidationError("wt_lambda: argument not in W^J");
  std::int64_t total = 0;
  for (int e : shortest_path(graph, xi, yi)) {
    const auto& edge = graph.edge(e);
    if (edge.kind == EdgeKind::Quantum)
      total += pairing(graph.datum().coroot(edge.root), lambda);
  }
  return total;
}

WtLambdaTable::WtLambdaTable(const QBGraph& graph, const Weight& lambda)
    : n_(graph.num_vertices()), table_(static_cast<std::size_t>(n_) * n_, 0) {
  std::vector<std::int64_t> weight(graph.num_edges(), 0);
  for (int e = 0; e < graph.num_edges(); ++e)
    if (graph.edge(e).kind == EdgeKind::Quantum)
      weight[e] = pairing(graph.datum().coroot(graph.edge(e).root), lambda);

  std::vector<int> dist;
  for (int x = 0; x < n_; ++x) {
    const auto parent = bfs_tree(graph, x, dist);
    // Accumulate along the tree in BFS order (nondecreasing distance).
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) {
      QMAC_ENSURE(dist[v] >= 0, "quantum Bruhat graph is not strongly connected");
      order[v] = v;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] < dist[b]; });
    for (int v : order) {
      if (v == x) continue;
      const auto& e = graph.edge(parent[v]);
      table_[x * n_ + v] = table_[x * n_ + e.source] + weight[parent[v]];
    }
  }
}

std::vector<bool> reachable_from(const QBGraph& graph, int v) {
  std::vector<bool> seen(graph.num_vertices(), false);
  std::vector<int> stack{v};
  seen[v] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int e : graph.out_edges(u)) {
      const int t = graph.edge(e).target;
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

}  // namespace qmac
