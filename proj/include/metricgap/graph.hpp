#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "metricgap/rational.hpp"

namespace metricgap {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction:
/// edits go through the add_edge / remove_edge free functions, which copy.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
    adj_.assign(static_cast<size_t>(n) * n, 0);
    degree_.assign(n, 0);
  }

  static Graph from_edges(int n, std::vector<Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.insert_edge(u, v);
    g.finish();
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  long long volume() const { return 2LL * edge_count(); }

  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<size_t>(u) * n_ + v] != 0;
  }

  int degree(int v) const {
    check_vertex(v);
    return degree_[v];
  }

  const std::vector<int>& degrees() const { return degree_; }
  int max_degree() const { return *std::max_element(degree_.begin(), degree_.end()); }
  int min_degree() const { return *std::min_element(degree_.begin(), degree_.end()); }

  bool is_regular() const { return max_degree() == min_degree(); }

  bool is_complete() const {
    return n_ >= 2 && 2LL * edge_count() == static_cast<long long>(n_) * (n_ - 1);
  }

  /// m / C(n,2), exact. Requires n >= 2.
  Rational density() const {
    if (n_ < 2) throw std::invalid_argument("density: needs at least 2 vertices");
    return Rational(BigInt(edge_count()), BigInt(n_) * (n_ - 1) / 2);
  }

  bool is_connected() const {
    if (n_ == 1) return true;
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n_; ++v) {
        if (adj_[static_cast<size_t>(u) * n_ + v] && !seen[v]) {
          seen[v] = 1;
          ++reached;
          q.push(v);
        }
      }
    }
    return reached == n_;
  }

  /// Vertices with at least one incident edge. The Rayleigh quotient weights
  /// every pair by degrees, so isolated vertices are invisible to the gap.
  int support_size() const {
    int c = 0;
    for (int d : degree_) c += d > 0 ? 1 : 0;
    return c;
  }

  /// True when all edges lie in a single component. Isolated vertices are
  /// ignored; an edgeless graph counts as connected support.
  bool support_connected() const {
    int start = -1;
    for (int v = 0; v < n_ && start < 0; ++v)
      if (degree_[v] > 0) start = v;
    if (start < 0) return true;
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    int reached = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n_; ++v) {
        if (adj_[static_cast<size_t>(u) * n_ + v] && !seen[v]) {
          seen[v] = 1;
          ++reached;
          q.push(v);
        }
      }
    }
    return reached == support_size();
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
  }

  void insert_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
    if (u > v) std::swap(u, v);
    size_t idx = static_cast<size_t>(u) * n_ + v;
    if (adj_[idx]) throw std::invalid_argument("Graph: duplicate edge rejected");
    adj_[idx] = 1;
    adj_[static_cast<size_t>(v) * n_ + u] = 1;
    ++degree_[u];
    ++degree_[v];
    edges_.emplace_back(u, v);
  }

  void finish() { std::sort(edges_.begin(), edges_.end()); }

  int n_ = 0;
  std::vector<Edge> edges_;     // canonical: u < v, sorted lexicographically
  std::vector<char> adj_;       // flat n*n adjacency
  std::vector<int> degree_;

  friend Graph add_edge(const Graph&, int, int);
  friend Graph remove_edge(const Graph&, int, int);
};

inline Graph add_edge(const Graph& g, int u, int v) {
  if (g.has_edge(u, v)) throw std::invalid_argument("add_edge: edge already present");
  std::vector<Edge> e = g.edges();
  e.emplace_back(std::min(u, v), std::max(u, v));
  return Graph::from_edges(g.vertex_count(), std::move(e));
}

inline Graph remove_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("remove_edge: edge not present");
  Edge target{std::min(u, v), std::max(u, v)};
  std::vector<Edge> e;
  for (const Edge& x : g.edges())
    if (x != target) e.push_back(x);
  return Graph::from_edges(g.vertex_count(), std::move(e));
}

inline std::vector<std::vector<int>> components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      out[id].push_back(u);
      for (int v = 0; v < n; ++v)
        if (g.has_edge(u, v) && comp[v] < 0) {
          comp[v] = id;
          q.push(v);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

/// Subgraph induced on `vertices` (relabeled 0..|vertices|-1 in the given order).
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  int k = static_cast<int>(vertices.size());
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(vertices[i], vertices[j])) e.emplace_back(i, j);
  return Graph::from_edges(k, std::move(e));
}

// ---------------------------------------------------------------------------
// Family generators. Labelings are fixed so outputs are reproducible.
// ---------------------------------------------------------------------------

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, std::move(e));
}

/// K_{a,b}: sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: sides must be >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph::from_edges(a + b, std::move(e));
}

/// K_{n,j}: j parts of size n each; part p is {p*n .. p*n + n - 1}.
inline Graph complete_multipartite(int part_size, int parts) {
  if (part_size < 1 || parts < 2)
    throw std::invalid_argument("complete_multipartite: need part_size >= 1, parts >= 2");
  int n = part_size * parts;
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u / part_size != v / part_size) e.emplace_back(u, v);
  return Graph::from_edges(n, std::move(e));
}

/// Path 0 - 1 - ... - n-1.
inline Graph path(int n) {
  std::vector<Edge> e;
  for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph::from_edges(n, std::move(e));
}

/// Cycle 0 - 1 - ... - n-1 - 0. Requires n >= 3.
inline Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: needs n >= 3");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) e.emplace_back(std::min(u, (u + 1) % n), std::max(u, (u + 1) % n));
  return Graph::from_edges(n, std::move(e));
}

/// K_n with edge (0,1) removed. Requires n >= 3.
inline Graph complete_minus_edge(int n) {
  if (n < 3) throw std::invalid_argument("complete_minus_edge: needs n >= 3");
  return remove_edge(complete(n), 0, 1);
}

/// Two cliques {0..n/2-1} and {n/2..n-1} joined by the bridge (0, n/2).
/// Requires even n >= 4.
inline Graph dumbbell(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("dumbbell: needs even n >= 4");
  int h = n / 2;
  std::vector<Edge> e;
  for (int u = 0; u < h; ++u)
    for (int v = u + 1; v < h; ++v) e.emplace_back(u, v);
  for (int u = h; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  e.emplace_back(0, h);
  return Graph::from_edges(n, std::move(e));
}

/// Dumbbell made regular: drop clique edges (0,1) and (n/2,n/2+1), add the
/// second bridge (1, n/2+1). Every vertex then has degree n/2 - 1.
/// Requires even n >= 6.
inline Graph regularized_dumbbell(int n) {
  if (n < 6 || n % 2 != 0) throw std::invalid_argument("regularized_dumbbell: needs even n >= 6");
  int h = n / 2;
  Graph g = dumbbell(n);
  g = remove_edge(g, 0, 1);
  g = remove_edge(g, h, h + 1);
  g = add_edge(g, 1, h + 1);
  return g;
}

/// K_{n,n} (sides {0..n-1}, {n..2n-1}) plus a perfect matching inside each
/// side: edges (2i, 2i+1) and (n+2i, n+2i+1). Requires even n >= 2.
inline Graph balanced_bipartite_plus_matching(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("balanced_bipartite_plus_matching: needs even n >= 2");
  Graph g = complete_bipartite(n, n);
  for (int i = 0; 2 * i + 1 < n; ++i) {
    g = add_edge(g, 2 * i, 2 * i + 1);
    g = add_edge(g, n + 2 * i, n + 2 * i + 1);
  }
  return g;
}

/// Cycle plus all long diagonals (i, i+n/2). Even n >= 4; the result is
/// 3-regular, a one-degree-up supergraph of the cycle.
inline Graph cycle_plus_diameters(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("cycle_plus_diameters: needs even n >= 4");
  Graph g = cycle(n);
  for (int i = 0; i < n / 2; ++i) g = add_edge(g, i, i + n / 2);
  return g;
}

/// K_n minus the perfect matching (0,1), (2,3), ... Even n >= 4; the result
/// is (n-2)-regular, a one-degree-down subgraph of the complete graph.
inline Graph complete_minus_matching(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("complete_minus_matching: needs even n >= 4");
  Graph g = complete(n);
  for (int i = 0; i < n / 2; ++i) g = remove_edge(g, 2 * i, 2 * i + 1);
  return g;
}

/// K_{n,n} plus one edge (0,1) inside the left side. Requires n >= 2.
inline Graph balanced_bipartite_plus_edge(int n) {
  if (n < 2) throw std::invalid_argument("balanced_bipartite_plus_edge: needs n >= 2");
  return add_edge(complete_bipartite(n, n), 0, 1);
}

/// K_{n,n} with the "red" vertices {0..r-1} on one side and {n..n+r-1} on the
/// other turned into a clique each. Requires 1 <= r <= n.
inline Graph red_clique_bipartite(int n, int r) {
  if (n < 1 || r < 1 || r > n)
    throw std::invalid_argument("red_clique_bipartite: needs 1 <= r <= n");
  Graph g = complete_bipartite(n, n);
  for (int u = 0; u < r; ++u)
    for (int v = u + 1; v < r; ++v) {
      g = add_edge(g, u, v);
      g = add_edge(g, n + u, n + v);
    }
  return g;
}

}  // namespace metricgap
