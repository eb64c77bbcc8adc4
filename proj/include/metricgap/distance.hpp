#pragma once

#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "metricgap/graph.hpp"

namespace metricgap {

/// Hop-distance matrix of a graph. Entries between different components hold
/// the `unreachable` sentinel; the diameter is the maximum finite entry.
class DistanceMatrix {
 public:
  static constexpr int unreachable = std::numeric_limits<int>::max();

  DistanceMatrix(int k, std::vector<int> d) : k_(k), d_(std::move(d)) {
    diameter_ = 0;
    all_finite_ = true;
    for (int x : d_) {
      if (x == unreachable)
        all_finite_ = false;
      else if (x > diameter_)
        diameter_ = x;
    }
  }

  int point_count() const { return k_; }

  int at(int i, int j) const {
    if (i < 0 || i >= k_ || j < 0 || j >= k_)
      throw std::invalid_argument("DistanceMatrix: index out of range");
    return d_[static_cast<size_t>(i) * k_ + j];
  }

  bool reachable(int i, int j) const { return at(i, j) != unreachable; }
  bool all_finite() const { return all_finite_; }
  int diameter() const { return diameter_; }
  const std::vector<int>& raw() const { return d_; }

 private:
  int k_;
  std::vector<int> d_;
  int diameter_;
  bool all_finite_;
};

/// All-pairs shortest paths by BFS from every vertex.
inline DistanceMatrix apsp(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> d(static_cast<size_t>(n) * n, DistanceMatrix::unreachable);
  for (int s = 0; s < n; ++s) {
    d[static_cast<size_t>(s) * n + s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      int du = d[static_cast<size_t>(s) * n + u];
      for (int v = 0; v < n; ++v) {
        if (g.has_edge(u, v) && d[static_cast<size_t>(s) * n + v] == DistanceMatrix::unreachable) {
          d[static_cast<size_t>(s) * n + v] = du + 1;
          q.push(v);
        }
      }
    }
  }
  return DistanceMatrix(n, std::move(d));
}

}  // namespace metricgap
