#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "metricgap/graph.hpp"

namespace metricgap {

/// Partition of a graph's vertices into automorphism orbits.
/// `exact` is false when the graph was too large for the search and every
/// vertex was left in its own orbit (a sound but unpruned fallback).
struct OrbitPartition {
  std::vector<int> orbit_of;        // vertex -> orbit id
  std::vector<int> representatives; // smallest vertex of each orbit, ascending
  bool exact = true;

  int orbit_count() const { return static_cast<int>(representatives.size()); }
};

namespace detail {

// Extend a partial vertex bijection to a full automorphism by backtracking.
// pos iterates source vertices in natural order; image[v] == -1 means
// unassigned. Degree equality and adjacency consistency prune branches.
inline bool extend_automorphism(const Graph& g, std::vector<int>& image,
                                std::vector<char>& used, int pos) {
  int n = g.vertex_count();
  while (pos < n && image[pos] != -1) ++pos;
  if (pos == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand] || g.degree(cand) != g.degree(pos)) continue;
    bool ok = true;
    for (int w = 0; w < n && ok; ++w) {
      if (image[w] == -1) continue;
      if (g.has_edge(pos, w) != g.has_edge(cand, image[w])) ok = false;
    }
    if (!ok) continue;
    image[pos] = cand;
    used[cand] = 1;
    if (extend_automorphism(g, image, used, pos + 1)) return true;
    image[pos] = -1;
    used[cand] = 0;
  }
  return false;
}

// Search for any automorphism mapping u to v. Returns the full map or empty.
inline std::vector<int> automorphism_sending(const Graph& g, int u, int v) {
  int n = g.vertex_count();
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  image[u] = v;
  used[v] = 1;
  if (extend_automorphism(g, image, used, 0)) return image;
  return {};
}

}  // namespace detail

/// Automorphism orbits by direct search, exact up to 10 vertices. Larger
/// graphs fall back to singleton orbits, which disables pruning but keeps
/// every downstream result correct.
inline OrbitPartition vertex_orbits(const Graph& g) {
  int n = g.vertex_count();
  OrbitPartition part;
  if (n > 10) {
    part.orbit_of.resize(n);
    std::iota(part.orbit_of.begin(), part.orbit_of.end(), 0);
    part.representatives.resize(n);
    std::iota(part.representatives.begin(), part.representatives.end(), 0);
    part.exact = false;
    return part;
  }

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (find(u) == find(v) || g.degree(u) != g.degree(v)) continue;
      std::vector<int> sigma = detail::automorphism_sending(g, u, v);
      if (sigma.empty()) continue;
      for (int w = 0; w < n; ++w) {
        int a = find(w), b = find(sigma[w]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  part.orbit_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int root = find(v);
    if (part.orbit_of[root] == -1) {
      part.orbit_of[root] = static_cast<int>(part.representatives.size());
      part.representatives.push_back(root);
    }
    part.orbit_of[v] = part.orbit_of[root];
  }
  return part;
}

}  // namespace metricgap
