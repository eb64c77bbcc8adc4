#pragma once

#include <stdexcept>
#include <vector>

#include "metricgap/distance.hpp"
#include "metricgap/graph.hpp"
#include "metricgap/rational.hpp"

namespace metricgap {

/// Raised when a nonconstant map has zero Rayleigh denominator (every pair of
/// distinct images either coincides or involves only degree-zero vertices).
/// Such maps carry no information and enumeration skips them.
class zero_denominator_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Vertex map into the points of a target metric: image[v] in 0..k-1.
struct Assignment {
  std::vector<int> image;

  bool nonconstant() const {
    for (size_t i = 1; i < image.size(); ++i)
      if (image[i] != image[0]) return true;
    return false;
  }
};

namespace detail {

// Squared distances as a flat k*k table. Requires a finite matrix.
inline std::vector<long long> squared_distance_table(const DistanceMatrix& dm) {
  int k = dm.point_count();
  std::vector<long long> t(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      long long d = dm.at(i, j);
      t[static_cast<size_t>(i) * k + j] = d * d;
    }
  return t;
}

}  // namespace detail

/// Exact Rayleigh quotient of an assignment:
///
///   R_f = vol(G) * sum over edges uv of d(f(u),f(v))^2
///         / sum over unordered pairs {u,v} of d(f(u),f(v))^2 * deg(u)*deg(v)
///
/// The edge sum counts each edge once; the pair sum runs over all C(n,2)
/// unordered vertex pairs. Throws std::domain_error for constant maps or
/// when two used points are in different components of the target, and
/// zero_denominator_error when the denominator vanishes.
inline Rational rayleigh_quotient(const Graph& g, const DistanceMatrix& dh, const Assignment& f) {
  int n = g.vertex_count();
  int k = dh.point_count();
  if (static_cast<int>(f.image.size()) != n)
    throw std::invalid_argument("rayleigh_quotient: assignment length != vertex count");
  for (int x : f.image)
    if (x < 0 || x >= k) throw std::invalid_argument("rayleigh_quotient: image point out of range");
  if (!f.nonconstant()) throw std::domain_error("rayleigh_quotient: constant assignment");

  __int128 edge_sum = 0;
  for (const Edge& e : g.edges()) {
    int a = f.image[e.first], b = f.image[e.second];
    if (!dh.reachable(a, b))
      throw std::domain_error("rayleigh_quotient: images in different components of the target");
    long long d = dh.at(a, b);
    edge_sum += static_cast<__int128>(d) * d;
  }
  __int128 pair_sum = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int a = f.image[u], b = f.image[v];
      if (!dh.reachable(a, b))
        throw std::domain_error("rayleigh_quotient: images in different components of the target");
      long long d = dh.at(a, b);
      pair_sum += static_cast<__int128>(d) * d * g.degree(u) * g.degree(v);
    }
  }
  if (pair_sum == 0) throw zero_denominator_error("rayleigh_quotient: zero denominator");
  return Rational::from_i128(static_cast<__int128>(g.volume()) * edge_sum, pair_sum);
}

inline Rational rayleigh_quotient(const Graph& g, const Graph& h, const Assignment& f) {
  return rayleigh_quotient(g, apsp(h), f);
}

/// R_f computed for a concrete witness map; an upper bound for the gap.
inline Rational lambda_upper_witness(const Graph& g, const Graph& h, const Assignment& f) {
  return rayleigh_quotient(g, apsp(h), f);
}

}  // namespace metricgap
