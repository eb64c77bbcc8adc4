#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "metricgap/graph.hpp"

namespace metricgap {

/// Dense symmetric matrix; set() writes both mirror entries so symmetry is
/// exact by construction.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {
    if (n < 1) throw std::invalid_argument("SymmetricMatrix: size must be >= 1");
  }

  int size() const { return n_; }
  double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  void set(int i, int j, double v) {
    a_[static_cast<size_t>(i) * n_ + j] = v;
    a_[static_cast<size_t>(j) * n_ + i] = v;
  }

 private:
  int n_;
  std::vector<double> a_;
};

class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& msg, double offdiag)
      : std::runtime_error(msg), offdiag(offdiag) {}
  double offdiag;
};

/// Normalized Laplacian: L = I - D^{-1/2} A D^{-1/2} on vertices of positive
/// degree; rows and columns of isolated vertices are identically zero, so the
/// trace equals the number of non-isolated vertices.
inline SymmetricMatrix normalized_laplacian(const Graph& g) {
  int n = g.vertex_count();
  SymmetricMatrix L(n);
  for (int i = 0; i < n; ++i)
    if (g.degree(i) > 0) L.set(i, i, 1.0);
  for (const Edge& e : g.edges()) {
    double w = -1.0 / std::sqrt(static_cast<double>(g.degree(e.first)) * g.degree(e.second));
    L.set(e.first, e.second, w);
  }
  return L;
}

struct EigenSystem {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[i] pairs with values[i]
  double max_residual;                       // max-norm of A v - lambda v
  int sweeps;
};

/// Cyclic Jacobi eigensolver. Sweeps rotate out every off-diagonal pair in
/// row order until the off-diagonal Frobenius norm drops below the target;
/// exceeding max_sweeps raises convergence_error with the residual norm.
inline EigenSystem jacobi_eigensystem(const SymmetricMatrix& A0, double offdiag_target = 1e-12,
                                      int max_sweeps = 100) {
  int n = A0.size();
  std::vector<double> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = A0.at(i, j);
  std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

  auto off_norm = [&] {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double x = a[static_cast<size_t>(p) * n + q];
        s += 2.0 * x * x;
      }
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > offdiag_target) {
    if (++sweep > max_sweeps)
      throw convergence_error("jacobi: no convergence after " + std::to_string(max_sweeps) +
                                  " sweeps",
                              off_norm());
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = a[static_cast<size_t>(p) * n + q];
        if (std::fabs(apq) < 1e-300) continue;
        double app = a[static_cast<size_t>(p) * n + p];
        double aqq = a[static_cast<size_t>(q) * n + q];
        double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;

        for (int i = 0; i < n; ++i) {
          double aip = a[static_cast<size_t>(i) * n + p];
          double aiq = a[static_cast<size_t>(i) * n + q];
          a[static_cast<size_t>(i) * n + p] = c * aip - s * aiq;
          a[static_cast<size_t>(i) * n + q] = s * aip + c * aiq;
        }
        for (int j = 0; j < n; ++j) {
          double apj = a[static_cast<size_t>(p) * n + j];
          double aqj = a[static_cast<size_t>(q) * n + j];
          a[static_cast<size_t>(p) * n + j] = c * apj - s * aqj;
          a[static_cast<size_t>(q) * n + j] = s * apj + c * aqj;
        }
        for (int i = 0; i < n; ++i) {
          double vip = v[static_cast<size_t>(i) * n + p];
          double viq = v[static_cast<size_t>(i) * n + q];
          v[static_cast<size_t>(i) * n + p] = c * vip - s * viq;
          v[static_cast<size_t>(i) * n + q] = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return a[static_cast<size_t>(x) * n + x] < a[static_cast<size_t>(y) * n + y];
  });

  EigenSystem out;
  out.sweeps = sweep;
  out.values.resize(n);
  out.vectors.assign(n, std::vector<double>(n));
  for (int idx = 0; idx < n; ++idx) {
    int col = order[idx];
    out.values[idx] = a[static_cast<size_t>(col) * n + col];
    for (int i = 0; i < n; ++i) out.vectors[idx][i] = v[static_cast<size_t>(i) * n + col];
  }

  out.max_residual = 0.0;
  for (int idx = 0; idx < n; ++idx) {
    for (int i = 0; i < n; ++i) {
      double r = -out.values[idx] * out.vectors[idx][i];
      for (int j = 0; j < n; ++j) r += A0.at(i, j) * out.vectors[idx][j];
      out.max_residual = std::max(out.max_residual, std::fabs(r));
    }
  }
  return out;
}

struct SpectralResult {
  std::vector<double> eigenvalues;  // ascending, all of them
  double lambda1;                   // first nonzero for connected g, else 0
  double residual;
};

/// Classical gap lambda(g, R): the second-smallest eigenvalue of the
/// normalized Laplacian when g is connected. Disconnected graphs report 0,
/// matching the vanishing of the continuous Rayleigh infimum.
inline SpectralResult lambda_R(const Graph& g) {
  if (g.vertex_count() < 2) throw std::invalid_argument("lambda_R: needs at least 2 vertices");
  EigenSystem es = jacobi_eigensystem(normalized_laplacian(g));
  SpectralResult out;
  out.eigenvalues = es.values;
  out.residual = es.max_residual;
  out.lambda1 = g.is_connected() ? es.values[1] : 0.0;
  return out;
}

/// Floating-point Rayleigh quotient of a vertex-to-real map:
/// vol(G) * sum over edges (x_u - x_v)^2 / sum over unordered pairs
/// (x_u - x_v)^2 deg(u) deg(v). Degenerate denominators raise domain_error.
inline double rayleigh_R(const Graph& g, const std::vector<double>& x) {
  int n = g.vertex_count();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("rayleigh_R: value count != vertex count");
  double num = 0.0;
  for (const Edge& e : g.edges()) {
    double d = x[e.first] - x[e.second];
    num += d * d;
  }
  double den = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double d = x[u] - x[v];
      den += d * d * g.degree(u) * g.degree(v);
    }
  if (den == 0.0) throw std::domain_error("rayleigh_R: zero denominator");
  return static_cast<double>(g.volume()) * num / den;
}

}  // namespace metricgap
