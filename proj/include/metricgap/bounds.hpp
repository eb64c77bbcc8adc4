#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "metricgap/distance.hpp"
#include "metricgap/gap_search.hpp"
#include "metricgap/graph.hpp"
#include "metricgap/rational.hpp"

namespace metricgap {

enum class BoundStatus { holds, fails, not_applicable };

inline const char* to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::holds: return "holds";
    case BoundStatus::fails: return "fails";
    default: return "not_applicable";
  }
}

/// One checked inequality. `subject_value` is the quantity being bounded,
/// `bound_value` the closed-form side, and slack = subject - bound (signed),
/// so a lower bound holds at slack >= 0 and an upper bound at slack <= 0.
/// not_applicable marks reports whose preconditions were not met (or that
/// are informational by design); it is never a failure.
struct BoundReport {
  std::string name;
  Rational bound_value;
  Rational subject_value;
  BoundStatus status = BoundStatus::not_applicable;
  Rational slack;

  bool holds() const { return status == BoundStatus::holds; }
};

namespace detail {

inline BoundReport lower_report(std::string name, Rational bound, Rational subject) {
  BoundReport r;
  r.name = std::move(name);
  r.bound_value = std::move(bound);
  r.subject_value = std::move(subject);
  r.slack = r.subject_value - r.bound_value;
  r.status = r.subject_value >= r.bound_value ? BoundStatus::holds : BoundStatus::fails;
  return r;
}

inline BoundReport upper_report(std::string name, Rational bound, Rational subject,
                                bool strict = false) {
  BoundReport r;
  r.name = std::move(name);
  r.bound_value = std::move(bound);
  r.subject_value = std::move(subject);
  r.slack = r.subject_value - r.bound_value;
  bool ok = strict ? r.subject_value < r.bound_value : r.subject_value <= r.bound_value;
  r.status = ok ? BoundStatus::holds : BoundStatus::fails;
  return r;
}

inline BoundReport equality_report(std::string name, Rational bound, Rational subject) {
  BoundReport r;
  r.name = std::move(name);
  r.bound_value = std::move(bound);
  r.subject_value = std::move(subject);
  r.slack = r.subject_value - r.bound_value;
  r.status = r.subject_value == r.bound_value ? BoundStatus::holds : BoundStatus::fails;
  return r;
}

inline BoundReport informational_report(std::string name, Rational bound, Rational subject) {
  BoundReport r;
  r.name = std::move(name);
  r.bound_value = std::move(bound);
  r.subject_value = std::move(subject);
  r.slack = r.subject_value - r.bound_value;
  r.status = BoundStatus::not_applicable;
  return r;
}

inline void require_connected(const Graph& g, const char* who) {
  if (!g.is_connected()) throw std::invalid_argument(std::string(who) + ": graph must be connected");
}

}  // namespace detail

/// Largest squared 2-norm of an integer vector with nonnegative parts summing
/// to C and at least two positive parts: (C-1)^2 + 1 = C^2 - 2C + 2, attained
/// at (C-1, 1, 0, ...). Closed form valid for C >= 6 and any k >= 2 parts.
inline long long two_class_norm_max(long long C, int k) {
  if (C < 6) throw std::invalid_argument("two_class_norm_max: needs C >= 6");
  if (k < 2) throw std::invalid_argument("two_class_norm_max: needs k >= 2");
  return C * C - 2 * C + 2;
}

/// Count of missing edges scaled by the squared diameter:
/// (C(n,2) - m) * D_G^2. The growth term in the perturbation bounds.
inline long long nonedge_diameter_term(const Graph& g) {
  detail::require_connected(g, "nonedge_diameter_term");
  long long n = g.vertex_count();
  long long nonedges = n * (n - 1) / 2 - g.edge_count();
  long long d = apsp(g).diameter();
  return nonedges * d * d;
}

/// Window for the Rayleigh denominator of a nonconstant assignment:
///   vol - 1  <=  sum d(f(u),f(v))^2 deg(u) deg(v)  <=  vol^2 D_H^2 (1 - 1/k) / 2.
/// The lower side needs vol(g) >= 6. Both graphs must be connected.
inline std::pair<BoundReport, BoundReport> denominator_bounds(const Graph& g, const Graph& h,
                                                              const Assignment& f) {
  detail::require_connected(g, "denominator_bounds");
  detail::require_connected(h, "denominator_bounds");
  if (!f.nonconstant()) throw std::invalid_argument("denominator_bounds: constant assignment");
  if (g.volume() < 6) throw std::invalid_argument("denominator_bounds: needs vol >= 6");

  DistanceMatrix dm = apsp(h);
  int n = g.vertex_count();
  __int128 den = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      long long d = dm.at(f.image[u], f.image[v]);
      den += static_cast<__int128>(d) * d * g.degree(u) * g.degree(v);
    }
  Rational subject = Rational::from_i128(den, 1);

  long long vol = g.volume();
  long long dh = dm.diameter();
  int k = h.vertex_count();
  Rational upper = Rational(BigInt(vol) * vol * dh * dh, BigInt(2)) *
                   Rational(BigInt(k - 1), BigInt(k));
  return {detail::lower_report("denominator_lower", Rational(vol - 1), subject),
          detail::upper_report("denominator_upper", upper, subject)};
}

/// lambda(g,h) >= vol / (maxdeg^2 * (1 + nonedge term)), for connected g, h.
inline BoundReport nonedge_lower(const Graph& g, const Rational& lambda) {
  detail::require_connected(g, "nonedge_lower");
  BigInt dd = BigInt(g.max_degree()) * g.max_degree();
  Rational bound(BigInt(g.volume()), dd * (1 + BigInt(nonedge_diameter_term(g))));
  return detail::lower_report("nonedge_lower", bound, lambda);
}

/// lambda(g,h) <= n/(n-1) for every connected g on n >= 2 vertices.
inline Rational complete_upper_value(int n) {
  if (n < 2) throw std::invalid_argument("complete_upper_value: needs n >= 2");
  return Rational(BigInt(n), BigInt(n - 1));
}

/// The cap uses the count of non-isolated vertices: isolated vertices carry
/// no degree weight, so the gap of g equals the gap of g restricted to them.
/// For connected g this is the plain n/(n-1) bound.
inline BoundReport complete_upper(const Graph& g, const Rational& lambda) {
  return detail::upper_report("complete_upper", complete_upper_value(g.support_size()), lambda);
}

/// Equality in the cap characterizes graphs whose non-isolated vertices form
/// a clique. Needs a gap that is actually defined (at least one edge).
inline BoundReport complete_equality(const Graph& g, const Rational& lambda) {
  int ns = g.support_size();
  Rational top = complete_upper_value(ns);
  bool clique = 2LL * g.edge_count() == static_cast<long long>(ns) * (ns - 1);
  BoundReport r;
  r.name = "complete_equality";
  r.bound_value = top;
  r.subject_value = lambda;
  r.slack = lambda - top;
  r.status = ((lambda == top) == clique) ? BoundStatus::holds : BoundStatus::fails;
  return r;
}

/// lambda(g,h) >= 2k / (D_H^2 * vol * (k-1)), connected g and h.
inline BoundReport naive_lower(const Graph& g, const Graph& h, const Rational& lambda) {
  detail::require_connected(g, "naive_lower");
  detail::require_connected(h, "naive_lower");
  long long dh = apsp(h).diameter();
  int k = h.vertex_count();
  Rational bound(BigInt(2) * k, BigInt(dh) * dh * g.volume() * (k - 1));
  return detail::lower_report("naive_lower", bound, lambda);
}

/// lambda(g,h) >= 2 / ((n-1) d D_H^2) for connected d-regular g.
inline BoundReport regular_lower(const Graph& g, const Graph& h, const Rational& lambda) {
  detail::require_connected(g, "regular_lower");
  detail::require_connected(h, "regular_lower");
  if (!g.is_regular()) throw std::invalid_argument("regular_lower: graph must be regular");
  long long dh = apsp(h).diameter();
  long long d = g.max_degree();
  Rational bound(BigInt(2), BigInt(g.vertex_count() - 1) * d * dh * dh);
  return detail::lower_report("regular_lower", bound, lambda);
}

/// Two-sided control of lambda(g,h2)/lambda(g,h) when the target changes.
/// Emits every applicable window; inapplicable ones come back not_applicable.
/// The volume-form window needs vol(g) >= 6; the minus-edge window needs h
/// complete and h2 equal to h minus exactly one edge. The statement-form
/// value is reported for reference but never asserted.
inline std::vector<BoundReport> target_swap_bounds(const Graph& g, const Graph& h,
                                                   const Graph& h2, const Rational& lambda_h,
                                                   const Rational& lambda_h2) {
  detail::require_connected(g, "target_swap_bounds");
  detail::require_connected(h, "target_swap_bounds");
  detail::require_connected(h2, "target_swap_bounds");
  if (lambda_h.sign() <= 0)
    throw std::invalid_argument("target_swap_bounds: lambda(g,h) must be positive");

  Rational ratio = lambda_h2 / lambda_h;
  std::vector<BoundReport> out;

  BigInt d2 = BigInt(g.max_degree()) * g.max_degree();
  BigInt s2 = BigInt(g.min_degree()) * g.min_degree();
  BigInt grow = d2 * (1 + BigInt(nonedge_diameter_term(g)));
  out.push_back(detail::upper_report("target_swap_upper", Rational(grow, s2), ratio));
  out.push_back(detail::lower_report("target_swap_lower", Rational(s2, grow), ratio));

  long long dh = apsp(h).diameter();
  long long dh2 = apsp(h2).diameter();
  if (g.volume() >= 6) {
    Rational window(BigInt(3) * g.volume() * dh * dh * dh2 * dh2, BigInt(5));
    out.push_back(detail::upper_report("target_swap_volume_upper", window, ratio));
    out.push_back(
        detail::lower_report("target_swap_volume_lower",
                             Rational(BigInt(5), BigInt(3) * g.volume() * dh * dh * dh2 * dh2),
                             ratio));
  } else {
    BoundReport na;
    na.name = "target_swap_volume_upper";
    na.subject_value = ratio;
    out.push_back(na);
    na.name = "target_swap_volume_lower";
    out.push_back(na);
  }

  // Informational only: the coarse one-sided form with the m(k-1)^2 factor.
  int k = h.vertex_count();
  out.push_back(detail::informational_report(
      "target_swap_statement",
      Rational(d2 * dh * g.edge_count() * (k - 1) * (k - 1), s2), ratio));

  bool minus_edge = h.is_complete() && h2.vertex_count() == h.vertex_count() &&
                    h2.edge_count() == h.edge_count() - 1;
  if (minus_edge) {
    for (const Edge& e : h2.edges()) minus_edge = minus_edge && h.has_edge(e.first, e.second);
  }
  if (minus_edge) {
    out.push_back(detail::upper_report("minus_edge_target_upper", Rational(BigInt(4) * d2, s2), ratio));
    out.push_back(detail::lower_report("minus_edge_target_lower", Rational(s2, BigInt(4) * d2), ratio));
  } else {
    BoundReport na;
    na.name = "minus_edge_target_upper";
    na.subject_value = ratio;
    out.push_back(na);
    na.name = "minus_edge_target_lower";
    out.push_back(na);
  }
  return out;
}

/// lambda(g,h) <= D_{h_sub}^2 * lambda(g,h_sub) whenever h_sub sits inside h
/// as a subgraph. `embed` maps h_sub's vertices injectively onto vertices of
/// h so that every edge of h_sub lands on an edge of h.
inline BoundReport subgraph_target_upper(const Graph& g, const Graph& h, const Graph& h_sub,
                                         const std::vector<int>& embed, const Rational& lambda_h,
                                         const Rational& lambda_hsub) {
  detail::require_connected(h_sub, "subgraph_target_upper");
  if (static_cast<int>(embed.size()) != h_sub.vertex_count())
    throw std::invalid_argument("subgraph_target_upper: embedding size mismatch");
  std::vector<char> used(h.vertex_count(), 0);
  for (int x : embed) {
    if (x < 0 || x >= h.vertex_count())
      throw std::invalid_argument("subgraph_target_upper: embedding out of range");
    if (used[x]) throw std::invalid_argument("subgraph_target_upper: embedding not injective");
    used[x] = 1;
  }
  for (const Edge& e : h_sub.edges())
    if (!h.has_edge(embed[e.first], embed[e.second]))
      throw std::invalid_argument("subgraph_target_upper: edge not preserved");
  (void)g;
  long long d = apsp(h_sub).diameter();
  return detail::upper_report("subgraph_target_upper",
                              Rational(BigInt(d) * d, BigInt(1)) * lambda_hsub, lambda_h);
}

/// Helper for the edge-addition window: the two candidate lower factors
/// (vol-1)/(vol-1+D_H^2(2vol+1)) and 1/4 before the max is taken.
inline std::pair<Rational, Rational> edge_addition_lower_terms(const Graph& g, const Graph& h) {
  long long vol = g.volume();
  long long dh = apsp(h).diameter();
  Rational first(BigInt(vol - 1), BigInt(vol - 1) + BigInt(dh) * dh * (2 * vol + 1));
  return {first, Rational(BigInt(1), BigInt(4))};
}

/// Window for lambda(g+e,h)/lambda(g,h) after adding one edge to g:
///   (1+2/vol) * max{ (vol-1)/(vol-1+D_H^2(2vol+1)), 1/4 }
///     <= ratio <= (1+2/vol)(1+D_H^2),
/// with vol = vol(g) >= 6 and connected g, h.
inline std::pair<BoundReport, BoundReport> edge_addition_bounds(const Graph& g,
                                                                const Graph& g_plus,
                                                                const Graph& h,
                                                                const Rational& lambda_g,
                                                                const Rational& lambda_gplus) {
  detail::require_connected(g, "edge_addition_bounds");
  detail::require_connected(h, "edge_addition_bounds");
  if (g.volume() < 6) throw std::invalid_argument("edge_addition_bounds: needs vol >= 6");
  if (g_plus.vertex_count() != g.vertex_count() || g_plus.edge_count() != g.edge_count() + 1)
    throw std::invalid_argument("edge_addition_bounds: second graph must add exactly one edge");
  for (const Edge& e : g.edges())
    if (!g_plus.has_edge(e.first, e.second))
      throw std::invalid_argument("edge_addition_bounds: second graph must contain the first");
  if (lambda_g.sign() <= 0)
    throw std::invalid_argument("edge_addition_bounds: lambda(g,h) must be positive");

  Rational ratio = lambda_gplus / lambda_g;
  long long vol = g.volume();
  long long dh = apsp(h).diameter();
  Rational scale(BigInt(vol + 2), BigInt(vol));
  Rational upper = scale * Rational(BigInt(1 + dh * dh), BigInt(1));
  auto [first, quarter] = edge_addition_lower_terms(g, h);
  Rational lower = scale * std::max(first, quarter);
  return {detail::lower_report("edge_addition_lower", lower, ratio),
          detail::upper_report("edge_addition_upper", upper, ratio)};
}

/// Window for lambda(g_sup,h)/lambda(g,h) where g is d-regular and g_sup a
/// (d+1)-regular supergraph on the same vertices:
///   d/(d+1) <= ratio <= d/(d+1) * (1 + n D_H^2 / 2).
inline std::pair<BoundReport, BoundReport> regular_supergraph_bounds(const Graph& g,
                                                                     const Graph& g_sup,
                                                                     const Graph& h,
                                                                     const Rational& lambda_g,
                                                                     const Rational& lambda_gsup) {
  detail::require_connected(g, "regular_supergraph_bounds");
  detail::require_connected(h, "regular_supergraph_bounds");
  if (!g.is_regular() || !g_sup.is_regular())
    throw std::invalid_argument("regular_supergraph_bounds: both graphs must be regular");
  if (g_sup.vertex_count() != g.vertex_count() || g_sup.max_degree() != g.max_degree() + 1)
    throw std::invalid_argument("regular_supergraph_bounds: degree must grow by exactly one");
  for (const Edge& e : g.edges())
    if (!g_sup.has_edge(e.first, e.second))
      throw std::invalid_argument("regular_supergraph_bounds: second graph must contain the first");
  if (lambda_g.sign() <= 0)
    throw std::invalid_argument("regular_supergraph_bounds: lambda(g,h) must be positive");

  Rational ratio = lambda_gsup / lambda_g;
  long long d = g.max_degree();
  long long n = g.vertex_count();
  long long dh = apsp(h).diameter();
  Rational base(BigInt(d), BigInt(d + 1));
  Rational upper = base * Rational(BigInt(2) + n * dh * dh, BigInt(2));
  return {detail::lower_report("regular_supergraph_lower", base, ratio),
          detail::upper_report("regular_supergraph_upper", upper, ratio)};
}

/// Exact identity lambda(K_{part_size * parts}, K_2) = 1 for part_size >= 2.
/// part_size == 1 collapses to a complete graph where the identity fails;
/// that case is computed and reported but marked not_applicable.
inline BoundReport multipartite_identity(int part_size, int parts,
                                         const SearchOptions& opts = {}) {
  Graph g = complete_multipartite(part_size, parts);
  Rational lambda = lambda_exact(g, complete_bipartite(1, 1), opts).value;
  if (part_size == 1) {
    BoundReport r = detail::informational_report("multipartite_identity", Rational(1), lambda);
    return r;
  }
  return detail::equality_report("multipartite_identity", Rational(1), lambda);
}

/// Exact identity lambda(K_{n,n}, K_k) = 1 for n >= 2, k >= 2.
inline BoundReport balanced_bipartite_identity(int n, int k, const SearchOptions& opts = {}) {
  if (n < 2) throw std::invalid_argument("balanced_bipartite_identity: needs n >= 2");
  if (k < 2) throw std::invalid_argument("balanced_bipartite_identity: needs k >= 2");
  Graph g = complete_bipartite(n, n);
  Rational lambda = lambda_exact(g, complete(k), opts).value;
  return detail::equality_report("balanced_bipartite_identity", Rational(1), lambda);
}

/// Window 1 <= lambda(K_n minus an edge, K_2) < n/(n-1) for n >= 3.
inline std::vector<BoundReport> near_complete_window(int n, const SearchOptions& opts = {}) {
  if (n < 3) throw std::invalid_argument("near_complete_window: needs n >= 3");
  Rational lambda = lambda_exact(complete_minus_edge(n), complete_bipartite(1, 1), opts).value;
  return {detail::lower_report("near_complete_lower", Rational(1), lambda),
          detail::upper_report("near_complete_upper", complete_upper_value(n), lambda,
                               /*strict=*/true)};
}

/// Consistency of a (n, lambda) sequence with convergence to 1 from inside
/// the shrinking windows: every value sits in its own window and each later
/// value also fits every earlier (wider) window.
inline BoundReport near_complete_trend(const std::vector<std::pair<int, Rational>>& seq) {
  BoundReport r;
  r.name = "near_complete_trend";
  r.bound_value = Rational(1);
  r.status = BoundStatus::holds;
  for (size_t i = 0; i < seq.size(); ++i) {
    const auto& [n, lambda] = seq[i];
    r.subject_value = lambda;
    if (lambda < Rational(1) || lambda >= complete_upper_value(n)) r.status = BoundStatus::fails;
    for (size_t j = 0; j < i; ++j)
      if (lambda >= complete_upper_value(seq[j].first)) r.status = BoundStatus::fails;
  }
  r.slack = r.subject_value - r.bound_value;
  return r;
}

}  // namespace metricgap
