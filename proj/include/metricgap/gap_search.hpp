#pragma once

#include <climits>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "metricgap/distance.hpp"
#include "metricgap/graph.hpp"
#include "metricgap/orbits.hpp"
#include "metricgap/rayleigh.hpp"

namespace metricgap {

/// Default enumeration budget: METRIC_GAP_BUDGET from the environment when
/// set to a positive integer, otherwise 1e8 raw assignments.
inline long long default_search_budget() {
  static const long long v = [] {
    if (const char* s = std::getenv("METRIC_GAP_BUDGET")) {
      char* end = nullptr;
      long long x = std::strtoll(s, &end, 10);
      if (end && *end == '\0' && x > 0) return x;
    }
    return 100000000LL;
  }();
  return v;
}

struct SearchOptions {
  /// Cap on the raw assignment space k^n, checked before pruning.
  long long budget = default_search_budget();
  /// Worker threads. Results are identical for any worker count.
  int workers = 1;
  /// Restrict the first vertex's image to one representative per
  /// automorphism orbit of the target. Sound: target distances are
  /// automorphism-invariant, so each pruned assignment has an equal-value
  /// unpruned twin.
  bool orbit_pruning = true;
};

struct GapResult {
  Rational value;
  Assignment witness;  // first assignment attaining the minimum, in scan order
  long long assignments_evaluated = 0;
  long long assignments_skipped_zero_denominator = 0;
};

/// Raw assignment space exceeded SearchOptions::budget. Carries the best
/// quotient seen before the cutoff, when any assignment was evaluated.
class budget_exceeded_error : public std::runtime_error {
 public:
  budget_exceeded_error(const std::string& msg, std::optional<Rational> partial)
      : std::runtime_error(msg), partial_upper_bound(std::move(partial)) {}
  std::optional<Rational> partial_upper_bound;
};

/// No nonconstant assignment with positive denominator exists (single-vertex
/// source, or a target whose components are all single points).
class undefined_gap_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

struct ScanAccumulator {
  bool has = false;
  __int128 best_num = 0;
  __int128 best_den = 1;
  int rep_pos = -1;     // position in the representative list
  long long step = -1;  // counter value inside that representative's block
  std::vector<int> best_image;
  long long evaluated = 0;
  long long skipped_zero = 0;
  long long steps = 0;
};

// Enumerate assignments whose first vertex maps to reps[rp] for each rp in
// rep_positions, in (rp, counter) order. Remaining vertices run through a
// mixed-radix counter with image[n-1] least significant. Stops after
// max_steps enumerated assignments (constants and skips count as steps).
inline void scan_assignments(const Graph& g, const std::vector<long long>& dist2,
                             const std::vector<long long>& degprod, int k,
                             const std::vector<int>& reps,
                             const std::vector<int>& rep_positions, long long max_steps,
                             ScanAccumulator& acc) {
  const int n = g.vertex_count();
  const long long vol = g.volume();
  const auto& edges = g.edges();
  std::vector<int> img(n, 0);

  for (int rp : rep_positions) {
    img[0] = reps[rp];
    std::fill(img.begin() + 1, img.end(), 0);
    long long step = 0;
    while (true) {
      if (acc.steps >= max_steps) return;
      ++acc.steps;

      bool constant = true;
      for (int i = 1; i < n; ++i)
        if (img[i] != img[0]) {
          constant = false;
          break;
        }
      if (!constant) {
        __int128 den = 0;
        for (int u = 0; u < n; ++u) {
          const long long* row = dist2.data() + static_cast<size_t>(img[u]) * k;
          const long long* dp = degprod.data() + static_cast<size_t>(u) * n;
          for (int v = u + 1; v < n; ++v)
            den += static_cast<__int128>(row[img[v]]) * dp[v];
        }
        if (den == 0) {
          ++acc.skipped_zero;
        } else {
          __int128 esum = 0;
          for (const Edge& e : edges)
            esum += dist2[static_cast<size_t>(img[e.first]) * k + img[e.second]];
          __int128 num = static_cast<__int128>(vol) * esum;
          ++acc.evaluated;
          if (!acc.has || num * acc.best_den < acc.best_num * den) {
            acc.has = true;
            acc.best_num = num;
            acc.best_den = den;
            acc.rep_pos = rp;
            acc.step = step;
            acc.best_image = img;
          }
        }
      }

      ++step;
      int pos = n - 1;
      while (pos >= 1 && ++img[pos] == k) {
        img[pos] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
}

// True when a's best comes strictly before b's in (value, scan order).
inline bool scan_better(const ScanAccumulator& a, const ScanAccumulator& b) {
  if (!a.has) return false;
  if (!b.has) return true;
  __int128 lhs = a.best_num * b.best_den;
  __int128 rhs = b.best_num * a.best_den;
  if (lhs != rhs) return lhs < rhs;
  if (a.rep_pos != b.rep_pos) return a.rep_pos < b.rep_pos;
  return a.step < b.step;
}

inline GapResult lambda_exact_connected(const Graph& g, const Graph& h,
                                        const SearchOptions& opts) {
  const int n = g.vertex_count();
  const int k = h.vertex_count();

  DistanceMatrix dm = apsp(h);
  std::vector<long long> dist2 = squared_distance_table(dm);
  std::vector<long long> degprod(static_cast<size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      degprod[static_cast<size_t>(u) * n + v] =
          static_cast<long long>(g.degree(u)) * g.degree(v);

  long long raw = 1;
  bool over_budget = false;
  for (int i = 0; i < n; ++i) {
    if (raw > opts.budget / k) {
      over_budget = true;
      break;
    }
    raw *= k;
  }

  std::vector<int> reps;
  if (opts.orbit_pruning) {
    reps = vertex_orbits(h).representatives;
  } else {
    reps.resize(k);
    for (int i = 0; i < k; ++i) reps[i] = i;
  }
  std::vector<int> all_positions(reps.size());
  for (size_t i = 0; i < reps.size(); ++i) all_positions[i] = static_cast<int>(i);

  if (over_budget) {
    // Bounded serial scan so the error can still carry an upper bound.
    ScanAccumulator acc;
    scan_assignments(g, dist2, degprod, k, reps, all_positions, opts.budget, acc);
    std::optional<Rational> partial;
    if (acc.has) partial = Rational::from_i128(acc.best_num, acc.best_den);
    throw budget_exceeded_error(
        "lambda_exact: assignment space " + std::to_string(k) + "^" + std::to_string(n) +
            " exceeds budget " + std::to_string(opts.budget),
        partial);
  }

  int workers = std::max(1, opts.workers);
  workers = std::min<int>(workers, static_cast<int>(reps.size()));

  std::vector<ScanAccumulator> accs(workers);
  if (workers == 1) {
    scan_assignments(g, dist2, degprod, k, reps, all_positions, LLONG_MAX, accs[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      std::vector<int> slice;
      for (size_t i = w; i < reps.size(); i += workers) slice.push_back(static_cast<int>(i));
      pool.emplace_back([&, w, slice] {
        scan_assignments(g, dist2, degprod, k, reps, slice, LLONG_MAX, accs[w]);
      });
    }
    for (auto& t : pool) t.join();
  }

  GapResult out;
  int best = -1;
  for (int w = 0; w < workers; ++w) {
    out.assignments_evaluated += accs[w].evaluated;
    out.assignments_skipped_zero_denominator += accs[w].skipped_zero;
    if (best < 0 || scan_better(accs[w], accs[best])) best = w;
  }
  if (best < 0 || !accs[best].has)
    throw undefined_gap_error(
        "lambda_exact: no nonconstant assignment with positive denominator");
  out.value = Rational::from_i128(accs[best].best_num, accs[best].best_den);
  out.witness = Assignment{accs[best].best_image};
  return out;
}

}  // namespace detail

/// Exact metric-space gap of g into the hop metric of h, by exhaustive
/// enumeration of assignments V(g) -> V(h):
///
///   lambda(g,h) = min over nonconstant f with positive denominator of R_f.
///
/// A disconnected target reduces to the minimum over its components with at
/// least two points (maps across components have infinite stretch and never
/// participate in the infimum). Ties keep the first attainer in scan order,
/// so the witness is deterministic for any worker count.
inline GapResult lambda_exact(const Graph& g, const Graph& h, const SearchOptions& opts = {}) {
  if (h.vertex_count() < 2)
    throw std::invalid_argument("lambda_exact: target needs at least 2 points");

  if (h.is_connected()) return detail::lambda_exact_connected(g, h, opts);

  std::vector<std::vector<int>> comps = components(h);
  GapResult best;
  bool has = false;
  long long evaluated = 0, skipped = 0;
  for (const auto& comp : comps) {
    if (comp.size() < 2) continue;
    Graph sub = induced_subgraph(h, comp);
    GapResult r = detail::lambda_exact_connected(g, sub, opts);
    evaluated += r.assignments_evaluated;
    skipped += r.assignments_skipped_zero_denominator;
    for (int& x : r.witness.image) x = comp[x];
    if (!has || r.value < best.value) {
      best = std::move(r);
      has = true;
    }
  }
  if (!has)
    throw undefined_gap_error("lambda_exact: target has no component with 2 points");
  best.assignments_evaluated = evaluated;
  best.assignments_skipped_zero_denominator = skipped;
  return best;
}

}  // namespace metricgap
