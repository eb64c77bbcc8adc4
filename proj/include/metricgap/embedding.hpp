#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "metricgap/distance.hpp"
#include "metricgap/gap_search.hpp"
#include "metricgap/graph.hpp"
#include "metricgap/rational.hpp"
#include "metricgap/spectral.hpp"

namespace metricgap {

namespace detail {

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

inline std::uint64_t cell_seed(std::uint64_t seed, int scale, int rep) {
  SplitMix64 s{seed ^ (0x100000001B3ull * static_cast<std::uint64_t>(scale))};
  std::uint64_t a = s.next();
  SplitMix64 t{a ^ static_cast<std::uint64_t>(rep)};
  return t.next();
}

}  // namespace detail

/// Coordinates of every point under the randomized distance-to-subset
/// embedding. points[x][i] is integral because the source metric is.
struct EmbeddingResult {
  std::vector<std::vector<long long>> points;  // k rows, `dimension` columns
  int dimension = 0;                           // scales * reps
  int scales = 0;
  int reps = 0;
  std::uint64_t seed = 0;
};

inline int ceil_log2(int k) {
  int t = 0;
  while ((1 << t) < k) ++t;
  return t;
}

/// Distance-to-random-subset embedding of a finite connected metric.
/// With L = ceil(log2 k), one coordinate per (scale t, repetition r) pair,
/// t in 1..L, r in 1..L: sample S by keeping each point with probability
/// 2^-t (a 64-bit draw below 2^(64-t), exact), then coordinate(x) = d(x,S).
/// An empty draw is resampled once from the same stream; twice empty leaves
/// the zero coordinate. Fully deterministic in (metric, seed).
inline EmbeddingResult bourgain_embed(const DistanceMatrix& dist, std::uint64_t seed) {
  int k = dist.point_count();
  if (k < 2) throw std::invalid_argument("bourgain_embed: needs at least 2 points");
  if (!dist.all_finite())
    throw std::invalid_argument("bourgain_embed: metric must be connected");

  int L = ceil_log2(k);
  EmbeddingResult out;
  out.scales = L;
  out.reps = L;
  out.dimension = L * L;
  out.seed = seed;
  out.points.assign(k, std::vector<long long>(out.dimension, 0));

  int coord = 0;
  for (int t = 1; t <= L; ++t) {
    std::uint64_t threshold = 1ull << (64 - t);
    for (int r = 1; r <= L; ++r, ++coord) {
      detail::SplitMix64 stream{detail::cell_seed(seed, t, r)};
      std::vector<int> subset;
      for (int attempt = 0; attempt < 2 && subset.empty(); ++attempt) {
        for (int p = 0; p < k; ++p)
          if (stream.next() < threshold) subset.push_back(p);
      }
      if (subset.empty()) continue;  // zero coordinate stays
      for (int x = 0; x < k; ++x) {
        int best = dist.at(x, subset[0]);
        for (size_t i = 1; i < subset.size(); ++i) best = std::min(best, dist.at(x, subset[i]));
        out.points[x][coord] = best;
      }
    }
  }
  return out;
}

/// Sum of coordinates: a 1-Lipschitz map from the l1 image to the line.
inline std::vector<long long> project_line(const EmbeddingResult& e) {
  std::vector<long long> out(e.points.size(), 0);
  for (size_t x = 0; x < e.points.size(); ++x)
    for (long long c : e.points[x]) out[x] += c;
  return out;
}

/// Exact worst-case stretch statistics of an embedded metric.
/// expansion = max ||g(x)-g(y)|| / d(x,y), contraction = max d(x,y) /
/// ||g(x)-g(y)||, distortion their product. A collision of distinct points
/// makes contraction (and distortion) infinite: contraction_finite == false
/// and the rational fields are meaningless.
struct DistortionReport {
  Rational expansion;
  Rational contraction;
  Rational distortion;
  bool contraction_finite = true;
};

/// Reports for the full l1 image and for its projection to the line.
struct DistortionPair {
  DistortionReport l1;
  DistortionReport line;
};

namespace detail {

inline DistortionReport distortion_from_norms(const DistanceMatrix& dist,
                                              const std::vector<std::vector<long long>>& norm) {
  int k = dist.point_count();
  DistortionReport rep;
  rep.expansion = Rational(0);
  rep.contraction = Rational(0);
  for (int x = 0; x < k; ++x)
    for (int y = x + 1; y < k; ++y) {
      long long d = dist.at(x, y);
      long long img = norm[x][y];
      Rational ex{BigInt(img), BigInt(d)};
      if (ex > rep.expansion) rep.expansion = ex;
      if (img == 0) {
        rep.contraction_finite = false;
        continue;
      }
      Rational co{BigInt(d), BigInt(img)};
      if (co > rep.contraction) rep.contraction = co;
    }
  if (rep.contraction_finite)
    rep.distortion = rep.expansion * rep.contraction;
  else
    rep.distortion = Rational(0);
  return rep;
}

}  // namespace detail

inline DistortionPair distortion(const DistanceMatrix& dist, const EmbeddingResult& e) {
  int k = dist.point_count();
  if (static_cast<int>(e.points.size()) != k)
    throw std::invalid_argument("distortion: embedding size mismatch");
  std::vector<std::vector<long long>> l1(k, std::vector<long long>(k, 0));
  std::vector<std::vector<long long>> line(k, std::vector<long long>(k, 0));
  std::vector<long long> phi = project_line(e);
  for (int x = 0; x < k; ++x)
    for (int y = x + 1; y < k; ++y) {
      long long s = 0;
      for (int i = 0; i < e.dimension; ++i) s += std::llabs(e.points[x][i] - e.points[y][i]);
      l1[x][y] = s;
      line[x][y] = std::llabs(phi[x] - phi[y]);
    }
  DistortionPair out;
  out.l1 = detail::distortion_from_norms(dist, l1);
  out.line = detail::distortion_from_norms(dist, line);
  return out;
}

/// One row of the gap-vs-line comparison: lambda(g,h) * ln(k)^2 / lambda(g,R).
struct RelateRecord {
  Rational lambda_gh;
  double lambda_r = 0.0;
  int k = 0;
  double ratio = 0.0;
};

inline RelateRecord relate_to_R_report(const Graph& g, const Graph& h, const Rational& lambda_gh,
                                       double lambda_r) {
  if (lambda_r <= 0.0)
    throw std::invalid_argument("relate_to_R_report: classical gap must be positive");
  RelateRecord rec;
  rec.lambda_gh = lambda_gh;
  rec.lambda_r = lambda_r;
  rec.k = h.vertex_count();
  double lg = std::log(static_cast<double>(rec.k));
  rec.ratio = lambda_gh.to_double() * lg * lg / lambda_r;
  return rec;
}

inline RelateRecord relate_to_R_report(const Graph& g, const Graph& h,
                                       const SearchOptions& opts = {}) {
  return relate_to_R_report(g, h, lambda_exact(g, h, opts).value, lambda_R(g).lambda1);
}

}  // namespace metricgap
