#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "metricgap/embedding.hpp"
#include "metricgap/graph6.hpp"

using namespace metricgap;

namespace {

Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  while (true) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) e.emplace_back(u, v);
    Graph g = Graph::from_edges(n, e);
    if (g.is_connected()) return g;
  }
}

// Direct-scan oracle for the stretch statistics of an l1 embedding.
void oracle_stats(const DistanceMatrix& d, const std::vector<std::vector<long long>>& pts,
                  Rational& expansion, Rational& contraction, bool& finite) {
  expansion = Rational(0);
  contraction = Rational(0);
  finite = true;
  int k = d.point_count();
  for (int x = 0; x < k; ++x)
    for (int y = x + 1; y < k; ++y) {
      long long s = 0;
      for (size_t i = 0; i < pts[x].size(); ++i) s += std::llabs(pts[x][i] - pts[y][i]);
      Rational ex(BigInt(s), BigInt(d.at(x, y)));
      expansion = std::max(expansion, ex);
      if (s == 0)
        finite = false;
      else
        contraction = std::max(contraction, Rational(BigInt(d.at(x, y)), BigInt(s)));
    }
}

}  // namespace

TEST_CASE("dimension follows ceil(log2 k) squared") {
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(4) == 2);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(62) == 6);

  CHECK(bourgain_embed(apsp(complete_bipartite(1, 1)), 1).dimension == 1);
  CHECK(bourgain_embed(apsp(cycle(4)), 1).dimension == 4);
  CHECK(bourgain_embed(apsp(cycle(5)), 1).dimension == 9);
  EmbeddingResult e = bourgain_embed(apsp(cycle(9)), 7);
  CHECK(e.scales == 4);
  CHECK(e.reps == 4);
  CHECK(e.dimension == 16);
  CHECK(e.points.size() == 9);
}

TEST_CASE("embedding is deterministic in metric and seed") {
  DistanceMatrix d = apsp(cycle(8));
  EmbeddingResult a = bourgain_embed(d, 42);
  EmbeddingResult b = bourgain_embed(d, 42);
  CHECK(a.points == b.points);
  EmbeddingResult c = bourgain_embed(d, 43);
  CHECK(a.points != c.points);
}

TEST_CASE("every coordinate is 1-Lipschitz and expansion stays below the dimension") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = random_connected(n, 0.4, rng);
    DistanceMatrix d = apsp(g);
    std::uint64_t seed = rng();
    EmbeddingResult e = bourgain_embed(d, seed);

    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (int i = 0; i < e.dimension; ++i) {
          CAPTURE(to_graph6(g), seed, x, y, i);
          CHECK(std::llabs(e.points[x][i] - e.points[y][i]) <= d.at(x, y));
        }

    DistortionPair dp = distortion(d, e);
    CHECK(dp.l1.expansion <= Rational(e.dimension));
    CHECK(dp.line.expansion <= dp.l1.expansion);

    // The line projection contracts against the l1 norm pointwise.
    std::vector<long long> phi = project_line(e);
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        long long l1 = 0;
        for (int i = 0; i < e.dimension; ++i) l1 += std::llabs(e.points[x][i] - e.points[y][i]);
        CHECK(std::llabs(phi[x] - phi[y]) <= l1);
      }
  }
}

TEST_CASE("distortion report agrees with a direct scan") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = random_connected(n, 0.5, rng);
    DistanceMatrix d = apsp(g);
    EmbeddingResult e = bourgain_embed(d, rng());
    DistortionPair dp = distortion(d, e);

    Rational exp_o, con_o;
    bool finite;
    oracle_stats(d, e.points, exp_o, con_o, finite);
    CHECK(dp.l1.expansion == exp_o);
    CHECK(dp.l1.contraction_finite == finite);
    if (finite) {
      CHECK(dp.l1.contraction == con_o);
      CHECK(dp.l1.distortion == exp_o * con_o);
      CHECK(dp.l1.distortion >= Rational(1));  // can never beat the identity
    }
  }
}

TEST_CASE("collisions flag infinite contraction") {
  DistanceMatrix d = apsp(path(3));
  EmbeddingResult fake;
  fake.dimension = 1;
  fake.scales = 1;
  fake.reps = 1;
  fake.points = {{0}, {0}, {1}};
  DistortionPair dp = distortion(d, fake);
  CHECK(!dp.l1.contraction_finite);
  CHECK(dp.l1.expansion == Rational(1));
  CHECK(!dp.line.contraction_finite);
}

TEST_CASE("twice-empty draws leave a zero coordinate") {
  // k = 2 at scale 1 keeps each point with probability 1/2, so some seeds
  // leave the subset empty twice; the coordinate must then stay zero for
  // both points rather than being resampled forever.
  DistanceMatrix d = apsp(complete_bipartite(1, 1));
  bool found = false;
  for (std::uint64_t seed = 0; seed < 4000 && !found; ++seed) {
    EmbeddingResult e = bourgain_embed(d, seed);
    if (e.points[0][0] == 0 && e.points[1][0] == 0) {
      found = true;
      DistortionPair dp = distortion(d, e);
      CHECK(!dp.l1.contraction_finite);
    }
  }
  CHECK(found);
}

TEST_CASE("embedding rejects degenerate metrics") {
  CHECK_THROWS_AS(bourgain_embed(apsp(Graph(1)), 1), std::invalid_argument);
  Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(bourgain_embed(apsp(split), 1), std::invalid_argument);
}

TEST_CASE("gap-versus-line ratio uses squared natural log") {
  RelateRecord rec = relate_to_R_report(complete(4), complete(3));
  CHECK(rec.k == 3);
  CHECK(rec.lambda_gh == Rational(BigInt(4), BigInt(3)));
  double lg = std::log(3.0);
  CHECK(std::fabs(rec.ratio - lg * lg) < 1e-9);

  // Complete sources make the metric gap equal the classical one exactly.
  for (int n = 3; n <= 6; ++n)
    for (int m = 2; m <= 4; ++m) {
      RelateRecord r = relate_to_R_report(complete(n), complete(m));
      double l = std::log(static_cast<double>(m));
      CHECK(std::fabs(r.ratio - l * l) < 1e-9);
    }

  CHECK_THROWS_AS(relate_to_R_report(complete(3), complete(3), Rational(1), 0.0),
                  std::invalid_argument);
}
