#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "metricgap/distance.hpp"
#include "metricgap/graph.hpp"
#include "metricgap/graph6.hpp"
#include "metricgap/io.hpp"
#include "metricgap/orbits.hpp"

using namespace metricgap;

namespace {

// All labeled graphs on n vertices, one per edge-subset bitmask.
std::vector<Graph> all_graphs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> e;
    for (size_t i = 0; i < pairs.size(); ++i)
      if (mask & (1u << i)) e.push_back(pairs[i]);
    out.push_back(Graph::from_edges(n, std::move(e)));
  }
  return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph::from_edges(n, std::move(e));
}

// Floyd-Warshall as an independent distance oracle.
std::vector<std::vector<long long>> floyd_warshall(const Graph& g) {
  const long long INF = 1e15;
  int n = g.vertex_count();
  std::vector<std::vector<long long>> d(n, std::vector<long long>(n, INF));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.first][e.second] = d[e.second][e.first] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v) != g.has_edge(perm[u], perm[v])) return false;
  return true;
}

// Orbit oracle: scan every permutation of the vertices.
std::vector<int> orbits_by_full_scan(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (!is_automorphism(g, perm)) continue;
    for (int v = 0; v < n; ++v) {
      int a = find(v), b = find(perm[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<int> label(n);
  for (int v = 0; v < n; ++v) label[v] = find(v);
  return label;
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("basic counts and degrees of the fixed families") {
  Graph k4 = complete(4);
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.is_complete());
  CHECK(k4.is_regular());
  CHECK(k4.volume() == 12);

  Graph p5 = path(5);
  CHECK(p5.edge_count() == 4);
  CHECK(p5.degree(0) == 1);
  CHECK(p5.degree(2) == 2);
  CHECK(p5.is_connected());

  Graph c6 = cycle(6);
  CHECK(c6.edge_count() == 6);
  CHECK(c6.is_regular());
  CHECK(c6.max_degree() == 2);

  Graph b = complete_bipartite(3, 3);
  CHECK(b.edge_count() == 9);
  CHECK(b.is_regular());
  CHECK(!b.has_edge(0, 1));
  CHECK(b.has_edge(0, 3));

  Graph m = complete_multipartite(2, 3);
  CHECK(m.vertex_count() == 6);
  CHECK(m.edge_count() == 12);
  CHECK(m.max_degree() == 4);
  CHECK(!m.has_edge(2, 3));
  CHECK(m.has_edge(0, 2));

  Graph ke = complete_minus_edge(5);
  CHECK(ke.edge_count() == 9);
  CHECK(!ke.has_edge(0, 1));
}

TEST_CASE("dumbbell family shapes") {
  Graph d = dumbbell(6);
  CHECK(d.edge_count() == 7);
  CHECK(d.degree(0) == 3);
  CHECK(d.degree(3) == 3);
  CHECK(d.degree(1) == 2);
  CHECK(d.has_edge(0, 3));
  CHECK(d.is_connected());

  Graph rd = regularized_dumbbell(8);
  CHECK(rd.is_regular());
  CHECK(rd.max_degree() == 3);
  CHECK(rd.edge_count() == 12);
  CHECK(!rd.has_edge(0, 1));
  CHECK(rd.has_edge(1, 5));
  CHECK(rd.is_connected());

  // Regularized dumbbell on 6 vertices is 2-regular and connected: a 6-cycle.
  Graph rd6 = regularized_dumbbell(6);
  CHECK(rd6.is_regular());
  CHECK(rd6.max_degree() == 2);
  CHECK(rd6.is_connected());

  CHECK_THROWS_AS(dumbbell(5), std::invalid_argument);
  CHECK_THROWS_AS(regularized_dumbbell(4), std::invalid_argument);
}

TEST_CASE("bipartite-plus-matching and red-clique families") {
  Graph g = balanced_bipartite_plus_matching(4);
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 20);
  CHECK(g.is_regular());
  CHECK(g.max_degree() == 5);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(2, 3));
  CHECK(g.has_edge(4, 5));
  CHECK(g.has_edge(6, 7));
  CHECK(!g.has_edge(1, 2));

  Graph rc = red_clique_bipartite(16, 8);
  CHECK(rc.vertex_count() == 32);
  CHECK(rc.edge_count() == 16 * 16 + 2 * 28);
  CHECK(rc.volume() == 624);
  CHECK(rc.degree(0) == 16 + 7);
  CHECK(rc.degree(15) == 16);
  CHECK(rc.has_edge(0, 7));
  CHECK(!rc.has_edge(8, 9));
  CHECK(rc.has_edge(16, 23));
}

TEST_CASE("edits copy instead of mutating") {
  Graph g = path(3);
  Graph g2 = add_edge(g, 0, 2);
  CHECK(g.edge_count() == 2);
  CHECK(g2.edge_count() == 3);
  CHECK(g2.is_complete());
  Graph g3 = remove_edge(g2, 0, 2);
  CHECK(g3 == g);
  CHECK_THROWS_AS(add_edge(g2, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(remove_edge(g, 0, 2), std::invalid_argument);
}

TEST_CASE("construction rejects malformed input") {
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("connected labeled graph counts match the known sequence") {
  // 38 connected labeled graphs on 4 vertices, 728 on 5.
  int c4 = 0;
  for (const Graph& g : all_graphs(4)) c4 += g.is_connected();
  CHECK(c4 == 38);
  int c5 = 0;
  for (const Graph& g : all_graphs(5)) c5 += g.is_connected();
  CHECK(c5 == 728);
}

TEST_CASE("support ignores isolated vertices") {
  Graph lone_edge = Graph::from_edges(4, {{0, 1}});
  CHECK(lone_edge.support_size() == 2);
  CHECK(lone_edge.support_connected());
  CHECK(!lone_edge.is_connected());

  Graph matching = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(matching.support_size() == 4);
  CHECK(!matching.support_connected());

  Graph triangle_plus = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(triangle_plus.support_size() == 3);
  CHECK(triangle_plus.support_connected());

  CHECK(Graph(3).support_size() == 0);
  CHECK(Graph(3).support_connected());
  CHECK(complete(4).support_size() == 4);
  CHECK(complete(4).support_connected());
}

TEST_CASE("components partition the vertex set") {
  Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
  auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1, 2});
  CHECK(comps[1] == std::vector<int>{3, 4});

  Graph sub = induced_subgraph(g, comps[0]);
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 2);
}

TEST_CASE("density is exact") {
  CHECK(complete(5).density() == Rational(1));
  CHECK(path(4).density() == Rational(BigInt(1), BigInt(2)));
  CHECK_THROWS_AS(Graph(1).density(), std::invalid_argument);
}

TEST_CASE("graph6 codes frozen by hand") {
  CHECK(to_graph6(complete_bipartite(1, 1)) == "A_");
  CHECK(to_graph6(path(3)) == "Bg");
  CHECK(to_graph6(complete(3)) == "Bw");
  CHECK(to_graph6(Graph(5)) == "D??");
  CHECK(to_graph6(cycle(5)) == "Dhc");

  CHECK(parse_graph6("A_") == complete_bipartite(1, 1));
  CHECK(parse_graph6("Bw") == complete(3));
  CHECK(parse_graph6("D??") == Graph(5));
  CHECK(parse_graph6("Dhc") == cycle(5));
}

TEST_CASE("graph6 round-trips every small graph") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : all_graphs(n)) CHECK(parse_graph6(to_graph6(g)) == g);

  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 6 + static_cast<int>(rng() % 40);
    Graph g = random_graph(n, 0.4, rng);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("graph6 rejects malformed strings with a byte offset") {
  auto offset_of = [](const std::string& s) {
    try {
      parse_graph6(s);
    } catch (const graph6_error& e) {
      return static_cast<long long>(e.byte_offset);
    }
    return -1LL;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("B") == 1);        // truncated body
  CHECK(offset_of("Bg?") == 2);      // trailing byte
  CHECK(offset_of("AO") == 1);       // nonzero padding
  CHECK(offset_of("~??") == 0);      // long form
  CHECK(offset_of(std::string("B\x1f\x1f")) == 1);  // byte below 63
  CHECK(offset_of(">") == 0);
  CHECK_THROWS_AS(to_graph6(Graph(63)), std::invalid_argument);
}

TEST_CASE("json edge-list round-trip and validation") {
  Graph g = dumbbell(6);
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK(graph_from_json(R"({"n":3,"edges":[[0,1],[1,2]]})") == path(3));
  CHECK(graph_from_json(R"({"n":2,"edges":[]})") == Graph(2));

  CHECK_THROWS_AS(graph_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"edges":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"n":2})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"n":2,"edges":[[0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"n":2,"edges":[[0,2]]})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"n":2,"edges":[[0,1],[1,0]]})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"n":"2","edges":[]})"), std::invalid_argument);
}

TEST_CASE("hop distances match Floyd-Warshall") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 11);
    Graph g = random_graph(n, 0.3, rng);
    DistanceMatrix dm = apsp(g);
    auto fw = floyd_warshall(g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (fw[i][j] >= static_cast<long long>(1e15)) {
          CHECK(!dm.reachable(i, j));
        } else {
          REQUIRE(dm.reachable(i, j));
          CHECK(dm.at(i, j) == fw[i][j]);
        }
      }
  }
}

TEST_CASE("distance matrix summaries") {
  DistanceMatrix dp4 = apsp(path(4));
  CHECK(dp4.diameter() == 3);
  CHECK(dp4.all_finite());

  DistanceMatrix dd = apsp(dumbbell(6));
  CHECK(dd.diameter() == 3);
  CHECK(dd.at(1, 4) == 3);
  CHECK(dd.at(0, 3) == 1);

  Graph split = Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
  DistanceMatrix ds = apsp(split);
  CHECK(!ds.all_finite());
  CHECK(!ds.reachable(0, 3));
  CHECK(ds.diameter() == 2);  // max finite entry
}

TEST_CASE("orbit structure of known graphs") {
  auto orb = vertex_orbits(complete(5));
  CHECK(orb.orbit_count() == 1);
  CHECK(orb.representatives == std::vector<int>{0});

  orb = vertex_orbits(path(4));
  CHECK(orb.orbit_count() == 2);
  CHECK(orb.orbit_of[0] == orb.orbit_of[3]);
  CHECK(orb.orbit_of[1] == orb.orbit_of[2]);
  CHECK(orb.orbit_of[0] != orb.orbit_of[1]);

  orb = vertex_orbits(complete_minus_edge(4));
  CHECK(orb.orbit_count() == 2);
  CHECK(orb.orbit_of[0] == orb.orbit_of[1]);
  CHECK(orb.orbit_of[2] == orb.orbit_of[3]);

  orb = vertex_orbits(cycle(6));
  CHECK(orb.orbit_count() == 1);

  orb = vertex_orbits(complete_bipartite(1, 3));
  CHECK(orb.orbit_count() == 2);

  orb = vertex_orbits(dumbbell(6));
  CHECK(orb.orbit_count() == 2);
  CHECK(orb.orbit_of[0] == orb.orbit_of[3]);
  CHECK(orb.orbit_of[1] == orb.orbit_of[4]);
}

TEST_CASE("orbits agree with the full-permutation oracle") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : all_graphs(n)) {
      auto fast = vertex_orbits(g);
      REQUIRE(fast.exact);
      CHECK(same_partition(fast.orbit_of, orbits_by_full_scan(g)));
    }

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = random_graph(6, 0.5, rng);
    auto fast = vertex_orbits(g);
    REQUIRE(fast.exact);
    CHECK(same_partition(fast.orbit_of, orbits_by_full_scan(g)));
  }
}

TEST_CASE("oversized graphs fall back to singleton orbits") {
  auto orb = vertex_orbits(complete(12));
  CHECK(!orb.exact);
  CHECK(orb.orbit_count() == 12);
}
