#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "metricgap/campaign.hpp"
#include "metricgap/embedding.hpp"
#include "metricgap/gap_search.hpp"
#include "metricgap/spectral.hpp"

namespace metricgap {

/// One line of the worked-example table: a named quantity, the value it is
/// expected to take, the value the engine produced, and whether they agree.
struct ExampleRow {
  std::string name;
  std::string expected;
  std::string computed;
  bool match = false;
  double runtime_ms = 0.0;
};

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace detail

/// Recomputes the full bank of worked examples and checks each against its
/// known value. Window rows check membership instead of equality; spectral
/// rows compare within 1e-9.
inline std::vector<ExampleRow> run_worked_examples(const SearchOptions& opts = {}) {
  std::vector<ExampleRow> rows;

  auto guarded = [&](const std::string& name, const std::string& expected, auto&& body) {
    detail::Stopwatch sw;
    ExampleRow row;
    row.name = name;
    row.expected = expected;
    try {
      body(row);
    } catch (const std::exception& e) {
      row.computed = std::string("error: ") + e.what();
      row.match = false;
    }
    row.runtime_ms = sw.ms();
    rows.push_back(std::move(row));
  };

  auto gap = [&](const Graph& g, const Graph& h) { return lambda_exact(g, h, opts).value; };

  auto exact = [&](const std::string& name, const std::string& expected, auto&& compute) {
    guarded(name, expected, [&](ExampleRow& row) {
      Rational v = compute();
      row.computed = v.str();
      row.match = row.computed == row.expected;
    });
  };

  auto window = [&](const std::string& name, const Rational& lo, const Rational& hi,
                    bool strict_hi, auto&& compute) {
    std::string expected = "in [" + lo.str() + ", " + hi.str() + (strict_hi ? ")" : "]");
    guarded(name, expected, [&](ExampleRow& row) {
      Rational v = compute();
      row.computed = v.str();
      row.match = v >= lo && (strict_hi ? v < hi : v <= hi);
    });
  };

  auto near = [&](const std::string& name, double expected, auto&& compute) {
    guarded(name, detail::format_double(expected), [&](ExampleRow& row) {
      double v = compute();
      row.computed = detail::format_double(v);
      row.match = std::fabs(v - expected) <= 1e-9;
    });
  };

  exact("lambda(P3,K2)", "4/3", [&] { return gap(path(3), complete(2)); });
  for (int n = 3; n <= 6; ++n) {
    exact("lambda(K" + std::to_string(n) + ",K2)",
          Rational(BigInt(n), BigInt(n - 1)).str(), [&] { return gap(complete(n), complete(2)); });
  }
  exact("lambda(K4,K3)", "4/3", [&] { return gap(complete(4), complete(3)); });
  exact("lambda(K3,P3)", "3/2", [&] { return gap(complete(3), path(3)); });

  exact("lambda(K3,3,K2)", "1", [&] { return gap(complete_bipartite(3, 3), complete(2)); });
  exact("lambda(K3,3,K4)", "1", [&] { return gap(complete_bipartite(3, 3), complete(4)); });
  exact("lambda(K3,3,K4-e)", "14/15",
        [&] { return gap(complete_bipartite(3, 3), complete_minus_edge(4)); });
  exact("quotient(K3,3 -> K4-e, worked map)", "14/15", [&] {
    Assignment f;
    f.image = {3, 3, 2, 3, 1, 0};
    return rayleigh_quotient(complete_bipartite(3, 3), complete_minus_edge(4), f);
  });

  exact("lambda(multipartite(2,3),K2)", "1",
        [&] { return gap(complete_multipartite(2, 3), complete(2)); });
  exact("lambda(multipartite(3,2),K2)", "1",
        [&] { return gap(complete_multipartite(3, 2), complete(2)); });
  exact("lambda(K2,2,K3)", "1", [&] { return gap(complete_bipartite(2, 2), complete(3)); });
  exact("lambda(K3,3,K3)", "1", [&] { return gap(complete_bipartite(3, 3), complete(3)); });

  exact("lambda(K3 + K2 disjoint,K2)", "0", [&] {
    return gap(Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}}), complete(2));
  });
  exact("lambda(K4 minus two edges at a vertex,K2)", "1", [&] {
    return gap(remove_edge(remove_edge(complete(4), 0, 1), 0, 2), complete(2));
  });

  exact("lambda(K4-e,K2)", "6/5", [&] { return gap(complete_minus_edge(4), complete(2)); });
  for (int n = 5; n <= 6; ++n) {
    window("lambda(K" + std::to_string(n) + "-e,K2)", Rational(1),
           Rational(BigInt(n), BigInt(n - 1)), /*strict_hi=*/true,
           [&] { return gap(complete_minus_edge(n), complete(2)); });
  }

  exact("lambda(dumbbell(6),K2)", "2/7", [&] { return gap(dumbbell(6), complete(2)); });
  exact("lambda(dumbbell(8),K2)", "2/13", [&] { return gap(dumbbell(8), complete(2)); });
  exact("lambda(K3,3 plus inner edge,K2)", "20/21",
        [&] { return gap(balanced_bipartite_plus_edge(3), complete(2)); });
  exact("lambda(K4,4 plus matchings,K2)", "4/5",
        [&] { return gap(balanced_bipartite_plus_matching(4), complete(2)); });
  exact("quotient(red clique bipartite(16,8), two class map)", "39/46", [&] {
    Graph g = red_clique_bipartite(16, 8);
    Assignment f;
    f.image.assign(32, 1);
    for (int i = 0; i < 8; ++i) f.image[i] = 0;
    for (int i = 16; i < 24; ++i) f.image[i] = 0;
    return rayleigh_quotient(g, complete(2), f);
  });

  exact("lambda(C6,K2)", "2/3", [&] { return gap(cycle(6), complete(2)); });
  exact("lambda(C6 plus diameters,K2)", "1",
        [&] { return gap(cycle_plus_diameters(6), complete(2)); });

  near("lambda_R(K5)", 1.25, [&] { return lambda_R(complete(5)).lambda1; });
  near("lambda_R(C4)", 1.0, [&] { return lambda_R(cycle(4)).lambda1; });
  near("lambda_R(K3,3)", 1.0, [&] { return lambda_R(complete_bipartite(3, 3)).lambda1; });

  {
    double ln4 = std::log(4.0);
    near("ratio(K5 -> K4) = ln^2(4)", ln4 * ln4, [&] {
      return relate_to_R_report(complete(5), complete(4), opts).ratio;
    });
  }

  return rows;
}

inline nlohmann::ordered_json to_json(const std::vector<ExampleRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ExampleRow& r : rows) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    j["match"] = r.match;
    j["runtime_ms"] = r.runtime_ms;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace metricgap
