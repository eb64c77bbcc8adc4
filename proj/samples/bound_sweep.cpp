// Sweeps one source family against a fixed target and prints how the exact
// gap sits inside the closed-form window on each step.

#include <cstdio>

#include "metricgap/bounds.hpp"
#include "metricgap/gap_search.hpp"

int main() {
  using namespace metricgap;
  Graph h = complete(2);

  std::printf("%-14s %10s %12s %12s\n", "source", "gap", "naive lower", "cap n/(n-1)");
  for (int n = 3; n <= 7; ++n) {
    Graph g = complete_minus_edge(n);
    Rational lambda = lambda_exact(g, h).value;
    BoundReport lo = naive_lower(g, h, lambda);
    BoundReport hi = complete_upper(g, lambda);
    std::printf("K%d minus edge %10s %12s %12s %s\n", n, lambda.str().c_str(),
                lo.bound_value.str().c_str(), hi.bound_value.str().c_str(),
                lo.holds() && hi.holds() ? "ok" : "VIOLATED");
  }

  std::printf("\nratio window after adding one edge to C_6:\n");
  Graph c6 = cycle(6);
  Rational base = lambda_exact(c6, h).value;
  for (int v = 2; v <= 4; ++v) {
    Graph plus = add_edge(c6, 0, v);
    Rational bumped = lambda_exact(plus, h).value;
    auto [lo, hi] = edge_addition_bounds(c6, plus, h, base, bumped);
    std::printf("chord 0-%d: ratio %s in [%s, %s] %s\n", v,
                (bumped / base).str().c_str(), lo.bound_value.str().c_str(),
                hi.bound_value.str().c_str(), lo.holds() && hi.holds() ? "ok" : "VIOLATED");
  }
  return 0;
}
