// Smallest possible tour: compute one exact gap and print the witness map.

#include <cstdio>

#include "metricgap/gap_search.hpp"

int main() {
  using namespace metricgap;
  Graph g = complete_bipartite(3, 3);
  Graph h = complete_minus_edge(4);

  GapResult r = lambda_exact(g, h);
  std::printf("lambda(K_{3,3}, K_4 minus an edge) = %s\n", r.value.str().c_str());
  std::printf("witness:");
  for (int x : r.witness.image) std::printf(" %d", x);
  std::printf("\nassignments evaluated: %lld\n", r.assignments_evaluated);
  return 0;
}
