#pragma once

#include <string>
#include <vector>

#include "metricgap/campaign.hpp"
#include "metricgap/corpus.hpp"
#include "metricgap/gap_search.hpp"

namespace metricgap {

/// One observed strict change of the gap under a single edge addition, on
/// either side. `side` is "source" when an edge was added to g with the
/// target fixed, "target" when the target gained an edge with g fixed.
struct MonotonicWitness {
  std::string side;
  std::string fixed_id;
  std::string before_id;
  std::string after_id;
  Rational before;
  Rational after;
};

struct MonotonicReport {
  std::vector<MonotonicWitness> decreases;
  std::vector<MonotonicWitness> increases;
  long long comparisons = 0;
  long long skipped = 0;  // budget or undefined gaps
};

struct MonotonicOptions {
  bool source_edges = true;      // g vs g+e for every nonedge of g
  bool target_edges = true;      // h vs h+e for target pairs related by one edge
  bool chain_to_complete = false;  // follow g upward to the complete graph
  std::size_t max_witnesses = 200;
};

namespace detail {

inline void push_witness(MonotonicReport& rep, const MonotonicOptions& mopt,
                         MonotonicWitness w) {
  if (w.after < w.before) {
    if (rep.decreases.size() < mopt.max_witnesses) rep.decreases.push_back(std::move(w));
  } else if (w.after > w.before) {
    if (rep.increases.size() < mopt.max_witnesses) rep.increases.push_back(std::move(w));
  }
}

// hj equals hi plus exactly one edge on the same vertex set.
inline bool one_edge_extension(const Graph& hi, const Graph& hj) {
  if (hj.vertex_count() != hi.vertex_count()) return false;
  if (hj.edge_count() != hi.edge_count() + 1) return false;
  for (const Edge& e : hi.edges())
    if (!hj.has_edge(e.first, e.second)) return false;
  return true;
}

}  // namespace detail

/// Scans the corpus for strict gap changes under single edge additions. The
/// gap is not monotone in either argument; this collects concrete witnesses
/// for both directions. Pairs whose search exceeds the budget are skipped
/// and counted.
inline MonotonicReport search_monotonic(const std::vector<CorpusEntry>& corpus,
                                        const std::vector<CorpusEntry>& targets,
                                        const MonotonicOptions& mopt = {},
                                        const SearchOptions& sopt = {}) {
  MonotonicReport rep;
  GapCache cache(sopt);

  for (const CorpusEntry& ge : corpus) {
    if (!ge.graph.is_connected()) continue;
    for (const CorpusEntry& he : targets) {
      const auto& base = cache.lambda(ge.graph, he.graph);
      if (base.state != GapCache::State::ok) {
        ++rep.skipped;
        continue;
      }

      if (mopt.source_edges) {
        const Graph& g = ge.graph;
        for (int u = 0; u < g.vertex_count(); ++u)
          for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (g.has_edge(u, v)) continue;
            Graph gp = add_edge(g, u, v);
            const auto& bumped = cache.lambda(gp, he.graph);
            if (bumped.state != GapCache::State::ok) {
              ++rep.skipped;
              continue;
            }
            ++rep.comparisons;
            detail::push_witness(rep, mopt,
                                 {"source", he.id, ge.id, to_graph6(gp), base.value, bumped.value});
          }
      }

      if (mopt.chain_to_complete) {
        Graph cur = ge.graph;
        Rational cur_val = base.value;
        std::string cur_id = ge.id;
        while (!cur.is_complete()) {
          int au = -1, av = -1;
          for (int u = 0; u < cur.vertex_count() && au < 0; ++u)
            for (int v = u + 1; v < cur.vertex_count(); ++v)
              if (!cur.has_edge(u, v)) {
                au = u;
                av = v;
                break;
              }
          Graph next = add_edge(cur, au, av);
          const auto& nv = cache.lambda(next, he.graph);
          if (nv.state != GapCache::State::ok) {
            ++rep.skipped;
            break;
          }
          ++rep.comparisons;
          std::string next_id = to_graph6(next);
          detail::push_witness(rep, mopt, {"source", he.id, cur_id, next_id, cur_val, nv.value});
          cur = std::move(next);
          cur_val = nv.value;
          cur_id = std::move(next_id);
        }
      }
    }

    if (mopt.target_edges) {
      for (const CorpusEntry& hi : targets) {
        for (const CorpusEntry& hj : targets) {
          if (&hi == &hj || !detail::one_edge_extension(hi.graph, hj.graph)) continue;
          const auto& a = cache.lambda(ge.graph, hi.graph);
          const auto& b = cache.lambda(ge.graph, hj.graph);
          if (a.state != GapCache::State::ok || b.state != GapCache::State::ok) {
            ++rep.skipped;
            continue;
          }
          ++rep.comparisons;
          detail::push_witness(rep, mopt, {"target", ge.id, hi.id, hj.id, a.value, b.value});
        }
      }
    }
  }
  return rep;
}

inline nlohmann::ordered_json to_json(const MonotonicReport& rep) {
  auto witness_json = [](const MonotonicWitness& w) {
    nlohmann::ordered_json j;
    j["side"] = w.side;
    j["fixed"] = w.fixed_id;
    j["before"] = w.before_id;
    j["after"] = w.after_id;
    j["lambda_before"] = rational_to_json(w.before);
    j["lambda_after"] = rational_to_json(w.after);
    return j;
  };
  nlohmann::ordered_json j;
  j["comparisons"] = rep.comparisons;
  j["skipped"] = rep.skipped;
  nlohmann::ordered_json dec = nlohmann::ordered_json::array();
  for (const auto& w : rep.decreases) dec.push_back(witness_json(w));
  nlohmann::ordered_json inc = nlohmann::ordered_json::array();
  for (const auto& w : rep.increases) inc.push_back(witness_json(w));
  j["decreases"] = std::move(dec);
  j["increases"] = std::move(inc);
  return j;
}

}  // namespace metricgap
