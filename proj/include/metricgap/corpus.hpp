#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "metricgap/embedding.hpp"
#include "metricgap/graph.hpp"
#include "metricgap/graph6.hpp"
#include "metricgap/io.hpp"

namespace metricgap {

/// One graph in a test corpus. `kind` records how it was produced (family
/// name, "exhaustive", "random", "graph6", "json", "file") so campaign checks
/// can pick the identities that apply to it. `params` holds the family
/// arguments in order.
struct CorpusEntry {
  std::string id;
  Graph graph;
  std::string kind;
  std::vector<long long> params;
};

/// Builds a named parametric family. Names follow the generator functions:
/// complete n; path n; cycle n; complete_minus_edge n; complete_bipartite a b;
/// complete_multipartite part_size parts; dumbbell n; regularized_dumbbell n;
/// balanced_bipartite_plus_matching n; balanced_bipartite_plus_edge n;
/// red_clique_bipartite n r; cycle_plus_diameters n; complete_minus_matching n.
inline Graph make_family(const std::string& name, const std::vector<long long>& params) {
  auto want = [&](std::size_t c) {
    if (params.size() != c) {
      throw std::invalid_argument("family " + name + ": expected " + std::to_string(c) +
                                  " parameter(s), got " + std::to_string(params.size()));
    }
  };
  auto p = [&](std::size_t i) { return static_cast<int>(params[i]); };
  if (name == "complete") { want(1); return complete(p(0)); }
  if (name == "path") { want(1); return path(p(0)); }
  if (name == "cycle") { want(1); return cycle(p(0)); }
  if (name == "complete_minus_edge") { want(1); return complete_minus_edge(p(0)); }
  if (name == "complete_bipartite") { want(2); return complete_bipartite(p(0), p(1)); }
  if (name == "complete_multipartite") { want(2); return complete_multipartite(p(0), p(1)); }
  if (name == "dumbbell") { want(1); return dumbbell(p(0)); }
  if (name == "regularized_dumbbell") { want(1); return regularized_dumbbell(p(0)); }
  if (name == "balanced_bipartite_plus_matching") { want(1); return balanced_bipartite_plus_matching(p(0)); }
  if (name == "balanced_bipartite_plus_edge") { want(1); return balanced_bipartite_plus_edge(p(0)); }
  if (name == "red_clique_bipartite") { want(2); return red_clique_bipartite(p(0), p(1)); }
  if (name == "cycle_plus_diameters") { want(1); return cycle_plus_diameters(p(0)); }
  if (name == "complete_minus_matching") { want(1); return complete_minus_matching(p(0)); }
  throw std::invalid_argument("unknown family: " + name);
}

namespace detail {

inline bool parse_all_digits(const std::string& s, long long& out) {
  if (s.empty() || s.size() > 9) return false;
  long long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

// Short tokens for common graphs: K7, P4, C5, K7-e, K3,3.
inline bool parse_short_token(const std::string& spec, CorpusEntry& out) {
  if (spec.size() < 2) return false;
  char head = spec[0];
  if (head != 'K' && head != 'P' && head != 'C') return false;
  std::string rest = spec.substr(1);
  bool minus_edge = false;
  if (head == 'K' && rest.size() > 2 && rest.substr(rest.size() - 2) == "-e") {
    minus_edge = true;
    rest = rest.substr(0, rest.size() - 2);
  }
  auto comma = rest.find(',');
  if (comma != std::string::npos) {
    if (head != 'K' || minus_edge) return false;
    long long a = 0, b = 0;
    if (!parse_all_digits(rest.substr(0, comma), a)) return false;
    if (!parse_all_digits(rest.substr(comma + 1), b)) return false;
    out = {spec, complete_bipartite(static_cast<int>(a), static_cast<int>(b)),
           "complete_bipartite", {a, b}};
    return true;
  }
  long long n = 0;
  if (!parse_all_digits(rest, n)) return false;
  int ni = static_cast<int>(n);
  if (minus_edge) {
    out = {spec, complete_minus_edge(ni), "complete_minus_edge", {n}};
  } else if (head == 'K') {
    out = {spec, complete(ni), "complete", {n}};
  } else if (head == 'P') {
    out = {spec, path(ni), "path", {n}};
  } else {
    out = {spec, cycle(ni), "cycle", {n}};
  }
  return true;
}

inline bool parse_family_spec(const std::string& spec, CorpusEntry& out) {
  const std::string prefix = "family:";
  if (spec.rfind(prefix, 0) != 0) return false;
  std::string body = spec.substr(prefix.size());
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto colon = body.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(body.substr(start));
      break;
    }
    parts.push_back(body.substr(start, colon - start));
    start = colon + 1;
  }
  if (parts.empty() || parts[0].empty()) throw std::invalid_argument("empty family name in: " + spec);
  std::vector<long long> params;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    long long v = 0;
    if (!parse_all_digits(parts[i], v)) {
      throw std::invalid_argument("family parameter must be a nonnegative integer: " + parts[i]);
    }
    params.push_back(v);
  }
  out = {spec, make_family(parts[0], params), parts[0], params};
  return true;
}

inline std::string strip_whitespace(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace detail

/// Turns a graph spec string into a corpus entry. Accepted forms, tried in
/// order: short token (K4, P3, C5, K4-e, K3,3), "family:name:arg:arg", inline
/// JSON (leading '{'), a readable file containing JSON or graph6, and finally
/// a bare graph6 string.
inline CorpusEntry parse_graph_spec(const std::string& raw) {
  std::string spec = detail::strip_whitespace(raw);
  if (spec.empty()) throw std::invalid_argument("empty graph spec");
  CorpusEntry entry;
  if (detail::parse_short_token(spec, entry)) return entry;
  if (detail::parse_family_spec(spec, entry)) return entry;
  if (spec[0] == '{') return {spec, graph_from_json(spec), "json", {}};
  {
    std::ifstream in(spec);
    if (in.good()) {
      std::ostringstream buf;
      buf << in.rdbuf();
      std::string body = detail::strip_whitespace(buf.str());
      if (body.empty()) throw std::invalid_argument("graph file is empty: " + spec);
      if (body[0] == '{') return {spec, graph_from_json(body), "file", {}};
      return {spec, parse_graph6(body), "file", {}};
    }
  }
  return {spec, parse_graph6(spec), "graph6", {}};
}

/// All labeled graphs on n vertices, optionally connected ones only. Capped
/// at n <= 6 because the count is 2^(n(n-1)/2). Ids are graph6 codes.
inline std::vector<CorpusEntry> exhaustive_corpus(int n, bool connected_only) {
  if (n < 1 || n > 6) throw std::invalid_argument("exhaustive_corpus: n must be in 1..6");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
  std::vector<CorpusEntry> out;
  const std::uint64_t total = 1ull << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) edges.push_back(slots[i]);
    Graph g = Graph::from_edges(n, edges);
    if (connected_only && !g.is_connected()) continue;
    out.push_back({to_graph6(g), std::move(g), "exhaustive", {n}});
  }
  return out;
}

/// Erdos-Renyi style sample: `count` graphs on n vertices, each potential
/// edge present with probability p, drawn from a seeded deterministic stream.
/// Duplicate draws are kept so the count is exact. Ids are graph6 codes with
/// a position suffix to stay unique.
inline std::vector<CorpusEntry> random_corpus(int n, int count, double p, std::uint64_t seed,
                                              bool connected_only) {
  if (n < 1 || n > 62) throw std::invalid_argument("random_corpus: n must be in 1..62");
  if (count < 0) throw std::invalid_argument("random_corpus: count must be nonnegative");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_corpus: p must be in [0,1]");
  const double scaled = p * 18446744073709551616.0;
  const bool always = scaled >= 18446744073709551615.0;
  const std::uint64_t threshold = always ? ~0ull : static_cast<std::uint64_t>(scaled);
  detail::SplitMix64 rng{seed ^ 0x9e3779b97f4a7c15ull};
  std::vector<CorpusEntry> out;
  int attempts = 0;
  const int max_attempts = count * 1000 + 1000;
  while (static_cast<int>(out.size()) < count && attempts < max_attempts) {
    ++attempts;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        std::uint64_t draw = rng.next();
        if (always || draw < threshold) edges.push_back({u, v});
      }
    Graph g = Graph::from_edges(n, edges);
    if (connected_only && !g.is_connected()) continue;
    std::string id = to_graph6(g) + "#" + std::to_string(out.size());
    out.push_back({std::move(id), std::move(g), "random", {n}});
  }
  if (static_cast<int>(out.size()) < count) {
    throw std::invalid_argument("random_corpus: could not draw enough connected graphs; raise p");
  }
  return out;
}

/// The curated parametric families the checks know identities for: complete,
/// path, cycle, near-complete, multipartite, balanced bipartite, dumbbells,
/// matching- and edge-augmented bipartite graphs, the red-clique bipartite
/// graph, and the regular one-degree-up pairs.
inline std::vector<CorpusEntry> family_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](const std::string& id) { out.push_back(parse_graph_spec(id)); };
  for (int n = 3; n <= 6; ++n) add("K" + std::to_string(n));
  for (int n = 3; n <= 5; ++n) add("P" + std::to_string(n));
  for (int n = 4; n <= 6; ++n) add("C" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) add("K" + std::to_string(n) + "-e");
  add("K2,2");
  add("K3,3");
  add("K4,4");
  add("family:complete_multipartite:2:3");
  add("family:complete_multipartite:3:2");
  add("family:complete_multipartite:2:4");
  for (int n = 6; n <= 12; n += 2) add("family:dumbbell:" + std::to_string(n));
  for (int n = 6; n <= 12; n += 2) add("family:regularized_dumbbell:" + std::to_string(n));
  add("family:balanced_bipartite_plus_matching:4");
  add("family:balanced_bipartite_plus_edge:3");
  add("family:cycle_plus_diameters:6");
  add("family:complete_minus_matching:6");
  add("family:red_clique_bipartite:16:8");
  return out;
}

/// Corpus selection for the verification campaign.
struct CorpusSpec {
  enum class Mode { exhaustive, families, random };
  Mode mode = Mode::exhaustive;
  int n = 4;                  // exhaustive: vertex count; random: vertex count
  bool connected_only = true;
  int count = 50;             // random only
  double edge_prob = 0.5;     // random only
  std::uint64_t seed = 1;     // random only
};

inline std::vector<CorpusEntry> build_corpus(const CorpusSpec& spec) {
  switch (spec.mode) {
    case CorpusSpec::Mode::exhaustive:
      return exhaustive_corpus(spec.n, spec.connected_only);
    case CorpusSpec::Mode::families:
      return family_corpus();
    case CorpusSpec::Mode::random:
      return random_corpus(spec.n, spec.count, spec.edge_prob, spec.seed, spec.connected_only);
  }
  throw std::logic_error("unreachable corpus mode");
}

/// Parses a comma separated list of target specs ("K2,P3,K4-e"). Top level
/// commas split entries except inside "Ka,b" tokens, so pass those via the
/// family form ("family:complete_bipartite:3:3") inside lists.
inline std::vector<CorpusEntry> parse_target_list(const std::string& list) {
  std::vector<CorpusEntry> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    std::string t = detail::strip_whitespace(item);
    if (t.empty()) continue;
    // Rejoin "K3,3" style tokens: a lone K<digits> followed by <digits> item.
    if (!out.empty() && !t.empty() && t.find_first_not_of("0123456789") == std::string::npos) {
      const std::string& prev = out.back().id;
      if (prev.size() >= 2 && prev[0] == 'K' &&
          prev.find_first_not_of("0123456789", 1) == std::string::npos) {
        std::string merged = prev + "," + t;
        out.back() = parse_graph_spec(merged);
        continue;
      }
    }
    out.push_back(parse_graph_spec(t));
  }
  if (out.empty()) throw std::invalid_argument("no targets in list: " + list);
  return out;
}

}  // namespace metricgap
