#pragma once

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "metricgap/graph.hpp"

namespace metricgap {

/// Parse {"n": int, "edges": [[u,v], ...]}. Any malformation (bad JSON,
/// missing keys, out-of-range endpoints, loops, duplicates) raises
/// std::invalid_argument with a description.
inline Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("json graph: parse failure: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("json graph: expected object with \"n\" and \"edges\"");
  if (!j["n"].is_number_integer())
    throw std::invalid_argument("json graph: \"n\" must be an integer");
  int n = j["n"].get<int>();
  if (!j["edges"].is_array())
    throw std::invalid_argument("json graph: \"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw std::invalid_argument("json graph: each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return Graph::from_edges(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("json graph: ") + e.what());
  }
}

inline std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.vertex_count();
  auto arr = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) arr.push_back({e.first, e.second});
  j["edges"] = arr;
  return j.dump();
}

}  // namespace metricgap
