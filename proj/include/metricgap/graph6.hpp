#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "metricgap/graph.hpp"

namespace metricgap {

/// Malformed graph6 input. byte_offset points at the offending byte.
class graph6_error : public std::runtime_error {
 public:
  graph6_error(const std::string& msg, size_t byte_offset)
      : std::runtime_error(msg + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset(byte_offset) {}
  size_t byte_offset;
};

/// Decode the short graph6 form: header byte 63+n, then the upper triangle
/// in column-major order (x01, x02, x12, x03, ...), 6 bits per byte, each
/// byte offset by 63. Only n in 1..62 is supported here.
inline Graph parse_graph6(const std::string& s) {
  if (s.empty()) throw graph6_error("graph6: empty input", 0);
  for (size_t i = 0; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw graph6_error("graph6: byte out of printable range", i);
  }
  int n = static_cast<unsigned char>(s[0]) - 63;
  if (n == 63) throw graph6_error("graph6: long form (n > 62) not supported", 0);
  if (n < 1) throw graph6_error("graph6: vertex count must be >= 1", 0);

  size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
  size_t body = (bits + 5) / 6;
  if (s.size() < 1 + body) throw graph6_error("graph6: input truncated", s.size());
  if (s.size() > 1 + body) throw graph6_error("graph6: trailing bytes", 1 + body);

  std::vector<Edge> edges;
  size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      size_t byte = 1 + bit / 6;
      int shift = 5 - static_cast<int>(bit % 6);
      int val = static_cast<unsigned char>(s[byte]) - 63;
      if ((val >> shift) & 1) edges.emplace_back(u, v);
    }
  }
  // Padding bits past the triangle must be zero.
  for (size_t b = bits; b < body * 6; ++b) {
    size_t byte = 1 + b / 6;
    int shift = 5 - static_cast<int>(b % 6);
    int val = static_cast<unsigned char>(s[byte]) - 63;
    if ((val >> shift) & 1) throw graph6_error("graph6: nonzero padding bit", byte);
  }
  return Graph::from_edges(n, std::move(edges));
}

inline std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62) throw std::invalid_argument("to_graph6: only n <= 62 supported");
  size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
  size_t body = (bits + 5) / 6;
  std::string s(1 + body, static_cast<char>(63));
  s[0] = static_cast<char>(63 + n);
  size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (g.has_edge(u, v)) {
        size_t byte = 1 + bit / 6;
        int shift = 5 - static_cast<int>(bit % 6);
        s[byte] = static_cast<char>(s[byte] + (1 << shift));
      }
    }
  }
  return s;
}

}  // namespace metricgap
