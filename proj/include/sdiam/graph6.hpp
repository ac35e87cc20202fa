#pragma once

// graph6 codec, short form only (1 <= n <= 62).
//
// Layout: optional ">>graph6<<" header, one size byte chr(n + 63), then the
// upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into
// 6-bit groups (zero padded), each group written as chr(group + 63).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sdiam/errors.hpp"
#include "sdiam/graph.hpp"

namespace sdiam {

inline constexpr std::string_view graph6_header = ">>graph6<<";
inline constexpr int graph6_max_order = 62;

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > graph6_max_order) {
    throw capacity_error("graph6 short form supports n <= 62, got " + std::to_string(n));
  }
  std::string out;
  out.reserve(1 + static_cast<std::size_t>((n * (n - 1) / 2 + 5) / 6));
  out.push_back(static_cast<char>(n + 63));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(graph6_header)) pos = graph6_header.size();
  // A single trailing line terminator is tolerated.
  if (text.ends_with("\r\n")) {
    text.remove_suffix(2);
  } else if (text.ends_with('\n')) {
    text.remove_suffix(1);
  }

  if (pos >= text.size()) throw decode_error("missing size byte", pos);
  const auto size_byte = static_cast<unsigned char>(text[pos]);
  if (size_byte < 63 || size_byte > 126) {
    throw decode_error("size byte outside [63,126]", pos);
  }
  if (size_byte == 126) {
    throw decode_error("long-form size (n > 62) is not supported", pos);
  }
  const int n = size_byte - 63;
  if (n == 0) throw decode_error("graphs of order 0 are not supported", pos);
  ++pos;

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos < body) {
    throw decode_error("truncated body: expected " + std::to_string(body) + " bytes", text.size());
  }
  if (text.size() - pos > body) {
    throw decode_error("unexpected trailing bytes", pos + body);
  }

  std::vector<Edge> edges;
  std::size_t bit_index = 0;
  int i = 0;
  int j = 1;
  for (std::size_t b = 0; b < body; ++b) {
    const auto byte = static_cast<unsigned char>(text[pos + b]);
    if (byte < 63 || byte > 126) throw decode_error("character outside [63,126]", pos + b);
    const int group = byte - 63;
    for (int k = 5; k >= 0; --k, ++bit_index) {
      const bool set = (group >> k) & 1;
      if (bit_index >= bits) {
        if (set) throw decode_error("nonzero padding bits", pos + b);
        continue;
      }
      if (set) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace sdiam
