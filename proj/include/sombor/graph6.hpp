#pragma once

// graph6 codec. Size: one byte n+63 for n <= 62, otherwise byte 126 followed
// by n in three big-endian 6-bit groups. Payload: the upper triangle in
// column-major order (0,1),(0,2),(1,2),(0,3),... packed MSB-first into 6-bit
// groups, each group stored as value+63, zero padded to a whole group.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/error.hpp"
#include "sombor/graph.hpp"

namespace sombor::graph6 {

inline constexpr std::size_t max_vertices = 258047;
inline constexpr std::string_view header = ">>graph6<<";

struct ParseOptions {
  bool strict_padding = true;
  // Reject the 4-byte size form when n <= 62 would have fit in one byte.
  bool strict_size = true;
};

constexpr std::size_t payload_bytes(std::size_t n) noexcept {
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  return (bits + 5) / 6;
}

inline Graph parse(std::string_view line, const ParseOptions& opt = {}) {
  if (line.starts_with(header)) line.remove_prefix(header.size());
  if (line.starts_with(">>sparse6<<") || line.starts_with(':'))
    throw unsupported_error("sparse6 is not supported");
  if (line.starts_with(">>digraph6<<") || line.starts_with('&'))
    throw unsupported_error("digraph6 is not supported");
  if (line.empty()) throw format_error("empty graph6 record");

  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) {
      throw format_error("character " + std::to_string(c) + " at offset " + std::to_string(i) +
                         " outside [63, 126]");
    }
  }

  std::size_t pos = 0;
  std::size_t n = 0;
  if (static_cast<unsigned char>(line[0]) < 126) {
    n = static_cast<unsigned char>(line[0]) - 63;
    pos = 1;
  } else {
    if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
      throw unsupported_error("graph6 8-byte size form (n > 258047) is not supported");
    if (line.size() < 4) throw format_error("truncated graph6 size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (static_cast<unsigned char>(line[i]) - 63);
    pos = 4;
    if (opt.strict_size && n <= 62) throw format_error("non-canonical graph6 size field for n = " + std::to_string(n));
  }
  if (n == 0) throw unsupported_error("graph6 record with zero vertices");

  const std::size_t expected = payload_bytes(n);
  const std::size_t have = line.size() - pos;
  if (have < expected) {
    throw format_error("truncated graph6 payload: expected " + std::to_string(expected) + " bytes, got " +
                       std::to_string(have));
  }
  if (have > expected) {
    throw format_error("graph6 payload too long: expected " + std::to_string(expected) + " bytes, got " +
                       std::to_string(have));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u, ++k) {
      const unsigned group = static_cast<unsigned char>(line[pos + k / 6]) - 63;
      if (group & (0x20u >> (k % 6))) edges.push_back({Vertex(u), Vertex(v)});
    }
  }
  if (opt.strict_padding && k % 6 != 0) {
    const unsigned last = static_cast<unsigned char>(line.back()) - 63;
    const unsigned pad_mask = (1u << (6 - k % 6)) - 1;
    if (last & pad_mask) throw format_error("nonzero graph6 padding bits");
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_sorted_edges_unchecked(n, std::move(edges));
}

inline std::string write(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices) throw unsupported_error("graph6 writer supports n <= 258047, got " + std::to_string(n));

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3f) + 63));
  }

  std::vector<unsigned char> groups(payload_bytes(n), 0);
  for (const auto& e : g.edges()) {
    // column-major index of (u, v) with u < v
    const std::size_t k = std::size_t(e.v) * (e.v - 1) / 2 + e.u;
    groups[k / 6] |= static_cast<unsigned char>(0x20u >> (k % 6));
  }
  for (auto b : groups) out.push_back(static_cast<char>(b + 63));
  return out;
}

}  // namespace sombor::graph6
