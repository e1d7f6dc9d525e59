#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sombor/error.hpp"

namespace sombor {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected labeled graph on vertices 0..n-1. Immutable once built;
// edges are normalized (u < v) and kept in lexicographic order.
class Graph {
 public:
  static Graph from_edge_list(std::size_t n, std::span<const std::pair<long long, long long>> pairs) {
    if (n < 1) throw input_error("graph must have at least one vertex");
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || static_cast<unsigned long long>(a) >= n ||
          static_cast<unsigned long long>(b) >= n) {
        throw input_error("vertex out of range in pair (" + std::to_string(a) + ", " +
                          std::to_string(b) + ") for n = " + std::to_string(n));
      }
      if (a == b) throw input_error("self-loop at vertex " + std::to_string(a));
      if (a > b) std::swap(a, b);
      edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
      throw input_error("duplicate pair (" + std::to_string(dup->u) + ", " + std::to_string(dup->v) + ")");
    }
    return Graph(n, std::move(edges));
  }

  static Graph from_edge_list(std::size_t n, std::initializer_list<std::pair<long long, long long>> pairs) {
    return from_edge_list(n, std::span<const std::pair<long long, long long>>(pairs.begin(), pairs.size()));
  }

  // Takes edges already known to be valid, normalized and sorted (enumerators, generators).
  static Graph from_sorted_edges_unchecked(std::size_t n, std::vector<Edge> edges) {
    return Graph(n, std::move(edges));
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const std::uint32_t> degrees() const noexcept { return degree_; }
  std::uint32_t degree(Vertex v) const { return degree_.at(v); }

  std::uint32_t min_degree() const noexcept { return *std::min_element(degree_.begin(), degree_.end()); }
  std::uint32_t max_degree() const noexcept { return *std::max_element(degree_.begin(), degree_.end()); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
  }

  friend bool operator==(const Graph& x, const Graph& y) { return x.n_ == y.n_ && x.edges_ == y.edges_; }

 private:
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), degree_(n, 0) {
    for (const auto& e : edges_) {
      ++degree_[e.u];
      ++degree_[e.v];
    }
  }

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> degree_;
};

// True iff every vertex is reachable from vertex 0.
inline bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  if (g.edge_count() + 1 < n) return false;

  std::vector<std::size_t> offset(n + 1, 0);
  for (const auto& e : g.edges()) {
    ++offset[e.u + 1];
    ++offset[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] += offset[i];
  std::vector<Vertex> adj(offset[n]);
  std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
  for (const auto& e : g.edges()) {
    adj[fill[e.u]++] = e.v;
    adj[fill[e.v]++] = e.u;
  }

  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (std::size_t i = offset[x]; i < offset[x + 1]; ++i) {
      Vertex y = adj[i];
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

}  // namespace sombor
