#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/error.hpp"
#include "sombor/graph.hpp"

namespace sombor {

// SplitMix64 (Steele, Lea, Flood 2014). Used for gnp so that a given
// (n, p, seed) produces the same edge set in every implementation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

enum class Family { path, cycle, complete, star, complete_bipartite, gnp };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::gnp: return "gnp";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "star") return Family::star;
  if (name == "complete_bipartite" || name == "complete-bipartite") return Family::complete_bipartite;
  if (name == "gnp" || name == "random") return Family::gnp;
  throw input_error("unknown graph family '" + std::string(name) + "'");
}

struct FamilySpec {
  Family family = Family::path;
  std::size_t n = 0;  // path, cycle, complete, star, gnp
  std::size_t a = 0;  // complete_bipartite
  std::size_t b = 0;
  double p = 0.0;     // gnp
  std::uint64_t seed = 0;
};

namespace detail {
inline void require(bool ok, const std::string& what) {
  if (!ok) throw input_error(what);
}
}  // namespace detail

inline Graph path_graph(std::size_t n) {
  detail::require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({Vertex(i), Vertex(i + 1)});
  return Graph::from_sorted_edges_unchecked(n, std::move(e));
}

inline Graph cycle_graph(std::size_t n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  e.push_back({0, Vertex(n - 1)});
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({Vertex(i), Vertex(i + 1)});
  std::sort(e.begin(), e.end());
  return Graph::from_sorted_edges_unchecked(n, std::move(e));
}

inline Graph complete_graph(std::size_t n) {
  detail::require(n >= 1, "complete needs n >= 1");
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.push_back({Vertex(u), Vertex(v)});
  return Graph::from_sorted_edges_unchecked(n, std::move(e));
}

// Center is vertex 0.
inline Graph star_graph(std::size_t n) {
  detail::require(n >= 2, "star needs n >= 2");
  std::vector<Edge> e;
  for (std::size_t v = 1; v < n; ++v) e.push_back({0, Vertex(v)});
  return Graph::from_sorted_edges_unchecked(n, std::move(e));
}

// Parts are {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  detail::require(a >= 1 && b >= 1, "complete_bipartite needs a, b >= 1");
  std::vector<Edge> e;
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) e.push_back({Vertex(u), Vertex(a + v)});
  return Graph::from_sorted_edges_unchecked(a + b, std::move(e));
}

// Erdos-Renyi G(n, p). Pairs are visited in graph6 column-major order
// (0,1),(0,2),(1,2),(0,3),...; one SplitMix64 draw per pair.
inline Graph gnp_graph(std::size_t n, double p, std::uint64_t seed) {
  detail::require(n >= 1, "gnp needs n >= 1");
  detail::require(p >= 0.0 && p <= 1.0, "gnp needs p in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<Edge> e;
  for (std::size_t v = 1; v < n; ++v)
    for (std::size_t u = 0; u < v; ++u)
      if (rng.next_unit() < p) e.push_back({Vertex(u), Vertex(v)});
  std::sort(e.begin(), e.end());
  return Graph::from_sorted_edges_unchecked(n, std::move(e));
}

inline Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::path: return path_graph(spec.n);
    case Family::cycle: return cycle_graph(spec.n);
    case Family::complete: return complete_graph(spec.n);
    case Family::star: return star_graph(spec.n);
    case Family::complete_bipartite: return complete_bipartite_graph(spec.a, spec.b);
    case Family::gnp: return gnp_graph(spec.n, spec.p, spec.seed);
  }
  throw input_error("unknown family");
}

// Short human label, e.g. "complete_bipartite(a=2,b=18)".
inline std::string describe(const FamilySpec& spec) {
  std::string s(to_string(spec.family));
  switch (spec.family) {
    case Family::complete_bipartite:
      return s + "(a=" + std::to_string(spec.a) + ",b=" + std::to_string(spec.b) + ")";
    case Family::gnp: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", spec.p);
      return s + "(n=" + std::to_string(spec.n) + ",p=" + buf + ",seed=" + std::to_string(spec.seed) + ")";
    }
    default:
      return s + "(n=" + std::to_string(spec.n) + ")";
  }
}

}  // namespace sombor
