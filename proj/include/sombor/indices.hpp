#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/error.hpp"
#include "sombor/graph.hpp"

namespace sombor {

// Degree shift applied before forming degree points: none, 1, or the mean degree 2m/n.
enum class Mode { plain, reduced, averaged };

inline std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::plain: return "plain";
    case Mode::reduced: return "reduced";
    case Mode::averaged: return "averaged";
  }
  return "?";
}

inline Mode parse_mode(std::string_view s) {
  if (s == "plain") return Mode::plain;
  if (s == "reduced") return Mode::reduced;
  if (s == "averaged") return Mode::averaged;
  throw input_error("unknown mode '" + std::string(s) + "'");
}

// Per-edge point (x, y) with x <= y; coordinates are the endpoint degrees
// minus the mode's shift.
struct DegreePoint {
  Edge edge;
  double x;
  double y;
  double radius;
};

inline double degree_shift(const Graph& g, Mode mode) {
  switch (mode) {
    case Mode::plain: return 0.0;
    case Mode::reduced: return 1.0;
    case Mode::averaged: return 2.0 * double(g.edge_count()) / double(g.vertex_count());
  }
  return 0.0;
}

inline std::vector<DegreePoint> degree_points(const Graph& g, Mode mode) {
  if (g.edge_count() == 0) throw domain_error("degree points of an edgeless graph");
  const double shift = degree_shift(g, mode);
  std::vector<DegreePoint> pts;
  pts.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    double a = double(g.degree(e.u)) - shift;
    double b = double(g.degree(e.v)) - shift;
    if (a > b) std::swap(a, b);
    pts.push_back({e, a, b, std::hypot(a, b)});
  }
  return pts;
}

// Sombor index under the given shift; 0 for an edgeless graph.
inline double sombor(const Graph& g, Mode mode = Mode::plain) {
  const double shift = degree_shift(g, mode);
  double s = 0.0;
  for (const auto& e : g.edges()) s += std::hypot(double(g.degree(e.u)) - shift, double(g.degree(e.v)) - shift);
  return s;
}

inline double forgotten(const Graph& g) {
  double s = 0.0;
  for (const auto& e : g.edges()) {
    const double a = g.degree(e.u), b = g.degree(e.v);
    s += a * a + b * b;
  }
  return s;
}

inline double ag_index(const Graph& g) {
  double s = 0.0;
  for (const auto& e : g.edges()) {
    const double a = g.degree(e.u), b = g.degree(e.v);
    s += (a + b) / (2.0 * std::sqrt(a * b));
  }
  return s;
}

inline double ga_index(const Graph& g) {
  double s = 0.0;
  for (const auto& e : g.edges()) {
    const double a = g.degree(e.u), b = g.degree(e.v);
    s += 2.0 * std::sqrt(a * b) / (a + b);
  }
  return s;
}

// Symmetric division deg index.
inline double sdd_index(const Graph& g) {
  double s = 0.0;
  for (const auto& e : g.edges()) {
    const double a = g.degree(e.u), b = g.degree(e.v);
    s += (a * a + b * b) / (a * b);
  }
  return s;
}

struct IndexSet {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint32_t min_degree = 0;
  std::uint32_t max_degree = 0;
  double so = 0.0;
  double so_red = 0.0;
  double so_ave = 0.0;
  double forgotten = 0.0;
  double ag = 0.0;
  double ga = 0.0;
  double sdd = 0.0;
};

inline IndexSet index_set(const Graph& g) {
  IndexSet s;
  s.n = g.vertex_count();
  s.m = g.edge_count();
  s.min_degree = g.min_degree();
  s.max_degree = g.max_degree();
  s.so = sombor(g, Mode::plain);
  s.so_red = sombor(g, Mode::reduced);
  s.so_ave = sombor(g, Mode::averaged);
  s.forgotten = forgotten(g);
  s.ag = ag_index(g);
  s.ga = ga_index(g);
  s.sdd = sdd_index(g);
  return s;
}

}  // namespace sombor
