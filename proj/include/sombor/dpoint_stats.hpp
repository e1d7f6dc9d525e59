#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>

#include "sombor/error.hpp"
#include "sombor/indices.hpp"

namespace sombor {

inline constexpr double euler_gamma = 0.57721566490153286061;

// Statistics of the radius sequence |z_1|, ..., |z_m|. Variances use the
// population divisor m.
struct DPointSummary {
  std::size_t m = 0;
  double sum = 0.0;    // SO under the points' mode
  double r_a = 0.0;    // arithmetic mean
  double r_g = 0.0;    // geometric mean
  std::optional<double> r_h;  // harmonic mean, absent if any radius is 0
  double var = 0.0;
  double var_sqrt = 0.0;  // variance of sqrt(radius)
  double m1 = 0.0;        // min radius
  double m2 = 0.0;        // max radius
  double ratio = 1.0;     // m * r_g / SO, 1 when SO = 0
  double vec_x = 0.0;
  double vec_y = 0.0;

  double stddev() const { return std::sqrt(var); }
  double vec_norm() const { return std::hypot(vec_x, vec_y); }
  bool has_zero_radius() const { return m1 == 0.0; }
};

inline DPointSummary summarize(std::span<const DegreePoint> pts) {
  if (pts.empty()) throw domain_error("summary of an empty degree-point sequence");
  DPointSummary s;
  s.m = pts.size();
  const double m = double(s.m);

  double log_sum = 0.0, inv_sum = 0.0, sqrt_sum = 0.0;
  bool zero = false;
  s.m1 = pts.front().radius;
  s.m2 = pts.front().radius;
  for (const auto& p : pts) {
    s.sum += p.radius;
    s.vec_x += p.x;
    s.vec_y += p.y;
    s.m1 = std::min(s.m1, p.radius);
    s.m2 = std::max(s.m2, p.radius);
    sqrt_sum += std::sqrt(p.radius);
    if (p.radius == 0.0) {
      zero = true;
    } else {
      log_sum += std::log(p.radius);
      inv_sum += 1.0 / p.radius;
    }
  }
  s.r_a = s.sum / m;
  s.r_g = zero ? 0.0 : std::exp(log_sum / m);
  if (!zero) s.r_h = m / inv_sum;

  const double sqrt_mean = sqrt_sum / m;
  double dev = 0.0, dev_sqrt = 0.0;
  for (const auto& p : pts) {
    dev += (p.radius - s.r_a) * (p.radius - s.r_a);
    const double t = std::sqrt(p.radius) - sqrt_mean;
    dev_sqrt += t * t;
  }
  s.var = dev / m;
  s.var_sqrt = dev_sqrt / m;
  if (s.m1 == s.m2) {
    // all radii equal: every mean is that radius and the ratio is exactly 1
    s.r_a = s.r_g = s.m1;
    if (!zero) s.r_h = s.m1;
    s.ratio = 1.0;
  } else {
    s.ratio = s.sum == 0.0 ? 1.0 : m * s.r_g / s.sum;
  }
  return s;
}

}  // namespace sombor
