#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/dpoint_stats.hpp"
#include "sombor/error.hpp"
#include "sombor/graph.hpp"
#include "sombor/indices.hpp"

namespace sombor {

enum class BoundId : int { B1 = 1, B2, B3, B4, B5, B6, B7, B8, B9, B10, B11, B12, B13 };

inline constexpr std::array<BoundId, 13> all_bound_ids = {
    BoundId::B1, BoundId::B2, BoundId::B3,  BoundId::B4,  BoundId::B5,  BoundId::B6, BoundId::B7,
    BoundId::B8, BoundId::B9, BoundId::B10, BoundId::B11, BoundId::B12, BoundId::B13};

inline std::string to_string(BoundId id) { return "B" + std::to_string(static_cast<int>(id)); }

inline BoundId parse_bound_id(std::string_view s) {
  if (s.size() >= 2 && (s[0] == 'B' || s[0] == 'b')) {
    int v = 0;
    bool ok = true;
    for (char c : s.substr(1)) {
      if (c < '0' || c > '9') ok = false;
      else v = v * 10 + (c - '0');
    }
    if (ok && v >= 1 && v <= 13) return static_cast<BoundId>(v);
  }
  throw input_error("unknown bound id '" + std::string(s) + "'");
}

// Comma-separated list such as "B1,B5,B11"; "all" selects every single-graph bound.
inline std::vector<BoundId> parse_bound_list(std::string_view s) {
  std::vector<BoundId> out;
  if (s == "all") {
    for (auto id : all_bound_ids)
      if (id != BoundId::B9) out.push_back(id);
    return out;
  }
  std::size_t start = 0;
  while (start <= s.size()) {
    auto end = s.find(',', start);
    if (end == std::string_view::npos) end = s.size();
    if (end > start) out.push_back(parse_bound_id(s.substr(start, end - start)));
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw input_error("empty bound list");
  return out;
}

enum class Strictness { non_strict, strict_lower, strict_upper };

inline std::string_view to_string(Strictness s) {
  switch (s) {
    case Strictness::non_strict: return "non-strict";
    case Strictness::strict_lower: return "strict-lower";
    case Strictness::strict_upper: return "strict-upper";
  }
  return "?";
}

// A side holds when its slack is >= -rel * max(1, |target|).
struct Tolerance {
  double rel = 1e-9;
  double absolute(double target) const { return rel * std::max(1.0, std::abs(target)); }
};

struct BoundReport {
  BoundId id = BoundId::B1;
  Mode mode = Mode::plain;
  bool applicable = false;
  std::string reason;  // why inapplicable, or a caveat on an applicable bound
  std::optional<double> lower;
  std::optional<double> upper;
  double target = 0.0;
  std::optional<double> slack_lower;
  std::optional<double> slack_upper;
  std::optional<double> rel_slack_lower;
  std::optional<double> rel_slack_upper;
  bool holds = true;
  Strictness strictness = Strictness::non_strict;
  bool boundary = false;  // a strict side met with equality within tolerance
  std::string detail;
  std::optional<double> best_case_lower;  // B1: lower bound under the orientation maximizing |sum z|
};

// beta_i > 0, sum beta_i = 1 (within 1e-12), one weight per degree point.
class BetaWeights {
 public:
  explicit BetaWeights(std::vector<double> w) : w_(std::move(w)) {
    if (w_.empty()) throw input_error("beta weights must be non-empty");
    double sum = 0.0;
    for (double x : w_) {
      if (!(x > 0.0) || !std::isfinite(x)) throw input_error("beta weights must be positive");
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw input_error("beta weights must sum to 1");
    auto [lo, hi] = std::minmax_element(w_.begin(), w_.end());
    min_ = *lo;
    max_ = *hi;
  }

  static BetaWeights uniform(std::size_t m) {
    if (m == 0) throw input_error("beta weights must be non-empty");
    return BetaWeights(std::vector<double>(m, 1.0 / double(m)), 1.0 / double(m), 1.0 / double(m));
  }

  // beta_i = |z_i| / sum |z_j|; needs every radius > 0.
  static BetaWeights radius_proportional(std::span<const DegreePoint> pts) {
    double sum = 0.0;
    for (const auto& p : pts) sum += p.radius;
    std::vector<double> w;
    w.reserve(pts.size());
    for (const auto& p : pts) w.push_back(p.radius / sum);
    return BetaWeights(std::move(w));
  }

  std::span<const double> weights() const noexcept { return w_; }
  std::size_t size() const noexcept { return w_.size(); }
  double beta_min() const noexcept { return min_; }
  double beta_max() const noexcept { return max_; }

 private:
  BetaWeights(std::vector<double> w, double lo, double hi) : w_(std::move(w)), min_(lo), max_(hi) {}

  std::vector<double> w_;
  double min_ = 0.0;
  double max_ = 0.0;
};

enum class BetaProfile { uniform, radius_proportional };

inline BetaProfile parse_beta_profile(std::string_view s) {
  if (s == "uniform") return BetaProfile::uniform;
  if (s == "radius-proportional" || s == "radius_proportional") return BetaProfile::radius_proportional;
  throw input_error("unknown beta profile '" + std::string(s) + "'");
}

inline std::string_view to_string(BetaProfile p) {
  return p == BetaProfile::uniform ? "uniform" : "radius-proportional";
}

// Degree points and their summary for one (graph, mode), shared by the evaluators.
class BoundContext {
 public:
  explicit BoundContext(const Graph& g, Mode mode) : graph_(&g), mode_(mode), connected_(is_connected(g)) {
    if (g.edge_count() > 0) {
      points_ = degree_points(g, mode);
      summary_ = summarize(points_);
    }
  }

  const Graph& graph() const noexcept { return *graph_; }
  Mode mode() const noexcept { return mode_; }
  bool connected() const noexcept { return connected_; }
  std::span<const DegreePoint> points() const noexcept { return points_; }
  const DPointSummary& summary() const noexcept { return summary_; }
  std::size_t m() const noexcept { return points_.size(); }

 private:
  const Graph* graph_;
  Mode mode_;
  bool connected_;
  std::vector<DegreePoint> points_;
  DPointSummary summary_;
};

namespace detail {

inline BoundReport start(BoundId id, Mode mode, double target) {
  BoundReport r;
  r.id = id;
  r.mode = mode;
  r.target = target;
  r.applicable = true;
  return r;
}

inline BoundReport inapplicable(BoundId id, Mode mode, std::string reason, double target = 0.0) {
  BoundReport r;
  r.id = id;
  r.mode = mode;
  r.applicable = false;
  r.reason = std::move(reason);
  r.target = target;
  return r;
}

// Returns a reason if the graph cannot be evaluated at all.
inline std::optional<std::string> common_guard(const BoundContext& ctx) {
  if (ctx.m() == 0) return "graph has no edges";
  if (!ctx.connected()) return "graph is disconnected";
  return std::nullopt;
}

inline void append_reason(BoundReport& r, std::string_view note) {
  if (!r.reason.empty()) r.reason += "; ";
  r.reason += note;
}

inline void finish(BoundReport& r, const Tolerance& tol) {
  const double eps = tol.absolute(r.target);
  r.holds = true;
  r.boundary = false;
  if (r.lower) {
    r.slack_lower = r.target - *r.lower;
    if (r.target != 0.0) r.rel_slack_lower = *r.slack_lower / r.target;
    if (r.strictness == Strictness::strict_lower) {
      // lower < target + eps; equality within eps is flagged, not failed
      if (!(*r.lower < r.target + eps)) r.holds = false;
      if (std::abs(*r.slack_lower) <= eps) r.boundary = true;
    } else if (*r.slack_lower < -eps) {
      r.holds = false;
    }
  }
  if (r.upper) {
    r.slack_upper = *r.upper - r.target;
    if (r.target != 0.0) r.rel_slack_upper = *r.slack_upper / r.target;
    if (r.strictness == Strictness::strict_upper) {
      if (!(r.target < *r.upper + eps)) r.holds = false;
      if (std::abs(*r.slack_upper) <= eps) r.boundary = true;
    } else if (*r.slack_upper < -eps) {
      r.holds = false;
    }
  }
  if (r.boundary) append_reason(r, "boundary");
}

inline void note_small_min_degree(BoundReport& r, const Graph& g) {
  if (g.min_degree() < 2) append_reason(r, "outside proof hypothesis (delta<2)");
}

}  // namespace detail

// |z_1 + ... + z_m| <= SO <= sum sqrt(2(|z_i|^2 - x_i y_i))
inline BoundReport b1_triangle(const BoundContext& ctx, const Tolerance& tol = {}) {
  if (auto why = detail::common_guard(ctx)) return detail::inapplicable(BoundId::B1, ctx.mode(), *why);
  const auto& s = ctx.summary();
  auto r = detail::start(BoundId::B1, ctx.mode(), s.sum);
  double upper = 0.0, diag = 0.0, off = 0.0;
  for (const auto& p : ctx.points()) {
    upper += std::sqrt(2.0 * (p.radius * p.radius - p.x * p.y));
    diag += p.x + p.y;
    off += std::abs(p.y - p.x);
  }
  r.lower = s.vec_norm();
  r.upper = upper;
  // Reflecting a point across y = x only negates its off-diagonal component,
  // so the best orientation aligns all of them.
  r.best_case_lower = std::hypot(diag, off) / std::numbers::sqrt2;
  detail::finish(r, tol);
  return r;
}

// m R_g <= SO
inline BoundReport b2_geometric(const BoundContext& ctx, const Tolerance& tol = {}) {
  if (auto why = detail::common_guard(ctx)) return detail::inapplicable(BoundId::B2, ctx.mode(), *why);
  const auto& s = ctx.summary();
  auto r = detail::start(BoundId::B2, ctx.mode(), s.sum);
  r.lower = double(s.m) * s.r_g;
  detail::finish(r, tol);
  return r;
}

// SO <= sqrt(F m)
inline BoundReport b3_forgotten(const BoundContext& ctx, const Tolerance& tol = {}) {
  if (ctx.mode() != Mode::plain) return detail::inapplicable(BoundId::B3, ctx.mode(), "plain mode only");
  if (auto why = detail::common_guard(ctx)) return detail::inapplicable(BoundId::B3, ctx.mode(), *why);
  const auto& s = ctx.summary();
  auto r = detail::start(BoundId::B3, ctx.mode(), s.sum);
  r.upper = std::sqrt(forgotten(ctx.graph()) * double(s.m));
  detail::finish(r, tol);
  return r;
}

// m (R_g + var(sqrt|z|)) <= SO
inline BoundReport b4_var_sqrt(const BoundContext& ctx, const Tolerance& tol = {}) {
  if (auto why = detail::common_guard(ctx)) return detail::inapplicable(BoundId::B4, ctx.mode(), *why);
  const auto& s = ctx.summary();
  auto r = detail::start(BoundId::B4, ctx.mode(), s.sum);
  r.lower = double(s.m) * (s.r_g + s.var_sqrt);
  detail::finish(r, tol);
  return r;
}

// m (R_g + var/(2 M2)) <= SO <= m (R_g + var/(2 M1))
inline BoundReport b5_minmax_var(const BoundContext& ctx, const Tolerance& tol = {}) {
  if (auto why = detail::common_guard(ctx)) return detail::inapplicable(BoundId::B5, ctx.mode(), *why);
  const auto& s = ctx.summary();
  if (s.m1 == 0.0) return detail::inapplicable(BoundId::B5, ctx.mode(), "zero minimum radius", s.sum);
  auto r = detail::start(BoundId::B5, ctx.mode(), s.sum);
  const double m = double(s.m);
  r.lower = m * (s.r_g + s.var / (2.0 * s.m2));
  r.upper = m * (s.r_g + s.var / (2.0 * s.m1));
  detail::finish(r, tol);
  return r;
}

// m sigma / sqrt(m-1) < SO <= m (R_g + sqrt(m-1) sigma), m >= 2
inline BoundReport b6_stddev(const BoundContext& ctx, const Tolerance& tol = {}) {
  if (auto why = detail::common_guard(ctx)) return detail::inapplicable(BoundId::B6, ctx.mode(), *why);
  const auto& s = ctx.summary();
  if (s.m < 2) return detail::inapplicable(BoundId::B6, ctx.mode(), "m < 2", s.sum);
  if (s.sum == 0.0) return detail::inapplicable(BoundId::B6, ctx.mode(), "SO = 0", s.sum);
  auto r = detail::start(BoundId::B6, ctx.mode(), s.sum);
  const double m = double(s.m);
  const double root = std::sqrt(m - 1.0);
  r.strictness = Strictness::strict_lower;
  r.lower = m * s.stddev() / root;
  r.upper = m * (s.r_g + root * s.stddev());
  detail::finish(r, tol);
  return r;
}

// (1/beta_max) D + m R_g <= SO <= (1/beta_min) D + m R_g,
// D = sum beta_i |z_i| - prod |z_i|^beta_i
inline BoundReport b7_beta(const BoundContext& ctx, const BetaWeights& beta, const Tolerance& tol = {}) {
  if (auto why = detail::common_guard(ctx)) return detail::inapplicable(BoundId::B7, ctx.mode(), *why);
  const auto& s = ctx.summary();
  if (beta.size() != s.m) {
    return detail::inapplicable(BoundId::B7, ctx.mode(),
                                "beta length " + std::to_string(beta.size()) + " != m = " + std::to_string(s.m), s.sum);
  }
  auto r = detail::start(BoundId::B7, ctx.mode(), s.sum);
  double weighted = 0.0, log_prod = 0.0;
  bool zero = false;
  const auto w = beta.weights();
  const auto pts = ctx.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    weighted += w[i] * pts[i].radius;
    if (pts[i].radius == 0.0) zero = true;
    else log_prod += w[i] * std::log(pts[i].radius);
  }
  const double gap = weighted - (zero ? 0.0 : std::exp(log_prod));
  const double base = double(s.m) * s.r_g;
  r.lower = gap / beta.beta_max() + base;
  r.upper = gap / beta.beta_min() + base;
  detail::finish(r, tol);
  return r;
}

inline BoundReport b7_beta(const BoundContext& ctx, BetaProfile profile, const Tolerance& tol = {}) {
  if (auto why = detail::common_guard(ctx)) return detail::inapplicable(BoundId::B7, ctx.mode(), *why);
  if (profile == BetaProfile::uniform) {
    auto r = b7_beta(ctx, BetaWeights::uniform(ctx.m()), tol);
    r.detail = "beta=uniform";
    return r;
  }
  if (ctx.summary().m1 == 0.0) {
    return detail::inapplicable(BoundId::B7, ctx.mode(), "zero radius: radius-proportional beta undefined",
                                ctx.summary().sum);
  }
  auto r = b7_beta(ctx, BetaWeights::radius_proportional(ctx.points()), tol);
  r.detail = "beta=radius-proportional";
  return r;
}

// m R_h <= SO
inline BoundReport b8_harmonic(const BoundContext& ctx, const Tolerance& tol = {}) {
  if (auto why = detail::common_guard(ctx)) return detail::inapplicable(BoundId::B8, ctx.mode(), *why);
  const auto& s = ctx.summary();
  if (!s.r_h) return detail::inapplicable(BoundId::B8, ctx.mode(), "zero radius", s.sum);
  auto r = detail::start(BoundId::B8, ctx.mode(), s.sum);
  r.lower = double(s.m) * *s.r_h;
  detail::finish(r, tol);
  return r;
}

struct ProductBracket {
  double lower;  // sum of paired products, both sequences sorted non-increasing
  double upper;  // m * lower
};

// Chebyshev/Cauchy-Schwarz bracket for (sum a)(sum b); a and b must have equal length.
inline ProductBracket product_bracket(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) throw input_error("product bracket needs sequences of equal length");
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  double paired = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) paired += a[i] * b[i];
  return {paired, double(a.size()) * paired};
}

// sum |z_i||w_i| <= SO(G1) SO(G2) <= m sum |z_i||w_i|, radii of each graph
// sorted non-increasing. Plain mode.
inline BoundReport b9_product(const Graph& g1, const Graph& g2, const Tolerance& tol = {}) {
  const BoundContext c1(g1, Mode::plain), c2(g2, Mode::plain);
  for (const auto* c : {&c1, &c2})
    if (auto why = detail::common_guard(*c)) return detail::inapplicable(BoundId::B9, Mode::plain, *why);
  const double target = c1.summary().sum * c2.summary().sum;
  if (c1.m() != c2.m()) {
    return detail::inapplicable(BoundId::B9, Mode::plain,
                                "edge counts differ (" + std::to_string(c1.m()) + " vs " + std::to_string(c2.m()) + ")",
                                target);
  }
  auto sorted_radii = [](const BoundContext& c) {
    std::vector<double> v;
    v.reserve(c.m());
    for (const auto& p : c.points()) v.push_back(p.radius);
    return v;
  };
  auto a = sorted_radii(c1), b = sorted_radii(c2);
  const auto bracket = product_bracket(a, b);
  auto r = detail::start(BoundId::B9, Mode::plain, target);
  r.lower = bracket.lower;
  r.upper = bracket.upper;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end() || std::adjacent_find(b.begin(), b.end()) != b.end())
    detail::append_reason(r, "ties present");
  detail::finish(r, tol);
  return r;
}

// max(AG, sqrt2 delta AG) <= SO <= sqrt2 (n-1) AG
inline BoundReport b10_ag(const BoundContext& ctx, const Tolerance& tol = {}) {
  if (ctx.mode() != Mode::plain) return detail::inapplicable(BoundId::B10, ctx.mode(), "plain mode only");
  if (auto why = detail::common_guard(ctx)) return detail::inapplicable(BoundId::B10, ctx.mode(), *why);
  const auto& g = ctx.graph();
  auto r = detail::start(BoundId::B10, ctx.mode(), ctx.summary().sum);
  const double ag = ag_index(g);
  const double scaled = std::numbers::sqrt2 * double(g.min_degree()) * ag;
  if (scaled >= ag) {
    r.lower = scaled;
    r.detail = "lower branch: sqrt2*delta*AG";
  } else {
    r.lower = ag;
    r.detail = "lower branch: AG";
  }
  r.upper = std::numbers::sqrt2 * double(g.vertex_count() - 1) * ag;
  detail::note_small_min_degree(r, g);
  detail::finish(r, tol);
  return r;
}

// max(GA [strict], sqrt2 delta GA) <= SO <= sqrt2 (n-1) GA
inline BoundReport b11_ga(const BoundContext& ctx, const Tolerance& tol = {}) {
  if (ctx.mode() != Mode::plain) return detail::inapplicable(BoundId::B11, ctx.mode(), "plain mode only");
  if (auto why = detail::common_guard(ctx)) return detail::inapplicable(BoundId::B11, ctx.mode(), *why);
  const auto& g = ctx.graph();
  auto r = detail::start(BoundId::B11, ctx.mode(), ctx.summary().sum);
  const double ga = ga_index(g);
  const double scaled = std::numbers::sqrt2 * double(g.min_degree()) * ga;
  if (scaled >= ga) {
    r.lower = scaled;
    r.detail = "lower branch: sqrt2*delta*GA";
  } else {
    r.lower = ga;
    r.strictness = Strictness::strict_lower;
    r.detail = "lower branch: GA (strict)";
  }
  r.upper = std::numbers::sqrt2 * double(g.vertex_count() - 1) * ga;
  detail::note_small_min_degree(r, g);
  detail::finish(r, tol);
  return r;
}

// (sqrt2/2) delta SDD <= SO <= (sqrt2/2) (n-1) SDD
inline BoundReport b12_sdd(const BoundContext& ctx, const Tolerance& tol = {}) {
  if (ctx.mode() != Mode::plain) return detail::inapplicable(BoundId::B12, ctx.mode(), "plain mode only");
  if (auto why = detail::common_guard(ctx)) return detail::inapplicable(BoundId::B12, ctx.mode(), *why);
  const auto& g = ctx.graph();
  auto r = detail::start(BoundId::B12, ctx.mode(), ctx.summary().sum);
  const double half_root = std::numbers::sqrt2 / 2.0;
  const double sdd = sdd_index(g);
  r.lower = half_root * double(g.min_degree()) * sdd;
  r.upper = half_root * double(g.vertex_count() - 1) * sdd;
  detail::note_small_min_degree(r, g);
  detail::finish(r, tol);
  return r;
}

// 0 <= m R_g / SO <= 1
inline BoundReport b13_ratio(const BoundContext& ctx, const Tolerance& tol = {}) {
  if (auto why = detail::common_guard(ctx)) return detail::inapplicable(BoundId::B13, ctx.mode(), *why);
  auto r = detail::start(BoundId::B13, ctx.mode(), ctx.summary().ratio);
  r.lower = 0.0;
  r.upper = 1.0;
  if (ctx.summary().sum == 0.0) r.detail = "SO = 0, ratio := 1";
  detail::finish(r, tol);
  return r;
}

struct EvalOptions {
  BetaProfile beta = BetaProfile::uniform;
  std::optional<BetaWeights> beta_weights;  // overrides the profile when set
  Tolerance tol;
};

inline BoundReport evaluate(const BoundContext& ctx, BoundId id, const EvalOptions& opt = {}) {
  switch (id) {
    case BoundId::B1: return b1_triangle(ctx, opt.tol);
    case BoundId::B2: return b2_geometric(ctx, opt.tol);
    case BoundId::B3: return b3_forgotten(ctx, opt.tol);
    case BoundId::B4: return b4_var_sqrt(ctx, opt.tol);
    case BoundId::B5: return b5_minmax_var(ctx, opt.tol);
    case BoundId::B6: return b6_stddev(ctx, opt.tol);
    case BoundId::B7:
      return opt.beta_weights ? b7_beta(ctx, *opt.beta_weights, opt.tol) : b7_beta(ctx, opt.beta, opt.tol);
    case BoundId::B8: return b8_harmonic(ctx, opt.tol);
    case BoundId::B9: return detail::inapplicable(BoundId::B9, ctx.mode(), "needs a graph pair");
    case BoundId::B10: return b10_ag(ctx, opt.tol);
    case BoundId::B11: return b11_ga(ctx, opt.tol);
    case BoundId::B12: return b12_sdd(ctx, opt.tol);
    case BoundId::B13: return b13_ratio(ctx, opt.tol);
  }
  throw input_error("unknown bound id");
}

// Selected single-graph bounds in id order (B9 is skipped).
inline std::vector<BoundReport> evaluate_selected(const Graph& g, Mode mode, std::span<const BoundId> ids,
                                                  const EvalOptions& opt = {}) {
  const BoundContext ctx(g, mode);
  std::vector<BoundReport> out;
  out.reserve(ids.size());
  for (auto id : ids)
    if (id != BoundId::B9) out.push_back(evaluate(ctx, id, opt));
  return out;
}

// B1-B8 and B10-B13, in id order.
inline std::vector<BoundReport> evaluate_all(const Graph& g, Mode mode, const EvalOptions& opt = {}) {
  return evaluate_selected(g, mode, all_bound_ids, opt);
}

// Convenience overloads taking the graph directly.
inline BoundReport b1_triangle(const Graph& g, Mode mode, const Tolerance& tol = {}) { return b1_triangle(BoundContext(g, mode), tol); }
inline BoundReport b2_geometric(const Graph& g, Mode mode, const Tolerance& tol = {}) { return b2_geometric(BoundContext(g, mode), tol); }
inline BoundReport b3_forgotten(const Graph& g, const Tolerance& tol = {}) { return b3_forgotten(BoundContext(g, Mode::plain), tol); }
inline BoundReport b4_var_sqrt(const Graph& g, Mode mode, const Tolerance& tol = {}) { return b4_var_sqrt(BoundContext(g, mode), tol); }
inline BoundReport b5_minmax_var(const Graph& g, Mode mode, const Tolerance& tol = {}) { return b5_minmax_var(BoundContext(g, mode), tol); }
inline BoundReport b6_stddev(const Graph& g, Mode mode, const Tolerance& tol = {}) { return b6_stddev(BoundContext(g, mode), tol); }
inline BoundReport b7_beta(const Graph& g, Mode mode, const BetaWeights& beta, const Tolerance& tol = {}) { return b7_beta(BoundContext(g, mode), beta, tol); }
inline BoundReport b8_harmonic(const Graph& g, Mode mode, const Tolerance& tol = {}) { return b8_harmonic(BoundContext(g, mode), tol); }
inline BoundReport b10_ag(const Graph& g, const Tolerance& tol = {}) { return b10_ag(BoundContext(g, Mode::plain), tol); }
inline BoundReport b11_ga(const Graph& g, const Tolerance& tol = {}) { return b11_ga(BoundContext(g, Mode::plain), tol); }
inline BoundReport b12_sdd(const Graph& g, const Tolerance& tol = {}) { return b12_sdd(BoundContext(g, Mode::plain), tol); }
inline BoundReport b13_ratio(const Graph& g, Mode mode, const Tolerance& tol = {}) { return b13_ratio(BoundContext(g, mode), tol); }

}  // namespace sombor
