#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

using namespace sombor;
using ::sombor::testing::rel_near;

namespace {

const double r2 = std::sqrt(2.0);
const double so_p4 = 7.3005630797457695;

bool equality_side(const BoundReport& r, double rel = 1e-9) {
  const double eps = rel * std::max(1.0, std::abs(r.target));
  return (r.slack_lower && std::abs(*r.slack_lower) <= eps) || (r.slack_upper && std::abs(*r.slack_upper) <= eps);
}

}  // namespace

// P4 expectations are frozen from tests/oracle/sombor_oracle.py (mpmath, 50 digits).

TEST(B1Triangle, Examples) {
  auto c = b1_triangle(cycle_graph(6), Mode::plain);
  EXPECT_REL(*c.lower, 12 * r2, 1e-12);
  EXPECT_REL(*c.upper, 12 * r2, 1e-12);
  EXPECT_TRUE(c.holds);
  auto p = b1_triangle(path_graph(4), Mode::plain);
  EXPECT_REL(*p.lower, 7.2111025509279786, 1e-12);
  EXPECT_REL(*p.upper, 7.7274066103125463, 1e-12);
  EXPECT_REL(p.target, so_p4, 1e-12);
  EXPECT_TRUE(p.holds);
  auto k = b1_triangle(complete_graph(2), Mode::plain);
  EXPECT_REL(*k.lower, r2, 1e-15);
  EXPECT_REL(*k.upper, r2, 1e-15);
}

TEST(B1Triangle, BestCaseMatchesBruteForceOrientations) {
  auto check = [](const Graph& g, Mode mode) {
    const auto pts = degree_points(g, mode);
    ASSERT_LE(pts.size(), 16u);
    double best = 0;
    for (std::uint32_t flips = 0; flips < (1u << pts.size()); ++flips) {
      double sx = 0, sy = 0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const bool f = flips >> i & 1u;
        sx += f ? pts[i].y : pts[i].x;
        sy += f ? pts[i].x : pts[i].y;
      }
      best = std::max(best, std::hypot(sx, sy));
    }
    const auto r = b1_triangle(g, mode);
    ASSERT_TRUE(rel_near(*r.best_case_lower, best, 1e-12));
    ASSERT_TRUE(rel_near(*r.lower, best, 1e-12));  // the sorted convention is the maximizer
  };
  for (std::size_t n = 3; n <= 5; ++n)
    for_each_labeled({n, true, std::nullopt, false}, [&](std::uint64_t, const Graph& g) {
      check(g, Mode::plain);
      check(g, Mode::averaged);
    });
  check(star_graph(9), Mode::reduced);
}

TEST(B2Geometric, Examples) {
  auto c = b2_geometric(cycle_graph(6), Mode::plain);
  EXPECT_REL(*c.lower, 12 * r2, 1e-12);
  EXPECT_TRUE(equality_side(c));
  EXPECT_REL(*b2_geometric(path_graph(4), Mode::plain).lower, 7.2548135253658718, 1e-12);
  auto z = b2_geometric(cycle_graph(6), Mode::averaged);
  EXPECT_TRUE(z.applicable);
  EXPECT_EQ(*z.lower, 0.0);
  EXPECT_EQ(z.target, 0.0);
  EXPECT_TRUE(z.holds);
  EXPECT_FALSE(z.rel_slack_lower.has_value());
}

TEST(B3Forgotten, Examples) {
  EXPECT_REL(*b3_forgotten(cycle_graph(6)).upper, 12 * r2, 1e-12);
  EXPECT_REL(*b3_forgotten(path_graph(4)).upper, 7.3484692283495343, 1e-12);
  EXPECT_REL(*b3_forgotten(complete_graph(2)).upper, r2, 1e-15);
  EXPECT_FALSE(b3_forgotten(path_graph(4)).lower.has_value());
  auto red = evaluate(BoundContext(path_graph(4), Mode::reduced), BoundId::B3);
  EXPECT_FALSE(red.applicable);
  EXPECT_EQ(red.reason, "plain mode only");
}

TEST(B4VarSqrt, Examples) {
  EXPECT_REL(*b4_var_sqrt(cycle_graph(6), Mode::plain).lower, 12 * r2, 1e-12);
  EXPECT_REL(*b4_var_sqrt(path_graph(4), Mode::plain).lower, 7.2779877810420306, 1e-12);
  EXPECT_REL(*b4_var_sqrt(complete_graph(2), Mode::plain).lower, r2, 1e-15);
}

TEST(B5MinMaxVar, Examples) {
  auto p = b5_minmax_var(path_graph(4), Mode::plain);
  EXPECT_REL(*p.lower, 7.296166232936865, 1e-12);
  EXPECT_REL(*p.upper, 7.3071210227015628, 1e-12);
  EXPECT_TRUE(p.holds);
  auto c = b5_minmax_var(cycle_graph(6), Mode::plain);
  EXPECT_REL(*c.lower, 12 * r2, 1e-12);
  EXPECT_REL(*c.upper, 12 * r2, 1e-12);
  auto z = b5_minmax_var(cycle_graph(6), Mode::averaged);
  EXPECT_FALSE(z.applicable);
  EXPECT_EQ(z.reason, "zero minimum radius");
  EXPECT_FALSE(z.lower.has_value());
  EXPECT_FALSE(z.upper.has_value());
}

TEST(B6Stddev, Examples) {
  auto p = b6_stddev(path_graph(4), Mode::plain);
  EXPECT_REL(*p.lower, 0.5923591472464004, 1e-12);
  EXPECT_REL(*p.upper, 8.4395318198586726, 1e-12);
  EXPECT_EQ(p.strictness, Strictness::strict_lower);
  EXPECT_TRUE(p.holds);
  auto c = b6_stddev(cycle_graph(6), Mode::plain);
  EXPECT_NEAR(*c.lower, 0.0, 1e-12);
  EXPECT_REL(*c.upper, 12 * r2, 1e-12);
  EXPECT_TRUE(c.holds);
  EXPECT_FALSE(c.boundary);
  auto k = b6_stddev(complete_graph(2), Mode::plain);
  EXPECT_FALSE(k.applicable);
  EXPECT_EQ(k.reason, "m < 2");
  EXPECT_FALSE(b6_stddev(cycle_graph(6), Mode::averaged).applicable);
}

TEST(B7Beta, UniformCollapsesToSombor) {
  for (const auto& g : ::sombor::testing::random_connected_graphs(100, 99)) {
    auto r = b7_beta(g, Mode::plain, BetaWeights::uniform(g.edge_count()));
    ASSERT_TRUE(rel_near(*r.lower, r.target, 1e-12));
    ASSERT_TRUE(rel_near(*r.upper, r.target, 1e-12));
  }
}

TEST(B7Beta, PathCustomWeights) {
  auto r = b7_beta(path_graph(4), Mode::plain, BetaWeights({0.5, 0.25, 0.25}));
  EXPECT_REL(*r.lower, 7.2803816426653409, 1e-12);
  EXPECT_REL(*r.upper, 7.30594975996481, 1e-12);
  EXPECT_LT(*r.lower, so_p4);
  EXPECT_GT(*r.upper, so_p4);
  EXPECT_TRUE(r.holds);
}

TEST(B7Beta, EqualRadiiGiveEqualityForAnyWeights) {
  const auto g = cycle_graph(6);
  auto r = b7_beta(g, Mode::plain, BetaWeights({0.3, 0.1, 0.2, 0.15, 0.05, 0.2}));
  EXPECT_REL(*r.lower, 12 * r2, 1e-12);
  EXPECT_REL(*r.upper, 12 * r2, 1e-12);
}

TEST(B7Beta, RadiusProportionalProfileHoldsOnRandomGraphs) {
  for (const auto& g : ::sombor::testing::random_connected_graphs(200, 4)) {
    auto r = evaluate(BoundContext(g, Mode::plain), BoundId::B7, {BetaProfile::radius_proportional, {}, {}});
    ASSERT_TRUE(r.applicable);
    ASSERT_TRUE(r.holds) << graph6::write(g);
    ASSERT_EQ(r.detail, "beta=radius-proportional");
  }
  auto z = evaluate(BoundContext(cycle_graph(5), Mode::averaged), BoundId::B7, {BetaProfile::radius_proportional, {}, {}});
  EXPECT_FALSE(z.applicable);
}

TEST(B7Beta, WeightValidation) {
  EXPECT_THROW(BetaWeights({0.5, 0.6}), input_error);
  EXPECT_THROW(BetaWeights({1.0, 0.0}), input_error);
  EXPECT_THROW(BetaWeights({-0.5, 1.5}), input_error);
  EXPECT_THROW(BetaWeights(std::vector<double>{}), input_error);
  const BetaWeights w({0.5, 0.25, 0.25});
  EXPECT_EQ(w.beta_min(), 0.25);
  EXPECT_EQ(w.beta_max(), 0.5);
  EXPECT_LE(w.beta_min(), 1.0 / 3);
  EXPECT_GE(w.beta_max(), 1.0 / 3);
  auto mismatch = b7_beta(cycle_graph(4), Mode::plain, w);
  EXPECT_FALSE(mismatch.applicable);
}

TEST(B8Harmonic, Examples) {
  EXPECT_REL(*b8_harmonic(cycle_graph(6), Mode::plain).lower, 12 * r2, 1e-12);
  EXPECT_REL(*b8_harmonic(path_graph(4), Mode::plain).lower, 7.2116506720885616, 1e-12);
  auto z = b8_harmonic(cycle_graph(6), Mode::averaged);
  EXPECT_FALSE(z.applicable);
  EXPECT_EQ(z.reason, "zero radius");
}

TEST(B9Product, Examples) {
  auto c = b9_product(cycle_graph(5), cycle_graph(5));
  EXPECT_REL(*c.lower, 40.0, 1e-12);
  EXPECT_REL(c.target, 200.0, 1e-12);
  EXPECT_REL(*c.upper, 200.0, 1e-12);
  EXPECT_TRUE(c.holds);
  EXPECT_NE(c.reason.find("ties present"), std::string::npos);
  auto p = b9_product(path_graph(4), path_graph(4));
  EXPECT_REL(*p.lower, 18.0, 1e-12);
  EXPECT_REL(p.target, 53.298221281347035, 1e-12);
  EXPECT_REL(*p.upper, 54.0, 1e-12);
  auto k = b9_product(complete_graph(2), cycle_graph(3));
  EXPECT_FALSE(k.applicable);
  EXPECT_NE(k.reason.find("edge counts differ"), std::string::npos);
}

TEST(B9Product, HoldsOnEqualSizePairs) {
  const auto gs = ::sombor::testing::random_connected_graphs(300, 12);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (gs[i].edge_count() == gs[j].edge_count()) {
        ++pairs;
        ASSERT_TRUE(b9_product(gs[i], gs[j]).holds);
      }
  EXPECT_GT(pairs, 50u);
}

TEST(B9Product, ScalingPreservesHolds) {
  SplitMix64 rng(314);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng.next() % 30;
    std::vector<double> a(m), b(m);
    for (auto& x : a) x = 0.1 + 10 * rng.next_unit();
    for (auto& x : b) x = 0.1 + 10 * rng.next_unit();
    for (double scale : {1e-3, 0.5, 7.0, 1e3}) {
      std::vector<double> sa(a), sb(b);
      for (auto& x : sa) x *= scale;
      for (auto& x : sb) x *= scale;
      double suma = 0, sumb = 0;
      for (double x : sa) suma += x;
      for (double x : sb) sumb += x;
      const auto br = product_bracket(sa, sb);
      const double t = suma * sumb, eps = 1e-12 * t;
      ASSERT_LE(br.lower, t + eps);
      ASSERT_GE(br.upper, t - eps);
    }
  }
  EXPECT_THROW(product_bracket({1.0}, {1.0, 2.0}), input_error);
}

TEST(B10Ag, Examples) {
  auto c = b10_ag(cycle_graph(6));
  EXPECT_REL(*c.lower, 12 * r2, 1e-12);
  EXPECT_REL(*c.upper, 30 * r2, 1e-12);
  EXPECT_EQ(c.detail, "lower branch: sqrt2*delta*AG");
  EXPECT_TRUE(c.reason.empty());
  auto p = b10_ag(path_graph(4));
  EXPECT_REL(*p.lower, 4.414213562373095, 1e-12);
  EXPECT_REL(*p.upper, 13.242640687119285, 1e-12);
  EXPECT_EQ(p.reason, "outside proof hypothesis (delta<2)");
  auto k = b10_ag(complete_graph(2));
  EXPECT_REL(*k.lower, r2, 1e-15);
  EXPECT_REL(*k.upper, r2, 1e-15);
  EXPECT_TRUE(k.holds);
}

TEST(B11Ga, Examples) {
  auto p = b11_ga(path_graph(4));
  EXPECT_REL(*p.lower, 4.0808802290397617, 1e-12);
  EXPECT_REL(*p.upper, 12.242640687119285, 1e-12);
  EXPECT_TRUE(p.holds);
  auto c = b11_ga(cycle_graph(6));
  EXPECT_REL(*c.lower, 12 * r2, 1e-12);
  EXPECT_REL(*c.upper, 30 * r2, 1e-12);
}

TEST(B11Ga, UpperFailsOnK2_18) {
  auto r = b11_ga(complete_bipartite_graph(2, 18));
  EXPECT_REL(*r.upper, 580.39324599791821, 1e-12);
  EXPECT_REL(r.target, 651.987729945894, 1e-12);
  EXPECT_FALSE(r.holds);
  EXPECT_LT(*r.slack_upper, 0.0);
  EXPECT_GT(*r.slack_lower, 0.0);
}

TEST(B12Sdd, Examples) {
  auto c = b12_sdd(cycle_graph(6));
  EXPECT_REL(*c.lower, 12 * r2, 1e-12);
  EXPECT_REL(*c.upper, 30 * r2, 1e-12);
  auto p = b12_sdd(path_graph(4));
  EXPECT_REL(*p.lower, 4.9497474683058327, 1e-12);
  EXPECT_REL(*p.upper, 14.849242404917498, 1e-12);
  auto k = b12_sdd(complete_graph(2));
  EXPECT_REL(*k.lower, r2, 1e-15);
  EXPECT_REL(*k.upper, r2, 1e-15);
}

TEST(B13Ratio, Examples) {
  auto c = b13_ratio(cycle_graph(6), Mode::plain);
  EXPECT_REL(c.target, 1.0, 1e-15);
  EXPECT_TRUE(equality_side(c));
  auto p = b13_ratio(path_graph(4), Mode::plain);
  EXPECT_REL(p.target, 0.99373342112380038, 1e-12);
  EXPECT_TRUE(p.holds);
  auto s = b13_ratio(star_graph(10), Mode::plain);
  EXPECT_REL(s.target, 1.0, 1e-15);
  auto z = b13_ratio(cycle_graph(6), Mode::averaged);
  EXPECT_EQ(z.target, 1.0);
  EXPECT_EQ(z.detail, "SO = 0, ratio := 1");
}

TEST(Applicability, DisconnectedAndEdgeless) {
  const auto split = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  for (const auto& r : evaluate_all(split, Mode::plain)) {
    EXPECT_FALSE(r.applicable);
    EXPECT_EQ(r.reason, "graph is disconnected");
    EXPECT_TRUE(r.holds);
    EXPECT_FALSE(r.lower || r.upper);
  }
  for (const auto& r : evaluate_all(Graph::from_edge_list(1, {}), Mode::plain)) {
    EXPECT_FALSE(r.applicable);
    EXPECT_EQ(r.reason, "graph has no edges");
  }
  EXPECT_FALSE(b9_product(split, split).applicable);
}

TEST(Finish, StrictSideBoundaryAndViolation) {
  BoundReport r;
  r.applicable = true;
  r.target = 10.0;
  r.lower = 10.0 + 1e-12;
  r.strictness = Strictness::strict_lower;
  detail::finish(r, {});
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.boundary);
  EXPECT_EQ(r.reason, "boundary");
  r.reason.clear();
  r.lower = 10.0 + 1e-6;
  detail::finish(r, {});
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.boundary);
  r.strictness = Strictness::non_strict;
  r.lower = 10.0 + 5e-9;  // inside the 1e-9 * 10 band
  detail::finish(r, {});
  EXPECT_TRUE(r.holds);
  r.lower.reset();
  r.upper = 9.0;
  detail::finish(r, {});
  EXPECT_FALSE(r.holds);
  EXPECT_REL(*r.rel_slack_upper, -0.1, 1e-15);
  detail::finish(r, {0.2});
  EXPECT_TRUE(r.holds);
}

TEST(EvaluateAll, CycleSixPlain) {
  const auto rs = evaluate_all(cycle_graph(6), Mode::plain);
  ASSERT_EQ(rs.size(), 12u);
  std::size_t equal = 0;
  for (const auto& r : rs) {
    EXPECT_TRUE(r.holds) << to_string(r.id);
    if (equality_side(r)) ++equal;
  }
  EXPECT_GE(equal, 6u);
  std::vector<std::string> ids;
  for (const auto& r : rs) ids.push_back(to_string(r.id));
  EXPECT_EQ(ids, (std::vector<std::string>{"B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "B10", "B11", "B12", "B13"}));
}

TEST(EvaluateAll, K2OnlyStddevInapplicable) {
  for (const auto& r : evaluate_all(complete_graph(2), Mode::plain)) {
    EXPECT_EQ(r.applicable, r.id != BoundId::B6) << to_string(r.id);
    EXPECT_TRUE(r.holds);
  }
}

TEST(EvaluateAll, K2_18ExactlyOneViolation) {
  std::vector<BoundId> failed;
  for (const auto& r : evaluate_all(complete_bipartite_graph(2, 18), Mode::plain))
    if (!r.holds) failed.push_back(r.id);
  EXPECT_EQ(failed, std::vector<BoundId>{BoundId::B11});
}

TEST(EvaluateAll, NonPlainModesSkipDegreeBounds) {
  for (const auto& r : evaluate_all(path_graph(5), Mode::reduced)) {
    const bool plain_only = r.id == BoundId::B3 || r.id == BoundId::B10 || r.id == BoundId::B11 || r.id == BoundId::B12;
    EXPECT_EQ(r.applicable, !plain_only) << to_string(r.id);
    EXPECT_EQ(r.mode, Mode::reduced);
  }
}

TEST(EvaluateAll, Deterministic) {
  const auto g = gnp_graph(15, 0.4, 2);
  const auto a = evaluate_all(g, Mode::plain), b = evaluate_all(g, Mode::plain);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].lower, b[i].lower);
    EXPECT_EQ(a[i].upper, b[i].upper);
  }
}

TEST(BoundIds, Parsing) {
  EXPECT_EQ(parse_bound_id("B11"), BoundId::B11);
  EXPECT_EQ(parse_bound_id("b3"), BoundId::B3);
  EXPECT_THROW(parse_bound_id("B14"), input_error);
  EXPECT_THROW(parse_bound_id("B"), input_error);
  EXPECT_EQ(parse_bound_list("B11,B2,B2"), (std::vector<BoundId>{BoundId::B2, BoundId::B11}));
  EXPECT_EQ(parse_bound_list("all").size(), 12u);
  EXPECT_THROW(parse_bound_list(","), input_error);
}

// Exhaustive over connected labeled graphs with 3 <= n <= 6 in plain mode.
TEST(BoundInvariants, ExhaustiveSmallGraphs) {
  std::size_t graphs = 0;
  for (std::size_t n = 3; n <= 6; ++n) {
    for_each_labeled({n, true, std::nullopt, false}, [&](std::uint64_t, const Graph& g) {
      ++graphs;
      const BoundContext ctx(g, Mode::plain);
      for (auto id : parse_bound_list("all")) {
        const auto r = evaluate(ctx, id);
        ASSERT_TRUE(r.holds) << to_string(id) << " on " << graph6::write(g);
      }
      // B4 refines B2 by a nonnegative term
      ASSERT_GE(*b4_var_sqrt(ctx).lower, *b2_geometric(ctx).lower);
    });
  }
  EXPECT_EQ(graphs, 4u + 38u + 728u + 26704u);
}

TEST(BoundInvariants, OtherModesExhaustive) {
  for (Mode mode : {Mode::reduced, Mode::averaged})
    for (std::size_t n = 2; n <= 6; ++n)
      for_each_labeled({n, true, std::nullopt, false}, [&](std::uint64_t, const Graph& g) {
        for (const auto& r : evaluate_all(g, mode)) ASSERT_TRUE(r.holds) << to_string(r.id);
      });
}

TEST(BoundInvariants, RegularGraphsHaveEqualitySides) {
  std::vector<Graph> gs;
  for (std::size_t n = 3; n <= 10; ++n) gs.push_back(cycle_graph(n));
  for (std::size_t n = 2; n <= 10; ++n) gs.push_back(complete_graph(n));
  for (const auto& g : gs) {
    const BoundContext ctx(g, Mode::plain);
    for (auto id : {BoundId::B2, BoundId::B3, BoundId::B4, BoundId::B5, BoundId::B8, BoundId::B10, BoundId::B12}) {
      const auto r = evaluate(ctx, id);
      EXPECT_TRUE(r.holds);
      EXPECT_TRUE(equality_side(r)) << to_string(id) << " on " << graph6::write(g);
    }
  }
}

TEST(BoundInvariants, RandomGraphsHoldExceptB11Upper) {
  for (const auto& g : ::sombor::testing::random_connected_graphs(300, 2024)) {
    for (const auto& r : evaluate_all(g, Mode::plain)) {
      if (r.id == BoundId::B11) {
        ASSERT_GE(*r.slack_lower, -Tolerance{}.absolute(r.target));
        continue;
      }
      ASSERT_TRUE(r.holds) << to_string(r.id) << " on " << graph6::write(g);
    }
  }
}
