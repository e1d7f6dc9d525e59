#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "sombor/bounds.hpp"
#include "sombor/enumerate.hpp"
#include "sombor/indices.hpp"

namespace sombor {

// 17 significant digits: enough for an exact double round trip.
inline std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

using Cell = std::variant<std::monostate, std::string, double, long long, bool>;

inline Cell cell(std::optional<double> v) { return v ? Cell{*v} : Cell{}; }

// Column-oriented output shared by the CSV and JSON writers.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string cell_text(const Cell& c) {
  struct V {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const { return csv_escape(s); }
    std::string operator()(double d) const { return format_number(d); }
    std::string operator()(long long i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(V{}, c);
}

inline void write_csv(std::ostream& os, const Table& t, bool header = true) {
  if (header) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
  }
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
}

inline nlohmann::json cell_json(const Cell& c) {
  struct V {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(const std::string& s) const { return s; }
    nlohmann::json operator()(double d) const { return d; }
    nlohmann::json operator()(long long i) const { return i; }
    nlohmann::json operator()(bool b) const { return b; }
  };
  return std::visit(V{}, c);
}

inline nlohmann::json to_json(const Table& t) {
  auto arr = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json o = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) o[t.columns[i]] = cell_json(row[i]);
    arr.push_back(std::move(o));
  }
  return arr;
}

// --- indices ---------------------------------------------------------------

inline Table indices_table() {
  return {{"source", "line", "n", "m", "min_degree", "max_degree", "so", "so_red", "so_ave", "forgotten", "ag", "ga",
           "sdd"},
          {}};
}

inline void add_indices_row(Table& t, const std::string& source, std::size_t line, const IndexSet& s) {
  t.rows.push_back({source, (long long)line, (long long)s.n, (long long)s.m, (long long)s.min_degree,
                    (long long)s.max_degree, s.so, s.so_red, s.so_ave, s.forgotten, s.ag, s.ga, s.sdd});
}

// --- bound reports ---------------------------------------------------------

inline Table bounds_table() {
  return {{"source", "line", "graph6", "bound", "mode", "applicable", "reason", "lower", "upper", "target",
           "slack_lower", "slack_upper", "rel_slack_lower", "rel_slack_upper", "holds", "strictness", "boundary",
           "best_case_lower", "detail"},
          {}};
}

inline void add_bound_row(Table& t, const std::string& source, std::size_t line, const std::string& g6,
                          const BoundReport& r) {
  t.rows.push_back({source, (long long)line, g6, to_string(r.id), std::string(to_string(r.mode)), r.applicable,
                    r.reason, cell(r.lower), cell(r.upper), r.target, cell(r.slack_lower), cell(r.slack_upper),
                    cell(r.rel_slack_lower), cell(r.rel_slack_upper), r.holds, std::string(to_string(r.strictness)),
                    r.boundary, cell(r.best_case_lower), r.detail});
}

inline Table hunt_table() {
  return {{"family", "params", "graph6", "bound", "mode", "lower", "upper", "target", "slack_lower", "slack_upper",
           "detail"},
          {}};
}

inline void add_hunt_row(Table& t, const HuntHit& h) {
  t.rows.push_back({std::string(to_string(h.params.family)), h.graph_id, h.certificate, to_string(h.report.id),
                    std::string(to_string(h.report.mode)), cell(h.report.lower), cell(h.report.upper),
                    h.report.target, cell(h.report.slack_lower), cell(h.report.slack_upper), h.report.detail});
}

// --- scan summary ----------------------------------------------------------

struct BoundAggregate {
  std::size_t reports = 0;
  std::size_t applicable = 0;
  std::size_t violations = 0;
  std::size_t equality_cases = 0;
  std::size_t boundary_cases = 0;
  std::optional<double> min_rel_slack_lower;
  std::optional<double> min_rel_slack_upper;
  double sum_rel_slack_lower = 0.0;
  double sum_rel_slack_upper = 0.0;
  std::size_t count_rel_slack_lower = 0;
  std::size_t count_rel_slack_upper = 0;

  std::optional<double> mean_rel_slack_lower() const {
    if (!count_rel_slack_lower) return std::nullopt;
    return sum_rel_slack_lower / double(count_rel_slack_lower);
  }
  std::optional<double> mean_rel_slack_upper() const {
    if (!count_rel_slack_upper) return std::nullopt;
    return sum_rel_slack_upper / double(count_rel_slack_upper);
  }
};

struct ViolationRecord {
  std::string graph_id;
  std::string certificate;
  BoundReport report;
};

struct ScanSummary {
  std::size_t graphs_scanned = 0;
  std::size_t reports = 0;
  std::size_t violations = 0;
  std::map<BoundId, BoundAggregate> per_bound;
  std::map<BoundId, std::size_t> tightest_bound_histogram;
  // Report-only nesting statistics between the m R_g refinements.
  std::size_t nesting_checked = 0;
  std::size_t nesting_b4_below_b2 = 0;
  std::size_t nesting_b5_below_b4 = 0;
  std::vector<ViolationRecord> first_violations;
  std::size_t max_recorded_violations = 20;

  // Folds one graph's reports. cert is produced lazily, only when a violation needs it.
  template <class CertFn>
  void add_graph(const std::string& graph_id, CertFn&& cert, std::span<const BoundReport> rs, const Tolerance& tol) {
    ++graphs_scanned;
    std::optional<BoundId> tight;
    double tight_metric = std::numeric_limits<double>::infinity();
    std::optional<double> b2, b4, b5;
    std::optional<std::string> cert_text;
    for (const auto& r : rs) {
      ++reports;
      auto& agg = per_bound[r.id];
      ++agg.reports;
      if (!r.applicable) continue;
      ++agg.applicable;
      if (!r.holds) {
        ++violations;
        ++agg.violations;
        if (first_violations.size() < max_recorded_violations) {
          if (!cert_text) cert_text = cert();
          first_violations.push_back({graph_id, *cert_text, r});
        }
      }
      if (r.boundary) ++agg.boundary_cases;
      const double eps = tol.absolute(r.target);
      if ((r.slack_lower && std::abs(*r.slack_lower) <= eps) || (r.slack_upper && std::abs(*r.slack_upper) <= eps))
        ++agg.equality_cases;
      if (r.rel_slack_lower) {
        agg.min_rel_slack_lower = std::min(agg.min_rel_slack_lower.value_or(*r.rel_slack_lower), *r.rel_slack_lower);
        agg.sum_rel_slack_lower += *r.rel_slack_lower;
        ++agg.count_rel_slack_lower;
      }
      if (r.rel_slack_upper) {
        agg.min_rel_slack_upper = std::min(agg.min_rel_slack_upper.value_or(*r.rel_slack_upper), *r.rel_slack_upper);
        agg.sum_rel_slack_upper += *r.rel_slack_upper;
        ++agg.count_rel_slack_upper;
      }
      if (r.slack_lower) {
        // relative slack when defined, absolute when the target is 0
        const double metric = r.rel_slack_lower.value_or(*r.slack_lower);
        if (metric < tight_metric) {
          tight_metric = metric;
          tight = r.id;
        }
      }
      if (r.id == BoundId::B2) b2 = r.lower;
      if (r.id == BoundId::B4) b4 = r.lower;
      if (r.id == BoundId::B5) b5 = r.lower;
    }
    if (tight) ++tightest_bound_histogram[*tight];
    if (b2 && b4 && b5) {
      ++nesting_checked;
      const double eps = tol.absolute(*b5);
      if (*b4 < *b2 - eps) ++nesting_b4_below_b2;
      if (*b5 < *b4 - eps) ++nesting_b5_below_b4;
    }
  }

  // Appends a later partition's results; call in ascending partition order.
  void merge(const ScanSummary& o) {
    graphs_scanned += o.graphs_scanned;
    reports += o.reports;
    violations += o.violations;
    for (const auto& [id, a] : o.per_bound) {
      auto& x = per_bound[id];
      x.reports += a.reports;
      x.applicable += a.applicable;
      x.violations += a.violations;
      x.equality_cases += a.equality_cases;
      x.boundary_cases += a.boundary_cases;
      if (a.min_rel_slack_lower)
        x.min_rel_slack_lower = std::min(x.min_rel_slack_lower.value_or(*a.min_rel_slack_lower), *a.min_rel_slack_lower);
      if (a.min_rel_slack_upper)
        x.min_rel_slack_upper = std::min(x.min_rel_slack_upper.value_or(*a.min_rel_slack_upper), *a.min_rel_slack_upper);
      x.sum_rel_slack_lower += a.sum_rel_slack_lower;
      x.sum_rel_slack_upper += a.sum_rel_slack_upper;
      x.count_rel_slack_lower += a.count_rel_slack_lower;
      x.count_rel_slack_upper += a.count_rel_slack_upper;
    }
    for (const auto& [id, c] : o.tightest_bound_histogram) tightest_bound_histogram[id] += c;
    nesting_checked += o.nesting_checked;
    nesting_b4_below_b2 += o.nesting_b4_below_b2;
    nesting_b5_below_b4 += o.nesting_b5_below_b4;
    for (const auto& v : o.first_violations)
      if (first_violations.size() < max_recorded_violations) first_violations.push_back(v);
  }

  std::size_t violations_for(BoundId id) const {
    auto it = per_bound.find(id);
    return it == per_bound.end() ? 0 : it->second.violations;
  }
};

inline nlohmann::json to_json(const ScanSummary& s) {
  auto opt = [](std::optional<double> v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  nlohmann::json j;
  j["graphs_scanned"] = s.graphs_scanned;
  j["reports"] = s.reports;
  j["violations"] = s.violations;
  auto per = nlohmann::json::object();
  for (const auto& [id, a] : s.per_bound) {
    per[to_string(id)] = {{"reports", a.reports},
                          {"applicable", a.applicable},
                          {"violations", a.violations},
                          {"equality_cases", a.equality_cases},
                          {"boundary_cases", a.boundary_cases},
                          {"min_rel_slack_lower", opt(a.min_rel_slack_lower)},
                          {"mean_rel_slack_lower", opt(a.mean_rel_slack_lower())},
                          {"min_rel_slack_upper", opt(a.min_rel_slack_upper)},
                          {"mean_rel_slack_upper", opt(a.mean_rel_slack_upper())}};
  }
  j["per_bound"] = per;
  auto hist = nlohmann::json::object();
  for (const auto& [id, c] : s.tightest_bound_histogram) hist[to_string(id)] = c;
  j["tightest_bound_histogram"] = hist;
  j["nesting"] = {{"checked", s.nesting_checked},
                  {"b4_below_b2", s.nesting_b4_below_b2},
                  {"b5_below_b4", s.nesting_b5_below_b4}};
  auto viol = nlohmann::json::array();
  for (const auto& v : s.first_violations) {
    viol.push_back({{"graph", v.graph_id},
                    {"graph6", v.certificate},
                    {"bound", to_string(v.report.id)},
                    {"lower", opt(v.report.lower)},
                    {"upper", opt(v.report.upper)},
                    {"target", v.report.target}});
  }
  j["first_violations"] = viol;
  return j;
}

}  // namespace sombor
