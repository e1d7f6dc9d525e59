// sombor: Sombor-index calculator and bound verifier.
//
// Exit codes: 0 clean, 2 input error, 3 at least one bound violated.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sombor/sombor.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_violation = 3;

struct Common {
  std::string format = "csv";
  std::string input_format = "graph6";
  std::string mode = "plain";
  bool strict = true;
  double tol = 1e-9;
  std::string beta = "uniform";
  std::string bounds = "all";
  std::uint64_t seed = 1;
};

void add_output_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

void add_input_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--input-format", c.input_format, "Corpus format")->check(CLI::IsMember({"graph6", "edgelist"}));
  cmd->add_flag("--strict,!--lenient", c.strict, "Abort on the first malformed record (default) or skip it");
}

void add_eval_flags(CLI::App* cmd, Common& c, bool with_mode = true) {
  if (with_mode)
    cmd->add_option("--mode", c.mode, "Degree shift")->check(CLI::IsMember({"plain", "reduced", "averaged"}));
  cmd->add_option("--tol", c.tol, "Relative tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--beta", c.beta, "B7 weight profile")->check(CLI::IsMember({"uniform", "radius-proportional"}));
  cmd->add_option("--bounds", c.bounds, "Comma-separated bound ids, or 'all'");
}

sombor::EvalOptions eval_options(const Common& c) {
  sombor::EvalOptions opt;
  opt.tol.rel = c.tol;
  opt.beta = sombor::parse_beta_profile(c.beta);
  return opt;
}

void report_issues(const sombor::CorpusReader& r) {
  for (const auto& i : r.issues()) std::cerr << "warning: " << r.source() << ": skipped: " << i.message << '\n';
}

void emit(const sombor::Table& t, const Common& c, std::ostream& os) {
  if (c.format == "json") os << sombor::to_json(t).dump(2) << '\n';
  else sombor::write_csv(os, t);
}

int cmd_indices(const std::string& input, const Common& c) {
  auto reader = sombor::CorpusReader::open(input, sombor::parse_corpus_format(c.input_format), c.strict);
  auto t = sombor::indices_table();
  while (auto rec = reader.next()) sombor::add_indices_row(t, reader.source(), rec->line_number, sombor::index_set(rec->graph));
  report_issues(reader);
  emit(t, c, std::cout);
  return exit_ok;
}

int cmd_bounds(const std::string& input, const std::string& summary_path, const Common& c) {
  const auto mode = sombor::parse_mode(c.mode);
  const auto ids = sombor::parse_bound_list(c.bounds);
  const auto opt = eval_options(c);
  auto reader = sombor::CorpusReader::open(input, sombor::parse_corpus_format(c.input_format), c.strict);
  auto t = sombor::bounds_table();
  sombor::ScanSummary summary;
  while (auto rec = reader.next()) {
    const auto g6 = sombor::graph6::write(rec->graph);
    const auto reports = sombor::evaluate_selected(rec->graph, mode, ids, opt);
    for (const auto& r : reports) sombor::add_bound_row(t, reader.source(), rec->line_number, g6, r);
    summary.add_graph(rec->source_id, [&] { return g6; }, reports, opt.tol);
  }
  report_issues(reader);
  if (c.format == "json") {
    nlohmann::json j;
    j["rows"] = sombor::to_json(t);
    j["summary"] = sombor::to_json(summary);
    std::cout << j.dump(2) << '\n';
  } else {
    sombor::write_csv(std::cout, t);
    if (!summary_path.empty()) {
      std::ofstream out(summary_path);
      if (!out) throw sombor::io_error("cannot write '" + summary_path + "'");
      out << sombor::to_json(summary).dump(2) << '\n';
    } else {
      std::cerr << sombor::to_json(summary).dump(2) << '\n';
    }
  }
  return summary.violations ? exit_violation : exit_ok;
}

// Fixed chunking keeps the merged summary independent of the worker count.
sombor::ScanSummary scan_order(std::size_t n, sombor::Mode mode, const std::vector<sombor::BoundId>& ids,
                               const sombor::EvalOptions& opt, unsigned jobs) {
  sombor::EnumSpec spec;
  spec.n = n;
  spec.connected_only = true;
  spec.allow_large = true;
  const std::uint64_t total = sombor::mask_count(n);
  const std::uint64_t chunks = std::min<std::uint64_t>(total, 256);
  const std::uint64_t step = (total + chunks - 1) / chunks;
  std::vector<sombor::ScanSummary> parts(chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t k; (k = next.fetch_add(1)) < chunks;) {
      auto& part = parts[k];
      sombor::for_each_labeled(
          spec,
          [&](std::uint64_t mask, const sombor::Graph& g) {
            const auto reports = sombor::evaluate_selected(g, mode, ids, opt);
            part.add_graph("n=" + std::to_string(n) + ",mask=" + std::to_string(mask),
                           [&] { return sombor::graph6::write(g); }, reports, opt.tol);
          },
          k * step, std::min(total, (k + 1) * step));
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  sombor::ScanSummary merged;
  for (const auto& p : parts) merged.merge(p);
  return merged;
}

int cmd_verify(std::size_t n_max, unsigned jobs, const Common& c) {
  if (n_max < sombor::enum_min_n || n_max > sombor::enum_max_n)
    throw sombor::input_error("--n-max must be in [2, 8], got " + std::to_string(n_max));
  const auto mode = sombor::parse_mode(c.mode);
  const auto ids = sombor::parse_bound_list(c.bounds);
  const auto opt = eval_options(c);
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

  sombor::ScanSummary total;
  nlohmann::json by_n = nlohmann::json::object();
  for (std::size_t n = sombor::enum_min_n; n <= n_max; ++n) {
    auto s = scan_order(n, mode, ids, opt, jobs);
    by_n[std::to_string(n)] = s.graphs_scanned;
    total.merge(s);
  }
  auto j = sombor::to_json(total);
  j["graphs_by_n"] = by_n;
  j["mode"] = c.mode;
  j["tol"] = c.tol;
  if (c.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    sombor::Table t{{"bound", "reports", "applicable", "violations", "equality_cases", "boundary_cases",
                     "min_rel_slack_lower", "mean_rel_slack_lower", "min_rel_slack_upper", "mean_rel_slack_upper",
                     "tightest_count"},
                    {}};
    for (const auto& [id, a] : total.per_bound) {
      auto h = total.tightest_bound_histogram.find(id);
      t.rows.push_back({sombor::to_string(id), (long long)a.reports, (long long)a.applicable, (long long)a.violations,
                        (long long)a.equality_cases, (long long)a.boundary_cases, sombor::cell(a.min_rel_slack_lower),
                        sombor::cell(a.mean_rel_slack_lower()), sombor::cell(a.min_rel_slack_upper),
                        sombor::cell(a.mean_rel_slack_upper()),
                        (long long)(h == total.tightest_bound_histogram.end() ? 0 : h->second)});
    }
    sombor::write_csv(std::cout, t);
    std::cerr << "graphs_scanned=" << total.graphs_scanned << " reports=" << total.reports
              << " violations=" << total.violations << " by_n=" << by_n.dump() << '\n';
  }
  return total.violations ? exit_violation : exit_ok;
}

int cmd_product(const std::string& a, const std::string& b, const Common& c) {
  const auto fmt = sombor::parse_corpus_format(c.input_format);
  auto ra = sombor::CorpusReader::open(a, fmt, c.strict);
  auto rb = sombor::CorpusReader::open(b, fmt, c.strict);
  sombor::Tolerance tol{c.tol};
  sombor::Table t{{"source_a", "line_a", "graph6_a", "source_b", "line_b", "graph6_b", "bound", "applicable", "reason",
                   "lower", "upper", "target", "slack_lower", "slack_upper", "holds"},
                  {}};
  std::size_t violations = 0;
  for (;;) {
    auto x = ra.next();
    auto y = rb.next();
    if (!x || !y) {
      if (x || y) std::cerr << "warning: corpora differ in length; extra records ignored\n";
      break;
    }
    const auto r = sombor::b9_product(x->graph, y->graph, tol);
    if (!r.holds) ++violations;
    t.rows.push_back({ra.source(), (long long)x->line_number, sombor::graph6::write(x->graph), rb.source(),
                      (long long)y->line_number, sombor::graph6::write(y->graph), sombor::to_string(r.id),
                      r.applicable, r.reason, sombor::cell(r.lower), sombor::cell(r.upper), r.target,
                      sombor::cell(r.slack_lower), sombor::cell(r.slack_upper), r.holds});
  }
  report_issues(ra);
  report_issues(rb);
  emit(t, c, std::cout);
  return violations ? exit_violation : exit_ok;
}

struct FamilyArgs {
  std::string family = "complete_bipartite";
  std::string n = "3";
  std::string a = "1";
  std::string b = "1";
  double p = 0.5;
  std::size_t trials = 1;
};

void add_family_flags(CLI::App* cmd, FamilyArgs& f, Common& c) {
  cmd->add_option("--family", f.family, "path|cycle|complete|star|complete_bipartite|gnp|random")->required();
  cmd->add_option("--n", f.n, "Vertex count or range lo..hi");
  cmd->add_option("--a", f.a, "First part size or range (complete_bipartite)");
  cmd->add_option("--b", f.b, "Second part size or range (complete_bipartite)");
  cmd->add_option("--p", f.p, "Edge probability (gnp)")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--trials", f.trials, "gnp graphs per n");
  cmd->add_option("--seed", c.seed, "gnp seed (trial t uses seed+t)");
}

sombor::HuntSpec hunt_spec(const FamilyArgs& f, const Common& c) {
  sombor::HuntSpec h;
  h.family = sombor::parse_family(f.family);
  h.n = sombor::IntRange::parse(f.n);
  h.a = sombor::IntRange::parse(f.a);
  h.b = sombor::IntRange::parse(f.b);
  h.p = f.p;
  h.seed = c.seed;
  h.trials = f.trials;
  return h;
}

int cmd_hunt(const FamilyArgs& f, const Common& c) {
  auto h = hunt_spec(f, c);
  h.bounds = sombor::parse_bound_list(c.bounds);
  h.mode = sombor::parse_mode(c.mode);
  h.eval = eval_options(c);
  auto t = sombor::hunt_table();
  const auto hits = sombor::hunt_family(h, [&](const sombor::HuntHit& hit) { sombor::add_hunt_row(t, hit); });
  emit(t, c, std::cout);
  return hits ? exit_violation : exit_ok;
}

int cmd_gen(const FamilyArgs& f, const Common& c, const std::string& out_format) {
  const auto h = hunt_spec(f, c);
  for (const auto& member : sombor::hunt_members(h)) {
    const auto g = sombor::generate(member);
    if (out_format == "edgelist") std::cout << sombor::write_edge_list(g) << '\n';
    else std::cout << sombor::graph6::write(g) << '\n';
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sombor index calculator and bound verifier"};
  app.require_subcommand(1);
  Common c;

  std::string input;
  auto* indices = app.add_subcommand("indices", "Index table for every graph in a corpus");
  indices->add_option("input", input, "Corpus path, or - for stdin")->required();
  add_input_flags(indices, c);
  add_output_flags(indices, c);

  std::string summary_path;
  auto* bounds = app.add_subcommand("bounds", "Evaluate bounds for every graph in a corpus");
  bounds->add_option("input", input, "Corpus path, or - for stdin")->required();
  bounds->add_option("--summary", summary_path, "CSV mode: write the scan summary (JSON) here instead of stderr");
  add_input_flags(bounds, c);
  add_output_flags(bounds, c);
  add_eval_flags(bounds, c);

  std::size_t n_max = 6;
  unsigned jobs = 0;
  auto* verify = app.add_subcommand("verify", "Exhaustive check over all connected labeled graphs on 2..n-max vertices");
  verify->add_option("--n-max", n_max, "Largest vertex count (2..8)");
  verify->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  add_output_flags(verify, c);
  add_eval_flags(verify, c);

  std::string input_b;
  auto* product = app.add_subcommand("product", "Two-graph product bound, pairing corpora positionally");
  product->add_option("input_a", input, "First corpus")->required();
  product->add_option("input_b", input_b, "Second corpus")->required();
  product->add_option("--tol", c.tol, "Relative tolerance")->check(CLI::PositiveNumber);
  add_input_flags(product, c);
  add_output_flags(product, c);

  FamilyArgs fam;
  auto* hunt = app.add_subcommand("hunt", "Search a graph family for bound violations");
  add_family_flags(hunt, fam, c);
  add_output_flags(hunt, c);
  add_eval_flags(hunt, c);

  std::string gen_format = "graph6";
  auto* gen = app.add_subcommand("gen", "Emit family graphs");
  add_family_flags(gen, fam, c);
  gen->add_option("--output-format", gen_format, "graph6|edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (*indices) return cmd_indices(input, c);
    if (*bounds) return cmd_bounds(input, summary_path, c);
    if (*verify) return cmd_verify(n_max, jobs, c);
    if (*product) return cmd_product(input, input_b, c);
    if (*hunt) return cmd_hunt(fam, c);
    if (*gen) return cmd_gen(fam, c, gen_format);
  } catch (const sombor::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}
