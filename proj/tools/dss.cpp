#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dscatter/bipartite.hpp"
#include "dscatter/exact.hpp"
#include "dscatter/greedy.hpp"
#include "dscatter/io.hpp"
#include "dscatter/reductions.hpp"
#include "dscatter/rho.hpp"
#include "dscatter/treewidth.hpp"

namespace {

using namespace dscatter;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

ParsedGraph load_graph(const std::string& path) { return parse_graph_text(read_input(path)); }

void fill_meta(RunReport& r, const ParsedGraph& pg, const std::string& path) {
  r.instance = path;
  r.n = pg.graph.n();
  r.m = pg.graph.m();
  r.max_degree = pg.graph.max_degree();
  r.components = static_cast<int>(connected_components(pg.graph).size());
}

std::vector<long long> label_of(const ParsedGraph& pg, const std::vector<int>& vertices) {
  std::vector<long long> out;
  for (int v : vertices) out.push_back(pg.labels[v]);
  return out;
}

std::string render(const RunReport& r, const std::string& format) {
  return (format == "pretty" ? to_pretty(r) : to_jsonl(r)) + "\n";
}

double ms_between(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

// Shared by `solve` and `bench`. Throws invalid_argument on solver
// preconditions (wrong parity, out-of-range rho, oracle cap exceeded).
RunReport solve_report(const ParsedGraph& pg, const std::string& path, int d,
                       const std::string& algo, const std::string& rho_text,
                       const std::string& rule_text, bool with_oracle, int oracle_cap,
                       bool timing) {
  ProblemInstance inst(pg.graph, d);
  RunReport r;
  r.command = "solve";
  fill_meta(r, pg, path);
  r.d = d;
  r.algo = algo;

  SolutionSet sol;
  const auto t0 = std::chrono::steady_clock::now();
  if (algo == "exact") {
    auto res = exact_bounded(inst);
    sol = std::move(res.solution);
    r.subsets_examined = res.stats.subsets_examined;
  } else if (algo == "greedy") {
    const auto rule = parse_rule(rule_text);
    if (!rule) throw std::runtime_error("unknown rule '" + rule_text + "'");
    auto res = greedy_scattered(inst, *rule);
    sol = std::move(res.solution);
    r.rule = rule_text;
  } else if (algo == "bipartite") {
    sol = bipartite_approx(inst);
  } else if (algo == "rho-even" || algo == "rho-odd") {
    if (rho_text.empty()) throw std::runtime_error("--rho is required for rho solvers");
    const Rational rho = Rational::parse(rho_text);
    auto res = algo == "rho-even" ? rho_approx_even(inst, rho) : rho_approx_odd(inst, rho);
    sol = std::move(res.solution);
    r.subsets_examined = res.stats.subsets_examined;
    r.rho = rho.str();
  } else {
    throw std::runtime_error("unknown algorithm '" + algo + "'");
  }
  if (timing) r.wall_ms = ms_between(t0, std::chrono::steady_clock::now());

  // The reported flag never trusts the solver; the set is re-checked here.
  const SolutionSet checked = is_scattered(inst, sol.vertices);
  r.solution = checked.vertices;
  r.solution_labels = label_of(pg, checked.vertices);
  r.size = checked.size();
  r.feasible = checked.certified;
  if (checked.witness) r.witness = checked.witness;
  r.upper_bound = size_upper_bound(inst);
  if (with_oracle) {
    const SolutionSet opt = brute_force_opt(inst, oracle_cap);
    r.oracle_size = opt.size();
    if (checked.size() > 0)
      r.ratio = static_cast<double>(opt.size()) / static_cast<double>(checked.size());
  }
  return r;
}

struct SolveOpts {
  std::string instance, algo, rho, rule = "min-degree-residual";
  int d = 2;
  bool with_oracle = false, timing = false;
  int oracle_cap = 22;
  std::string format = "jsonl", out;
};

struct VerifyOpts {
  std::string instance;
  int d = 2;
  std::vector<int> set;
  std::string format = "jsonl", out;
};

struct OracleOpts {
  std::string instance;
  int d = 2;
  int cap = 22;
  bool timing = false;
  std::string format = "jsonl", out;
};

struct GenerateOpts {
  std::string mode;
  int n = 0, m = 0, na = 0, nb = 0;
  std::uint64_t seed = 0;
  std::string format = "jsonl", out;
};

struct ReduceOpts {
  std::string instance, mode;
  int d = 0;
  int max_degree = 0;  // 0: derive from the source graph
  double eps1 = 1.0;
  std::uint64_t seed = 0;
  std::string with;
  int v1 = 0, v2 = 0;
  std::vector<int> cross_u, cross_w;
  std::string format = "jsonl", out;
};

struct PowerOpts {
  std::string instance;
  int q = 1;
  std::string format = "jsonl", out;
};

struct TwOpts {
  std::string instance, td;
  int d = 2;
  std::string format = "jsonl", out;
};

struct BenchOpts {
  std::string dir;
  std::vector<int> ds;
  std::vector<std::string> algos{"exact", "greedy", "bipartite", "rho-even", "rho-odd"};
  std::vector<std::string> rhos{"2"};
  std::string rule = "min-degree-residual";
  bool with_oracle = false, timing = false;
  int oracle_cap = 22;
  std::string format = "jsonl", out;
};

void deliver_report(const RunReport& r, const std::string& format, const std::string& out) {
  if (out.empty())
    std::cout << render(r, format);
  else
    write_file(out, render(r, format));
}

// generate/reduce/power/twtransform: the artifact goes to stdout unless --out
// names a file, in which case a report goes to stdout instead.
void deliver_artifact(const std::string& artifact, RunReport r, const std::string& format,
                      const std::string& out) {
  if (out.empty()) {
    std::cout << artifact;
    return;
  }
  write_file(out, artifact);
  r.out_path = out;
  std::cout << render(r, format);
}

int do_solve(const SolveOpts& o) {
  const ParsedGraph pg = load_graph(o.instance);
  const RunReport r = solve_report(pg, o.instance, o.d, o.algo, o.rho, o.rule, o.with_oracle,
                                   o.oracle_cap, o.timing);
  deliver_report(r, o.format, o.out);
  return 0;
}

int do_verify(const VerifyOpts& o) {
  const ParsedGraph pg = load_graph(o.instance);
  const ProblemInstance inst(pg.graph, o.d);
  const SolutionSet res = is_scattered(inst, o.set);
  RunReport r;
  r.command = "verify";
  fill_meta(r, pg, o.instance);
  r.d = o.d;
  r.solution = res.vertices;
  r.solution_labels = label_of(pg, res.vertices);
  r.size = res.size();
  r.feasible = res.certified;
  if (res.witness) r.witness = res.witness;
  deliver_report(r, o.format, o.out);
  return res.certified ? 0 : 3;
}

int do_oracle(const OracleOpts& o) {
  const ParsedGraph pg = load_graph(o.instance);
  const ProblemInstance inst(pg.graph, o.d);
  RunReport r;
  r.command = "oracle";
  fill_meta(r, pg, o.instance);
  r.d = o.d;
  const auto t0 = std::chrono::steady_clock::now();
  const SolutionSet opt = brute_force_opt(inst, o.cap);
  if (o.timing) r.wall_ms = ms_between(t0, std::chrono::steady_clock::now());
  const SolutionSet checked = is_scattered(inst, opt.vertices);
  r.solution = checked.vertices;
  r.solution_labels = label_of(pg, checked.vertices);
  r.size = checked.size();
  r.feasible = checked.certified;
  r.upper_bound = size_upper_bound(inst);
  deliver_report(r, o.format, o.out);
  return 0;
}

int do_generate(const GenerateOpts& o) {
  Graph g;
  std::ostringstream tag;
  if (o.mode == "cycle-matching") {
    g = cycle_plus_matching(o.n, o.seed);
    tag << "cycle-matching n=" << o.n;
  } else if (o.mode == "gnm") {
    g = random_gnm_graph(o.n, o.m, o.seed);
    tag << "gnm n=" << o.n << " m=" << o.m;
  } else if (o.mode == "connected") {
    g = random_connected_graph(o.n, o.m, o.seed);
    tag << "connected n=" << o.n << " m=" << o.m;
  } else if (o.mode == "bipartite") {
    g = random_bipartite_graph(o.na, o.nb, o.m, o.seed);
    tag << "bipartite na=" << o.na << " nb=" << o.nb << " m=" << o.m;
  } else {
    throw std::runtime_error("unknown mode '" + o.mode + "'");
  }
  tag << " seed=" << o.seed;
  const std::string artifact = serialize_graph(g, nullptr, {tag.str()});
  RunReport r;
  r.command = "generate";
  r.algo = o.mode;
  r.seed = o.seed;
  r.product_n = g.n();
  r.product_m = g.m();
  deliver_artifact(artifact, std::move(r), o.format, o.out);
  return 0;
}

int do_reduce(const ReduceOpts& o) {
  const ParsedGraph pg = load_graph(o.instance);
  RunReport r;
  r.command = "reduce";
  fill_meta(r, pg, o.instance);
  r.algo = o.mode;

  Graph product;
  std::string tag;
  if (o.mode == "is-even" || o.mode == "is-odd") {
    if (o.d == 0) throw std::runtime_error("--d is required for is-even / is-odd");
    const ReductionResult res =
        o.mode == "is-even" ? reduce_is_even(pg.graph, o.d) : reduce_is_odd(pg.graph, o.d);
    product = res.graph;
    r.d = o.d;
    r.vertex_map = res.certificate.vertex_map;
    r.relation = res.certificate.relation;
    tag = o.mode + " d=" + std::to_string(o.d);
  } else if (o.mode == "gadget") {
    if (o.d == 0) throw std::runtime_error("--d is required for gadget");
    GadgetConfig cfg;
    cfg.d = o.d;
    cfg.max_degree = o.max_degree > 0 ? o.max_degree : std::max(2, pg.graph.max_degree());
    cfg.epsilon1 = o.eps1;
    cfg.seed = o.seed;
    const GadgetInstance res = gadget_tree_instance(pg.graph, cfg);
    product = res.graph;
    r.d = o.d;
    r.seed = o.seed;
    r.vertex_map = res.certificate.vertex_map;
    r.relation = res.certificate.relation;
    tag = "gadget d=" + std::to_string(o.d) + " max-degree=" + std::to_string(cfg.max_degree) +
          " seed=" + std::to_string(o.seed);
  } else if (o.mode == "merge") {
    if (o.with.empty()) throw std::runtime_error("--with is required for merge");
    const ParsedGraph other = load_graph(o.with);
    product = merge_graphs(pg.graph, other.graph, o.v1, o.v2, o.cross_u, o.cross_w);
    tag = "merge v1=" + std::to_string(o.v1) + " v2=" + std::to_string(o.v2);
  } else {
    throw std::runtime_error("unknown mode '" + o.mode + "'");
  }
  r.product_n = product.n();
  r.product_m = product.m();
  deliver_artifact(serialize_graph(product, nullptr, {tag}), std::move(r), o.format, o.out);
  return 0;
}

int do_power(const PowerOpts& o) {
  const ParsedGraph pg = load_graph(o.instance);
  const Graph gp = power_graph(pg.graph, o.q);
  RunReport r;
  r.command = "power";
  fill_meta(r, pg, o.instance);
  r.product_n = gp.n();
  r.product_m = gp.m();
  const std::string tag = "power q=" + std::to_string(o.q);
  deliver_artifact(serialize_graph(gp, &pg.labels, {tag}), std::move(r), o.format, o.out);
  return 0;
}

int do_twtransform(const TwOpts& o) {
  const ParsedGraph pg = load_graph(o.instance);
  const TreeDecomposition before =
      o.td.empty() ? min_degree_decomposition(pg.graph)
                   : parse_decomposition_text(read_input(o.td), &pg.labels);
  const TreeDecomposition after = power_decomposition(pg.graph, before, o.d);
  const Graph gp = power_graph(pg.graph, o.d);
  RunReport r;
  r.command = "twtransform";
  fill_meta(r, pg, o.instance);
  r.d = o.d;
  r.width_in = before.width();
  r.width_out = after.width();
  r.valid = !validate_decomposition(gp, after).has_value();
  deliver_artifact(serialize_decomposition(after, &pg.labels), std::move(r), o.format, o.out);
  return 0;
}

int do_bench(const BenchOpts& o) {
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(o.dir))
    if (entry.is_regular_file()) files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());

  std::ostringstream lines;
  for (const auto& path : files) {
    const ParsedGraph pg = load_graph(path);
    for (int d : o.ds) {
      for (const auto& algo : o.algos) {
        const bool swept = algo == "rho-even" || algo == "rho-odd";
        const std::vector<std::string> rho_grid = swept ? o.rhos : std::vector<std::string>{""};
        for (const auto& rho : rho_grid) {
          try {
            RunReport r = solve_report(pg, path, d, algo, rho, o.rule, o.with_oracle,
                                       o.oracle_cap, o.timing);
            r.command = "bench";
            lines << render(r, o.format);
          } catch (const std::invalid_argument&) {
            // Incompatible (algo, d, instance) cell; the sweep moves on.
          }
        }
      }
    }
  }
  if (o.out.empty())
    std::cout << lines.str();
  else
    write_file(o.out, lines.str());
  return 0;
}

void add_format_flags(CLI::App* cmd, std::string& format, std::string& out) {
  cmd->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"jsonl", "pretty"}));
  cmd->add_option("--out", out, "write output to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"d-scattered set solvers, generators and checkers"};
  app.require_subcommand(1);

  SolveOpts so;
  auto* solve = app.add_subcommand("solve", "run a solver on an instance");
  solve->add_option("instance", so.instance, "graph file or '-'")->required();
  solve->add_option("--d", so.d, "required pairwise distance")->required()->check(CLI::Range(2, 1 << 20));
  solve->add_option("--algo", so.algo, "solver")
      ->required()
      ->check(CLI::IsMember({"exact", "greedy", "bipartite", "rho-even", "rho-odd"}));
  solve->add_option("--rho", so.rho, "trade-off parameter, e.g. 2, 1.5 or 3/2");
  solve->add_option("--rule", so.rule, "greedy selection rule")
      ->check(CLI::IsMember({"min-degree-residual", "min-degree-static", "first-id"}));
  solve->add_flag("--with-oracle", so.with_oracle, "also run the exhaustive oracle");
  solve->add_option("--oracle-cap", so.oracle_cap, "oracle size refusal threshold");
  solve->add_flag("--timing", so.timing, "include wall time in the report");
  add_format_flags(solve, so.format, so.out);

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "check a vertex set");
  verify->add_option("instance", vo.instance)->required();
  verify->add_option("--d", vo.d)->required()->check(CLI::Range(2, 1 << 20));
  verify->add_option("--set", vo.set, "comma-separated 0-based vertex ids")
      ->required()
      ->delimiter(',');
  add_format_flags(verify, vo.format, vo.out);

  OracleOpts oo;
  auto* oracle = app.add_subcommand("oracle", "exhaustive optimum on a small instance");
  oracle->add_option("instance", oo.instance)->required();
  oracle->add_option("--d", oo.d)->required()->check(CLI::Range(2, 1 << 20));
  oracle->add_option("--oracle-cap", oo.cap);
  oracle->add_flag("--timing", oo.timing);
  add_format_flags(oracle, oo.format, oo.out);

  GenerateOpts go;
  auto* generate = app.add_subcommand("generate", "emit a seeded random instance");
  generate->add_option("--mode", go.mode)
      ->required()
      ->check(CLI::IsMember({"cycle-matching", "gnm", "connected", "bipartite"}));
  generate->add_option("--n", go.n);
  generate->add_option("--m", go.m);
  generate->add_option("--na", go.na);
  generate->add_option("--nb", go.nb);
  generate->add_option("--seed", go.seed)->required();
  add_format_flags(generate, go.format, go.out);

  ReduceOpts ro;
  auto* reduce = app.add_subcommand("reduce", "build a product instance from a source graph");
  reduce->add_option("instance", ro.instance)->required();
  reduce->add_option("--mode", ro.mode)
      ->required()
      ->check(CLI::IsMember({"is-even", "is-odd", "gadget", "merge"}));
  reduce->add_option("--d", ro.d);
  reduce->add_option("--max-degree", ro.max_degree);
  reduce->add_option("--eps1", ro.eps1);
  reduce->add_option("--seed", ro.seed);
  reduce->add_option("--with", ro.with, "second graph for merge");
  reduce->add_option("--v1", ro.v1);
  reduce->add_option("--v2", ro.v2);
  reduce->add_option("--cross-u", ro.cross_u)->delimiter(',');
  reduce->add_option("--cross-w", ro.cross_w)->delimiter(',');
  add_format_flags(reduce, ro.format, ro.out);

  PowerOpts po;
  auto* power = app.add_subcommand("power", "emit the q-th power graph");
  power->add_option("instance", po.instance)->required();
  power->add_option("--q", po.q)->required()->check(CLI::Range(1, 1 << 20));
  add_format_flags(power, po.format, po.out);

  TwOpts to;
  auto* tw = app.add_subcommand("twtransform", "expand a tree decomposition for the d-th power");
  tw->add_option("instance", to.instance)->required();
  tw->add_option("--d", to.d)->required()->check(CLI::Range(2, 1 << 20));
  tw->add_option("--td", to.td, "input decomposition file (heuristic if omitted)");
  add_format_flags(tw, to.format, to.out);

  BenchOpts bo;
  auto* bench = app.add_subcommand("bench", "sweep solvers over an instance directory");
  bench->add_option("--dir", bo.dir)->required();
  bench->add_option("--d", bo.ds)->required()->delimiter(',');
  bench->add_option("--algo", bo.algos)->delimiter(',');
  bench->add_option("--rho", bo.rhos)->delimiter(',');
  bench->add_option("--rule", bo.rule)
      ->check(CLI::IsMember({"min-degree-residual", "min-degree-static", "first-id"}));
  bench->add_flag("--with-oracle", bo.with_oracle);
  bench->add_option("--oracle-cap", bo.oracle_cap);
  bench->add_flag("--timing", bo.timing);
  add_format_flags(bench, bo.format, bo.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return do_solve(so);
    if (verify->parsed()) return do_verify(vo);
    if (oracle->parsed()) return do_oracle(oo);
    if (generate->parsed()) return do_generate(go);
    if (reduce->parsed()) return do_reduce(ro);
    if (power->parsed()) return do_power(po);
    if (tw->parsed()) return do_twtransform(to);
    if (bench->parsed()) return do_bench(bo);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
