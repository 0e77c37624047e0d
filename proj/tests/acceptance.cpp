// Release gate: one test case per shipping criterion. Each case sweeps its
// instance family through an accumulator and prints a single summary line
// ("[acceptance] criterion N ... PASS/FAIL"), keeping the first few
// counterexamples verbatim when something breaks.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "dscatter/bipartite.hpp"
#include "dscatter/exact.hpp"
#include "dscatter/feasibility.hpp"
#include "dscatter/graph.hpp"
#include "dscatter/greedy.hpp"
#include "dscatter/io.hpp"
#include "dscatter/reductions.hpp"
#include "dscatter/rho.hpp"
#include "dscatter/treewidth.hpp"
#include "helpers.hpp"

namespace {

using namespace dscatter;

struct Criterion {
  Criterion(int id_, std::string name_) : id(id_), name(std::move(name_)) {}

  int id;
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> samples;
  std::string note;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  void check(bool ok, auto&& detail) {
    ++checks;
    if (ok) return;
    ++failed;
    if (samples.size() < 4) samples.push_back(detail());
  }

  void report() {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::ostringstream line;
    line << "[acceptance] criterion " << id << " (" << name << "): "
         << (failed == 0 ? "PASS" : "FAIL") << " - " << checks << " checks";
    if (failed > 0) line << ", " << failed << " failed";
    if (!note.empty()) line << "; " << note;
    line << " [" << std::fixed << std::setprecision(1) << secs << "s]";
    std::printf("%s\n", line.str().c_str());
    for (const auto& s : samples) std::printf("  counterexample: %s\n", s.c_str());
    std::fflush(stdout);
    CHECK_MESSAGE(failed == 0, line.str());
  }
};

std::string show(const Graph& g, int d) {
  std::ostringstream s;
  s << "n=" << g.n() << " d=" << d << " edges={";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) s << ",";
    first = false;
    s << "(" << u << "," << v << ")";
  }
  s << "}";
  return s.str();
}

int sweep_opt(const std::vector<std::vector<int>>& dist, int d) {
  const int n = static_cast<int>(dist.size());
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
    if (testutil::mask_feasible(dist, mask, d)) best = std::max(best, __builtin_popcount(mask));
  return best;
}

struct FamilyEntry {
  Graph g;
  std::vector<std::vector<int>> dist;
  std::array<int, 4> opt{};  // exhaustive optimum for d = 3..6
};

// Shared pool for the first three criteria and the ratio sweep: every
// labeled connected graph on up to six vertices plus 200 seeded random
// connected graphs on 7..14 vertices with at least n edges' worth of slack.
const std::vector<FamilyEntry>& shared_family() {
  static const std::vector<FamilyEntry> pool = [] {
    std::vector<FamilyEntry> out;
    auto add = [&](Graph g) {
      FamilyEntry e;
      e.dist = testutil::fw_distances(g);
      for (int d = 3; d <= 6; ++d) e.opt[d - 3] = sweep_opt(e.dist, d);
      e.g = std::move(g);
      out.push_back(std::move(e));
    };
    for (int n = 1; n <= 6; ++n)
      for (auto& g : testutil::all_connected_graphs(n)) add(std::move(g));
    for (int i = 0; i < 200; ++i) {
      const int n = 7 + i % 8;
      const int cap = n * (n - 1) / 2;
      const int m = n - 1 + static_cast<int>((37LL * i) % (cap - n + 2));
      add(random_connected_graph(n, m, 4242 + i));
    }
    return out;
  }();
  return pool;
}

bool pairwise_at_least(const std::vector<std::vector<int>>& dist, const std::vector<int>& s,
                       int d) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (dist[s[i]][s[j]] < d) return false;
  return true;
}

std::uint64_t subsets_up_to(int n, int b) {
  std::uint64_t total = 0, binom = 1;
  b = std::min(b, n);
  for (int i = 1; i <= b; ++i) {
    binom = binom * static_cast<std::uint64_t>(n - i + 1) / static_cast<std::uint64_t>(i);
    total += binom;
  }
  return total;
}

TEST_CASE("exact solvers agree with the exhaustive oracle") {
  Criterion c{1, "exact matches oracle"};
  for (const auto& e : shared_family()) {
    for (int d = 3; d <= 6; ++d) {
      const ProblemInstance inst(e.g, d);
      const int opt = e.opt[d - 3];
      const ExactResult bounded = exact_bounded(inst);
      c.check(bounded.solution.certified && bounded.solution.size() == opt, [&] {
        return show(e.g, d) + ": bounded search found " +
               std::to_string(bounded.solution.size()) + ", oracle " + std::to_string(opt);
      });
      const SolutionSet brute = brute_force_opt(inst, 22);
      c.check(brute.certified && brute.size() == opt, [&] {
        return show(e.g, d) + ": mask search found " + std::to_string(brute.size()) +
               ", oracle " + std::to_string(opt);
      });
    }
  }
  c.report();
}

TEST_CASE("optimum sizes respect the per-component bound") {
  Criterion c{2, "component size bound"};
  std::uint64_t raw = 0, clamped_only = 0;
  for (const auto& e : shared_family()) {
    const int n = e.g.n();  // the family is connected: one component
    for (int d = 3; d <= 6; ++d) {
      const int half = d / 2;
      const int opt = e.opt[d - 3];
      c.check(opt <= std::max(1, n / half), [&] {
        return show(e.g, d) + ": optimum " + std::to_string(opt) + " above max(1, n/" +
               std::to_string(half) + ")";
      });
      if (n >= half) {
        ++raw;
        c.check(opt <= n / half, [&] {
          return show(e.g, d) + ": optimum " + std::to_string(opt) + " above n/" +
                 std::to_string(half);
        });
      } else {
        ++clamped_only;  // a one- or two-vertex graph still holds one pick
      }
      c.check(opt <= size_upper_bound(ProblemInstance(e.g, d)), [&] {
        return show(e.g, d) + ": optimum exceeds size_upper_bound";
      });
    }
  }
  std::ostringstream note;
  note << "plain floor bound on " << raw << " instances, clamped form only on " << clamped_only
       << " with fewer than floor(d/2) vertices";
  c.note = note.str();
  c.report();
}

TEST_CASE("greedy stays within its degree-based ratio") {
  Criterion c{3, "greedy ratio"};
  constexpr std::array<SelectionRule, 3> rules{SelectionRule::kMinDegreeResidual,
                                              SelectionRule::kMinDegreeStatic,
                                              SelectionRule::kFirstId};
  for (const auto& e : shared_family()) {
    for (int d = 3; d <= 6; ++d) {
      const ProblemInstance inst(e.g, d);
      const int opt = e.opt[d - 3];
      long long factor = 1;
      for (int i = 0; i < d / 2; ++i) factor *= e.g.max_degree();
      factor += 1;  // 1 + max_degree^floor(d/2)
      for (SelectionRule rule : rules) {
        const GreedyResult res = greedy_scattered(inst, rule);
        c.check(res.solution.certified &&
                    pairwise_at_least(e.dist, res.solution.vertices, d),
                [&] { return show(e.g, d) + ": infeasible greedy output (" +
                             to_string(rule) + ")"; });
        c.check(opt <= factor * res.solution.size(), [&] {
          return show(e.g, d) + " rule=" + to_string(rule) + ": optimum " +
                 std::to_string(opt) + " > " + std::to_string(factor) + " * " +
                 std::to_string(res.solution.size());
        });
      }
    }
  }
  c.report();
}

TEST_CASE("set packing view matches one-sided scattered sets") {
  Criterion c{4, "packing correspondence"};
  std::vector<Graph> graphs;
  for (int n = 2; n <= 12; ++n) graphs.push_back(path_graph(n));
  for (int n = 4; n <= 12; n += 2) graphs.push_back(cycle_graph(n));
  for (int leaves = 1; leaves <= 11; ++leaves) graphs.push_back(star_graph(leaves));
  for (int a = 1; a <= 6; ++a) {
    for (int b = a; b <= 6 && a + b <= 12; ++b) {
      std::vector<Edge> edges;
      for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
      graphs.emplace_back(a + b, edges);
    }
  }
  for (int i = 0; i < 40; ++i) {
    const int na = 1 + i % 6, nb = 1 + (i / 6) % 6;
    graphs.push_back(random_bipartite_graph(na, nb, (5 * i) % (na * nb + 1), 7000 + i));
  }
  for (const auto& g : graphs) {
    const auto sides = bipartition(g);
    REQUIRE(sides.has_value());
    const auto dist = testutil::fw_distances(g);
    for (int d : {4, 6}) {
      const ProblemInstance inst(g, d);
      for (int role = 0; role < 2; ++role) {
        const auto& tag_side = role == 0 ? sides->side_a : sides->side_b;
        const auto& other_side = role == 0 ? sides->side_b : sides->side_a;
        const SetPackingInstance sp = build_set_packing(inst, tag_side, other_side);
        const int k = static_cast<int>(sp.sets.size());
        std::vector<std::vector<char>> share(k, std::vector<char>(k, 0));
        for (int i = 0; i < k; ++i) {
          for (int j = i + 1; j < k; ++j) {
            const auto& a = sp.sets[i].elements;
            const auto& b = sp.sets[j].elements;
            std::size_t x = 0, y = 0;
            while (x < a.size() && y < b.size() && !share[i][j]) {
              if (a[x] == b[y]) share[i][j] = share[j][i] = 1;
              else if (a[x] < b[y]) ++x;
              else ++y;
            }
          }
        }
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
          bool disjoint = true, scattered = true;
          for (int i = 0; i < k && (disjoint || scattered); ++i) {
            if (!(mask >> i & 1)) continue;
            for (int j = i + 1; j < k; ++j) {
              if (!(mask >> j & 1)) continue;
              if (share[i][j]) disjoint = false;
              if (dist[sp.sets[i].tag][sp.sets[j].tag] < d) scattered = false;
            }
          }
          c.check(disjoint == scattered, [&] {
            std::ostringstream s;
            s << show(g, d) << " role=" << role << " tags={";
            for (int i = 0; i < k; ++i)
              if (mask >> i & 1) s << sp.sets[i].tag << " ";
            s << "}: disjoint=" << disjoint << " scattered=" << scattered;
            return s.str();
          });
        }
      }
    }
  }
  c.report();
}

TEST_CASE("bipartite solver meets its guarantee end to end") {
  Criterion c{5, "bipartite guarantee"};
  for (int i = 0; i < 100; ++i) {
    const int na = 2 + i % 7, nb = 2 + (i / 7) % 7;
    const int m = (13 * i) % (na * nb + 1);
    const Graph g = random_bipartite_graph(na, nb, m, 9000 + i);
    const int d = i % 2 == 0 ? 4 : 6;
    const SolutionSet sol = bipartite_approx(ProblemInstance(g, d));
    const auto dist = testutil::fw_distances(g);
    c.check(sol.certified && pairwise_at_least(dist, sol.vertices, d),
            [&] { return show(g, d) + ": infeasible output"; });
    const int opt = sweep_opt(dist, d);
    // size >= ceil(opt / (2 sqrt(n))), squared to stay in integers
    c.check(4LL * sol.size() * sol.size() * g.n() >= 1LL * opt * opt, [&] {
      return show(g, d) + ": size " + std::to_string(sol.size()) + " too small for optimum " +
             std::to_string(opt);
    });
  }
  c.report();
}

TEST_CASE("scatteredness transfers to the power graph") {
  Criterion c{6, "power equivalence"};
  std::vector<Graph> graphs;
  for (int n = 2; n <= 12; ++n) graphs.push_back(path_graph(n));
  for (int n = 3; n <= 12; ++n) graphs.push_back(cycle_graph(n));
  for (int leaves = 2; leaves <= 11; ++leaves) graphs.push_back(star_graph(leaves));
  for (int i = 0; i < 25; ++i) {
    const int n = 6 + i % 7;
    const int cap = n * (n - 1) / 2;
    graphs.push_back(random_gnm_graph(n, (7 * i) % (cap + 1), 10000 + i));
  }
  for (const auto& g : graphs) {
    const auto dg = testutil::fw_distances(g);
    const int n = g.n();
    for (int d : {3, 5, 7}) {
      const auto dp = testutil::fw_distances(power_graph(g, (d - 1) / 2));
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) > 4) continue;
        c.check(testutil::mask_feasible(dg, mask, d) == testutil::mask_feasible(dp, mask, 3),
                [&] {
                  std::ostringstream s;
                  s << show(g, d) << " subset={";
                  for (int v = 0; v < n; ++v)
                    if (mask >> v & 1) s << v << " ";
                  s << "}";
                  return s.str();
                });
      }
    }
  }
  c.report();
}

TEST_CASE("rho solvers meet the requested ratio") {
  Criterion c{7, "rho ratio"};
  const std::array<Rational, 3> rhos{Rational(3, 2), Rational(2, 1), Rational(3, 1)};
  std::uint64_t skipped = 0;
  for (const auto& e : shared_family()) {
    const int n = e.g.n();
    for (int d = 3; d <= 6; ++d) {
      const int half = d / 2;
      const int opt = e.opt[d - 3];
      for (const Rational& rho : rhos) {
        if (rho.num * half > rho.den * static_cast<std::int64_t>(n)) {
          ++skipped;  // outside the solver's admissible range
          continue;
        }
        const ProblemInstance inst(e.g, d);
        const RhoResult res =
            d % 2 == 0 ? rho_approx_even(inst, rho) : rho_approx_odd(inst, rho);
        const int size = res.solution.size();
        c.check(res.solution.certified && pairwise_at_least(e.dist, res.solution.vertices, d),
                [&] { return show(e.g, d) + " rho=" + rho.str() + ": infeasible output"; });
        c.check(static_cast<std::int64_t>(opt) * rho.den <=
                    static_cast<std::int64_t>(rho.num) * size,
                [&] {
                  return show(e.g, d) + " rho=" + rho.str() + ": optimum " +
                         std::to_string(opt) + " > " + rho.str() + " * " + std::to_string(size);
                });
        std::uint64_t cap = 0;
        if (d % 2 == 0) {
          const auto budget = std::max<std::int64_t>(
              1, static_cast<std::int64_t>(n) * rho.den / (rho.num * half));
          cap = subsets_up_to(n, static_cast<int>(std::min<std::int64_t>(budget, n)));
        } else {
          const int pool = static_cast<int>(res.phase2_pool.size());
          if (pool > 0) {
            const auto budget = std::max<std::int64_t>(
                1, 2 * static_cast<std::int64_t>(pool) * rho.den * rho.den /
                       (rho.num * (rho.num + rho.den * half)));
            cap = subsets_up_to(pool, static_cast<int>(std::min<std::int64_t>(budget, pool)));
          }
        }
        c.check(res.stats.subsets_examined <= cap, [&] {
          return show(e.g, d) + " rho=" + rho.str() + ": examined " +
                 std::to_string(res.stats.subsets_examined) + " subsets, budget caps it at " +
                 std::to_string(cap);
        });
      }
    }
  }
  c.note = std::to_string(skipped) + " parameter combinations outside the admissible range";
  c.report();
}

TEST_CASE("reductions preserve the independence number") {
  Criterion c{8, "reduction preserves optimum"};
  std::vector<Graph> sources;
  for (int n = 1; n <= 5; ++n)
    for (auto& g : testutil::all_labeled_graphs(n)) sources.push_back(std::move(g));
  for (int i = 0; i < 100; ++i) {
    const int n = 6 + i % 2;
    const int cap = n * (n - 1) / 2;
    sources.push_back(random_gnm_graph(n, (11 * i) % (cap + 1), 11000 + i));
  }
  for (const auto& g : sources) {
    const int alpha = testutil::naive_opt(g, 2);
    for (int d : {4, 6}) {
      const ReductionResult res = reduce_is_even(g, d);
      const int opt = brute_force_opt(ProblemInstance(res.graph, d), 64).size();
      c.check(opt == alpha, [&] {
        return show(g, d) + " even product: optimum " + std::to_string(opt) +
               ", independence number " + std::to_string(alpha);
      });
    }
    for (int d : {5, 7}) {
      const ReductionResult res = reduce_is_odd(g, d);
      const int opt = brute_force_opt(ProblemInstance(res.graph, d), 64).size();
      c.check(opt == alpha, [&] {
        return show(g, d) + " odd product: optimum " + std::to_string(opt) +
               ", independence number " + std::to_string(alpha);
      });
    }
  }
  c.report();
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> idx(g.n(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (int v : verts)
    for (int u : g.neighbors(v))
      if (idx[u] > idx[v]) edges.emplace_back(idx[v], idx[u]);
  return Graph(static_cast<int>(verts.size()), edges);
}

TEST_CASE("gadget products: degree cap, diameter, optimum on qualifying runs") {
  Criterion c{9, "gadget degree and diameter"};
  struct Setting {
    int d, max_degree;
    double eps1;
    bool check_opt;  // products stay small enough for the exhaustive oracle
    int seeds;
  };
  const std::array<Setting, 3> settings{{{4, 4, 1.0, true, 1},
                                         {5, 4, 1.0, true, 1},
                                         {7, 64, 1.75, false, 5}}};
  std::vector<Graph> small_sources;
  for (int n = 1; n <= 4; ++n)
    for (auto& g : testutil::all_connected_graphs(n)) small_sources.push_back(std::move(g));
  for (int i = 0; i < 30; ++i)
    small_sources.push_back(random_connected_graph(5, 4 + (3 * i) % 7, 12000 + i));
  const std::vector<Graph> big_sources{path_graph(2), path_graph(3), star_graph(3)};

  std::ostringstream fractions;
  for (const Setting& s : settings) {
    int qualifying = 0, generated = 0;
    const auto& sources = s.check_opt ? small_sources : big_sources;
    for (const auto& g : sources) {
      for (int run = 0; run < s.seeds; ++run) {
        GadgetConfig cfg;
        cfg.d = s.d;
        cfg.max_degree = s.max_degree;
        cfg.epsilon1 = s.eps1;
        cfg.seed = 20000 + run;
        const GadgetInstance inst = gadget_tree_instance(g, cfg);
        ++generated;
        const double delta = cfg.delta();
        const double overlay = 3.0 * std::pow(delta, 1.0 + 2.0 * s.eps1 / s.d);
        const double degree_cap = s.d % 2 == 0 ? delta + overlay : 2.0 * overlay;
        c.check(inst.graph.max_degree() <= degree_cap + 1e-9, [&] {
          return show(g, s.d) + " seed=" + std::to_string(cfg.seed) + ": product degree " +
                 std::to_string(inst.graph.max_degree()) + " above " +
                 std::to_string(degree_cap);
        });
        bool qualifies = true;
        for (int v = 0; v < g.n(); ++v) {
          const auto dia = diameter(induced_subgraph(inst.graph, inst.gadget_vertices[v]));
          if (!dia || *dia > cfg.tree_height()) qualifies = false;
        }
        if (qualifies) ++qualifying;
        if (qualifies && s.check_opt) {
          const int alpha = testutil::naive_opt(g, 2);
          const int opt = brute_force_opt(ProblemInstance(inst.graph, s.d), 64).size();
          c.check(opt == alpha, [&] {
            return show(g, s.d) + " seed=" + std::to_string(cfg.seed) +
                   " gadget product: optimum " + std::to_string(opt) +
                   ", independence number " + std::to_string(alpha);
          });
        }
      }
    }
    fractions << "d=" << s.d << " qualifying " << qualifying << "/" << generated << "  ";
  }
  c.note = fractions.str();
  c.report();
}

TEST_CASE("random cycle-plus-matching graphs have small diameter") {
  Criterion c{10, "expander diameter"};
  const int n = 4096;
  const double limit = std::log2(static_cast<double>(n)) +
                       std::log2(std::log2(static_cast<double>(n))) + 10.0;
  int good = 0, worst = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto dia = diameter(cycle_plus_matching(n, seed));
    REQUIRE(dia.has_value());
    worst = std::max(worst, *dia);
    if (*dia <= limit) ++good;
  }
  c.check(good * 10 >= 50 * 9, [&] {
    return "only " + std::to_string(good) + "/50 seeds stayed within " + std::to_string(limit);
  });
  std::ostringstream note;
  note << "diameter <= " << std::fixed << std::setprecision(2) << limit << " in " << good
       << "/50 seeds, max observed " << worst;
  c.note = note.str();
  c.report();
}

TEST_CASE("taking the b-th power divides the diameter") {
  Criterion c{11, "power diameter"};
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 29;
    const int cap = n * (n - 1) / 2;
    const int m = n - 1 + (5 * i) % (cap - n + 2);
    const Graph g = random_connected_graph(n, m, 13000 + i);
    const int base = *diameter(g);
    for (int b : {2, 3}) {
      const int powered = *diameter(power_graph(g, b));
      c.check(powered <= (base + b - 1) / b, [&] {
        return show(g, 0) + ": diameter " + std::to_string(base) + " -> " +
               std::to_string(powered) + " under power " + std::to_string(b);
      });
    }
  }
  c.report();
}

TEST_CASE("decomposition transform stays valid within the width bound") {
  Criterion c{12, "decomposition transform"};
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 19;
    const int cap = n * (n - 1) / 2;
    const Graph g = i % 2 == 0
                        ? random_gnm_graph(n, (3 * i) % (cap + 1), 14000 + i)
                        : random_connected_graph(n, n - 1 + (3 * i) % (cap - n + 2), 14000 + i);
    const TreeDecomposition base = min_degree_decomposition(g);
    c.check(!validate_decomposition(g, base),
            [&] { return show(g, 0) + ": heuristic decomposition invalid"; });
    const int degree = g.max_degree();
    for (int d : {2, 3, 4}) {
      const TreeDecomposition grown = power_decomposition(g, base, d);
      const auto bad = validate_decomposition(power_graph(g, d), grown);
      c.check(!bad, [&] { return show(g, d) + ": transform violates " + bad->condition; });
      const int r = (d + 1) / 2;
      long long reach = 0, ring = 1;
      for (int j = 0; j < r; ++j) {
        reach += ring;
        ring *= std::max(0, degree - 1);
      }
      const long long ball = 1 + static_cast<long long>(degree) * reach;
      c.check(grown.width() + 1 <= (base.width() + 1) * ball, [&] {
        return show(g, d) + ": width " + std::to_string(grown.width()) + " above (" +
               std::to_string(base.width()) + "+1) * " + std::to_string(ball) + " - 1";
      });
    }
  }
  c.report();
}

TEST_CASE("merging two graphs never grows the combined optimum") {
  Criterion c{13, "merge subadditivity"};
  for (int i = 0; i < 100; ++i) {
    const int n1 = 2 + i % 7, n2 = 2 + (i / 7) % 7;
    const int cap1 = n1 * (n1 - 1) / 2, cap2 = n2 * (n2 - 1) / 2;
    const Graph g1 = random_gnm_graph(n1, (5 * i) % (cap1 + 1), 15000 + i);
    const Graph g2 = random_gnm_graph(n2, (7 * i) % (cap2 + 1), 15500 + i);
    std::vector<int> cross_u, cross_w;
    for (int j = 0; j < i % 3; ++j) {
      cross_u.push_back((i + j) % n1);
      cross_w.push_back((i + 2 * j) % n2);
    }
    const Graph merged = merge_graphs(g1, g2, i % n1, (i / 3) % n2, cross_u, cross_w);
    for (int d : {3, 4}) {
      const int whole = testutil::naive_opt(merged, d);
      const int parts = testutil::naive_opt(g1, d) + testutil::naive_opt(g2, d);
      c.check(whole <= parts, [&] {
        return show(merged, d) + ": merged optimum " + std::to_string(whole) +
               " above the parts' sum " + std::to_string(parts);
      });
    }
  }
  c.report();
}

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(DSS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  CliRun r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST_CASE("every CLI subcommand is bit-identical across reruns") {
  Criterion c{14, "cli determinism"};
  namespace fs = std::filesystem;
  const fs::path dir = fs::current_path() / "acceptance_cli_tmp";
  fs::remove_all(dir);
  fs::create_directories(dir / "bench");
  const fs::path inst1 = dir / "bench" / "a.gr";
  const fs::path inst2 = dir / "bench" / "b.gr";
  const fs::path bip = dir / "bench" / "c.gr";
  std::ofstream(inst1) << serialize_graph(random_connected_graph(10, 14, 99));
  std::ofstream(inst2) << serialize_graph(random_connected_graph(8, 10, 7));
  std::ofstream(bip) << serialize_graph(random_bipartite_graph(5, 6, 12, 3));
  const std::string i1 = inst1.string(), i2 = inst2.string();

  struct Cmd {
    std::string args;
    std::vector<int> allowed;
  };
  const std::vector<Cmd> cmds{
      {"solve " + i1 + " --d 4 --algo exact --with-oracle", {0}},
      {"solve " + i1 + " --d 3 --algo rho-odd --rho 1.5", {0}},
      {"solve " + i1 + " --d 4 --algo rho-even --rho 3/2", {0}},
      {"solve " + i1 + " --d 4 --algo greedy --rule min-degree-static --format pretty", {0}},
      {"solve " + bip.string() + " --d 4 --algo bipartite", {0}},
      {"verify " + i1 + " --d 4 --set 0,1,2", {0, 3}},
      {"oracle " + i1 + " --d 5", {0}},
      {"generate --mode cycle-matching --n 30 --seed 11", {0}},
      {"generate --mode gnm --n 12 --m 20 --seed 5", {0}},
      {"reduce " + i2 + " --mode is-odd --d 5", {0}},
      {"reduce " + i2 + " --mode is-even --d 4", {0}},
      {"reduce " + i2 + " --mode gadget --d 4 --max-degree 8 --seed 5", {0}},
      {"reduce " + i1 + " --mode merge --with " + i2 +
           " --v1 0 --v2 1 --cross-u 1,2 --cross-w 0,3",
       {0}},
      {"power " + i1 + " --q 2", {0}},
      {"twtransform " + i1 + " --d 3", {0}},
      {"bench --dir " + (dir / "bench").string() + " --d 3,4 --rho 2,3 --with-oracle", {0}},
  };
  for (const Cmd& cmd : cmds) {
    const CliRun r1 = run_cli(cmd.args);
    const CliRun r2 = run_cli(cmd.args);
    c.check(std::find(cmd.allowed.begin(), cmd.allowed.end(), r1.code) != cmd.allowed.end(),
            [&] { return cmd.args + ": unexpected exit code " + std::to_string(r1.code); });
    c.check(r1.code == r2.code && r1.out == r2.out,
            [&] { return cmd.args + ": two runs differ"; });
  }

  // --out run: both the report on stdout and the artifact file must be stable.
  const fs::path outfile = dir / "generated.gr";
  const std::string gen =
      "generate --mode bipartite --na 5 --nb 6 --m 12 --seed 3 --out " + outfile.string();
  const CliRun g1 = run_cli(gen);
  const std::string f1 = read_file(outfile);
  fs::remove(outfile);
  const CliRun g2 = run_cli(gen);
  const std::string f2 = read_file(outfile);
  c.check(g1.code == 0 && g2.code == 0 && g1.out == g2.out && !f1.empty() && f1 == f2,
          [&] { return gen + ": runs or artifact files differ"; });

  fs::remove_all(dir);
  c.report();
}

}  // namespace
