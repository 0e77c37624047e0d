#include "dscatter/exact.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "subset_search.hpp"

namespace dscatter {

namespace {

// compat[v] bit u set  <=>  u != v and d(u,v) >= d, i.e. {u,v} may coexist.
std::vector<std::uint64_t> compatibility_masks(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  std::vector<std::uint64_t> compat(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    const DistanceRow row = bfs_distances(g, v, inst.d - 1);
    for (int u = 0; u < g.n(); ++u)
      if (u != v && !row.reachable(u)) compat[v] |= 1ULL << u;
  }
  return compat;
}

struct MaskSearch {
  const std::vector<std::uint64_t>& compat;
  std::uint64_t best_mask = 0;
  int best_size = -1;

  // Include-first on the lowest candidate bit visits equal-size sets in
  // lexicographic order, so the first maximum kept is the lex-smallest one.
  void run(std::uint64_t cand, std::uint64_t chosen, int size) {
    if (size + __builtin_popcountll(cand) <= best_size) return;
    if (cand == 0) {
      if (size > best_size) {
        best_size = size;
        best_mask = chosen;
      }
      return;
    }
    const int v = __builtin_ctzll(cand);
    const std::uint64_t bit = 1ULL << v;
    run((cand & ~bit) & compat[v], chosen | bit, size + 1);
    run(cand & ~bit, chosen, size);
  }
};

}  // namespace

SolutionSet brute_force_opt(const ProblemInstance& inst, int node_cap) {
  const int n = inst.graph.n();
  const int cap = std::min(node_cap, 64);
  if (n > cap)
    throw std::invalid_argument("brute_force_opt: " + std::to_string(n) +
                                " vertices exceeds cap " + std::to_string(cap));
  const auto compat = compatibility_masks(inst);
  MaskSearch search{compat};
  const std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
  search.run(all, 0, 0);

  std::vector<int> vertices;
  for (int v = 0; v < n; ++v)
    if (search.best_mask >> v & 1) vertices.push_back(v);
  SolutionSet out = is_scattered(inst, std::move(vertices));
  assert(out.certified);
  return out;
}

ExactResult exact_bounded(const ProblemInstance& inst) {
  const Graph& g = inst.graph;
  const int half = inst.d / 2;
  ExactResult res;
  std::vector<int> chosen;
  for (const auto& comp : connected_components(g)) {
    const int k = static_cast<int>(comp.size());
    const int budget = std::max(1, k / half);
    // Pairwise compatibility inside the component; BFS stays within it.
    std::vector<std::vector<char>> near(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i) {
      const DistanceRow row = bfs_distances(g, comp[i], inst.d - 1);
      for (int j = 0; j < k; ++j) near[i][j] = row.reachable(comp[j]);
    }
    auto found = detail::best_bounded_subset(
        k, budget, [&](int a, int b) { return !near[a][b]; });
    res.stats.subsets_examined += found.examined;
    for (int i : found.best) chosen.push_back(comp[i]);
  }
  res.solution = is_scattered(inst, std::move(chosen));
  assert(res.solution.certified);
  return res;
}

}  // namespace dscatter
