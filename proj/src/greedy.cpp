#include "dscatter/greedy.hpp"

#include <algorithm>
#include <cassert>

namespace dscatter {

const char* to_string(SelectionRule rule) {
  switch (rule) {
    case SelectionRule::kMinDegreeResidual: return "min-degree-residual";
    case SelectionRule::kMinDegreeStatic: return "min-degree-static";
    case SelectionRule::kFirstId: return "first-id";
  }
  return "?";
}

std::optional<SelectionRule> parse_rule(std::string_view name) {
  if (name == "min-degree-residual") return SelectionRule::kMinDegreeResidual;
  if (name == "min-degree-static") return SelectionRule::kMinDegreeStatic;
  if (name == "first-id") return SelectionRule::kFirstId;
  return std::nullopt;
}

GreedyResult greedy_scattered(const ProblemInstance& inst, SelectionRule rule) {
  const Graph& g = inst.graph;
  const int n = g.n();
  std::vector<char> removed(n, 0);
  GreedyResult res;

  for (;;) {
    int pick = -1;
    if (rule == SelectionRule::kFirstId) {
      for (int v = 0; v < n && pick == -1; ++v)
        if (!removed[v]) pick = v;
    } else {
      int best_deg = -1;
      for (int v = 0; v < n; ++v) {
        if (removed[v]) continue;
        int deg;
        if (rule == SelectionRule::kMinDegreeStatic) {
          deg = g.degree(v);
        } else {
          deg = 0;
          for (int u : g.neighbors(v)) deg += !removed[u];
        }
        if (pick == -1 || deg < best_deg) {
          pick = v;
          best_deg = deg;
        }
      }
    }
    if (pick == -1) break;

    // Distances are taken in the input graph, not the residual one: a short
    // path through removed vertices still separates too little.
    const DistanceRow row = bfs_distances(g, pick, inst.d - 1);
    std::vector<int> ball;
    for (int u = 0; u < n; ++u) {
      if (!removed[u] && row.reachable(u)) {
        removed[u] = 1;
        ball.push_back(u);
      }
    }
    res.picks.push_back(pick);
    res.balls.push_back(std::move(ball));
  }

  res.solution = is_scattered(inst, res.picks);
  assert(res.solution.certified);
  return res;
}

}  // namespace dscatter
