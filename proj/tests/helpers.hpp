#pragma once

#include <cstdint>
#include <vector>

#include "dscatter/feasibility.hpp"
#include "dscatter/graph.hpp"
#include "dscatter/reductions.hpp"

// Oracles here stay deliberately naive and share no code paths with the
// library: Floyd-Warshall instead of BFS, flat mask sweeps instead of DFS.
namespace testutil {

constexpr int kInf = 1 << 28;

inline std::vector<std::vector<int>> fw_distances(const dscatter::Graph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) dist[v][v] = 0;
  for (const auto& [u, v] : g.edges()) dist[u][v] = dist[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (dist[i][k] + dist[k][j] < dist[i][j]) dist[i][j] = dist[i][k] + dist[k][j];
  return dist;
}

inline bool mask_feasible(const std::vector<std::vector<int>>& dist, std::uint32_t mask, int d) {
  const int n = static_cast<int>(dist.size());
  for (int i = 0; i < n; ++i) {
    if (!(mask >> i & 1)) continue;
    for (int j = i + 1; j < n; ++j)
      if ((mask >> j & 1) && dist[i][j] < d) return false;
  }
  return true;
}

// Exhaustive optimum by flat subset sweep; n <= 20 or so.
inline int naive_opt(const dscatter::Graph& g, int d) {
  const auto dist = fw_distances(g);
  const int n = g.n();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (mask_feasible(dist, mask, d)) best = std::max(best, __builtin_popcount(mask));
  return best;
}

inline bool is_connected(const dscatter::Graph& g) {
  if (g.n() <= 1) return true;
  const auto dist = fw_distances(g);
  for (int v = 1; v < g.n(); ++v)
    if (dist[0][v] >= kInf) return false;
  return true;
}

// All 2^C(n,2) labeled graphs on n vertices; n <= 5 keeps this sane.
inline std::vector<dscatter::Graph> all_labeled_graphs(int n) {
  std::vector<dscatter::Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<dscatter::Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<dscatter::Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    out.emplace_back(n, edges);
  }
  return out;
}

inline std::vector<dscatter::Graph> all_connected_graphs(int n) {
  std::vector<dscatter::Graph> out;
  for (auto& g : all_labeled_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace testutil
