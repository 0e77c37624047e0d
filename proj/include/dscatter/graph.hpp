#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace dscatter {

using Edge = std::pair<int, int>;

// Undirected simple graph on vertices 0..n-1, immutable once built.
// The constructor rejects self-loops, duplicate edges and out-of-range
// endpoints; neighbor lists are kept sorted.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<int>& neighbors(int v) const;
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  int max_degree() const;
  std::vector<Edge> edges() const;  // sorted, first < second

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);      // n >= 3
Graph complete_graph(int n);
Graph star_graph(int leaves);  // center 0, leaves 1..leaves

// Hop distances from one source; kUnreachable marks vertices outside the
// source's component (or beyond the depth cap for the truncated variant).
struct DistanceRow {
  static constexpr int kUnreachable = -1;
  int source = 0;
  std::vector<int> dist;
  bool reachable(int v) const { return dist[v] != kUnreachable; }
};

DistanceRow bfs_distances(const Graph& g, int source);
DistanceRow bfs_distances(const Graph& g, int source, int max_depth);

// All u != v with hop distance <= r (open ball boundary included, v itself
// excluded), sorted ascending.
std::vector<int> neighborhood(const Graph& g, int v, int r);

// G^q: same vertices, edge between every pair at hop distance in [1, q].
Graph power_graph(const Graph& g, int q);

// Largest pairwise hop distance; nullopt when disconnected. n <= 1 gives 0.
std::optional<int> diameter(const Graph& g);

// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

struct Bipartition {
  std::vector<int> side_a;
  std::vector<int> side_b;
};

// Two-coloring if one exists; the lowest id of every component lands in
// side_a. Nullopt on an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

}  // namespace dscatter
