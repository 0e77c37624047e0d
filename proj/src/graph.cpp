#include "dscatter/graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>
#include <string>

namespace dscatter {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(std::max(n, 0)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("graph: edge endpoint out of range: (" + std::to_string(u) +
                                  "," + std::to_string(v) + ")");
    if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  for (std::size_t i = 1; i < norm.size(); ++i) {
    if (norm[i] == norm[i - 1])
      throw std::invalid_argument("graph: duplicate edge (" + std::to_string(norm[i].first) +
                                  "," + std::to_string(norm[i].second) + ")");
  }
  for (const auto& [u, v] : norm) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  m_ = static_cast<int>(norm.size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  assert(v >= 0 && v < n_);
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  assert(u >= 0 && u < n_ && v >= 0 && v < n_);
  const auto& smaller = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const int target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(smaller.begin(), smaller.end(), target);
}

int Graph::degree(int v) const {
  assert(v >= 0 && v < n_);
  return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (v > u) out.emplace_back(u, v);
  return out;
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

namespace {

DistanceRow bfs_impl(const Graph& g, int source, int max_depth) {
  if (source < 0 || source >= g.n())
    throw std::invalid_argument("bfs_distances: source out of range");
  DistanceRow row;
  row.source = source;
  row.dist.assign(g.n(), DistanceRow::kUnreachable);
  row.dist[source] = 0;
  std::queue<int> frontier;
  frontier.push(source);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    if (row.dist[v] == max_depth) continue;
    for (int u : g.neighbors(v)) {
      if (row.dist[u] == DistanceRow::kUnreachable) {
        row.dist[u] = row.dist[v] + 1;
        frontier.push(u);
      }
    }
  }
  return row;
}

}  // namespace

DistanceRow bfs_distances(const Graph& g, int source) {
  return bfs_impl(g, source, g.n());
}

DistanceRow bfs_distances(const Graph& g, int source, int max_depth) {
  if (max_depth < 0) throw std::invalid_argument("bfs_distances: negative depth cap");
  return bfs_impl(g, source, max_depth);
}

std::vector<int> neighborhood(const Graph& g, int v, int r) {
  if (r < 0) throw std::invalid_argument("neighborhood: negative radius");
  const DistanceRow row = bfs_distances(g, v, r);
  std::vector<int> out;
  for (int u = 0; u < g.n(); ++u)
    if (u != v && row.reachable(u)) out.push_back(u);
  return out;
}

Graph power_graph(const Graph& g, int q) {
  if (q < 1) throw std::invalid_argument("power_graph: exponent must be >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v < g.n(); ++v) {
    const DistanceRow row = bfs_distances(g, v, q);
    for (int u = v + 1; u < g.n(); ++u)
      if (row.reachable(u)) edges.emplace_back(v, u);
  }
  return Graph(g.n(), edges);
}

std::optional<int> diameter(const Graph& g) {
  if (g.n() <= 1) return 0;
  int best = 0;
  for (int v = 0; v < g.n(); ++v) {
    const DistanceRow row = bfs_distances(g, v);
    for (int u = 0; u < g.n(); ++u) {
      if (!row.reachable(u)) return std::nullopt;
      best = std::max(best, row.dist[u]);
    }
  }
  return best;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> frontier;
    seen[s] = 1;
    frontier.push(s);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      comp.push_back(v);
      for (int u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          frontier.push(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int u : g.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = 1 - color[v];
          frontier.push(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition out;
  for (int v = 0; v < g.n(); ++v) (color[v] == 0 ? out.side_a : out.side_b).push_back(v);
  return out;
}

}  // namespace dscatter
