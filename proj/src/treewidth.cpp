#include "dscatter/treewidth.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>
#include <stdexcept>

namespace dscatter {

TreeDecomposition::TreeDecomposition(std::vector<std::vector<int>> bags,
                                     std::vector<Edge> tree_edges)
    : bags_(std::move(bags)), edges_(std::move(tree_edges)), adj_(bags_.size()) {
  for (auto& bag : bags_) {
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  }
  const int k = node_count();
  for (const auto& [a, b] : edges_) {
    if (a < 0 || a >= k || b < 0 || b >= k)
      throw std::invalid_argument("decomposition: tree edge endpoint out of range");
    if (a == b) throw std::invalid_argument("decomposition: tree self-loop");
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

const std::vector<int>& TreeDecomposition::bag(int node) const {
  assert(node >= 0 && node < node_count());
  return bags_[node];
}

const std::vector<int>& TreeDecomposition::tree_neighbors(int node) const {
  assert(node >= 0 && node < node_count());
  return adj_[node];
}

int TreeDecomposition::width() const {
  int largest = 0;
  for (const auto& bag : bags_) largest = std::max(largest, static_cast<int>(bag.size()));
  return largest - 1;
}

std::optional<TdViolation> validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int k = td.node_count();
  if (k == 0)
    return g.n() == 0 ? std::nullopt
                      : std::optional<TdViolation>({"tree-shape", "no bags for a nonempty graph"});
  if (static_cast<int>(td.tree_edges().size()) != k - 1)
    return TdViolation{"tree-shape", std::to_string(td.tree_edges().size()) + " edges on " +
                                         std::to_string(k) + " nodes"};
  {
    std::vector<char> seen(k, 0);
    std::queue<int> frontier;
    seen[0] = 1;
    frontier.push(0);
    int reached = 1;
    while (!frontier.empty()) {
      const int a = frontier.front();
      frontier.pop();
      for (int b : td.tree_neighbors(a)) {
        if (!seen[b]) {
          seen[b] = 1;
          ++reached;
          frontier.push(b);
        }
      }
    }
    if (reached != k)
      return TdViolation{"tree-shape", "tree is disconnected (or has a parallel edge)"};
  }
  for (int node = 0; node < k; ++node)
    for (int v : td.bag(node))
      if (v < 0 || v >= g.n())
        return TdViolation{"bag-content",
                           "bag " + std::to_string(node) + " holds out-of-range vertex " +
                               std::to_string(v)};

  std::vector<std::vector<int>> holding(g.n());
  for (int node = 0; node < k; ++node)
    for (int v : td.bag(node)) holding[v].push_back(node);
  for (int v = 0; v < g.n(); ++v)
    if (holding[v].empty())
      return TdViolation{"vertex-coverage", "vertex " + std::to_string(v) + " is in no bag"};

  for (const auto& [u, v] : g.edges()) {
    const auto& hu = holding[u];
    bool covered = false;
    for (int node : hu) {
      const auto& bag = td.bag(node);
      if (std::binary_search(bag.begin(), bag.end(), v)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      return TdViolation{"edge-coverage", "edge (" + std::to_string(u) + "," +
                                              std::to_string(v) + ") is in no bag"};
  }

  for (int v = 0; v < g.n(); ++v) {
    const auto& hv = holding[v];
    std::vector<char> in_hv(k, 0), seen(k, 0);
    for (int node : hv) in_hv[node] = 1;
    std::queue<int> frontier;
    seen[hv[0]] = 1;
    frontier.push(hv[0]);
    std::size_t reached = 1;
    while (!frontier.empty()) {
      const int a = frontier.front();
      frontier.pop();
      for (int b : td.tree_neighbors(a)) {
        if (in_hv[b] && !seen[b]) {
          seen[b] = 1;
          ++reached;
          frontier.push(b);
        }
      }
    }
    if (reached != hv.size())
      return TdViolation{"connected-subtree",
                         "bags holding vertex " + std::to_string(v) + " are disconnected"};
  }
  return std::nullopt;
}

TreeDecomposition power_decomposition(const Graph& g, const TreeDecomposition& td, int d) {
  if (d < 2) throw std::invalid_argument("power_decomposition: requires d >= 2");
  if (const auto bad = validate_decomposition(g, td))
    throw std::invalid_argument("power_decomposition: input invalid (" + bad->condition + ": " +
                                bad->detail + ")");
  const int r = (d + 1) / 2;
  std::vector<std::vector<int>> balls(g.n());
  for (int v = 0; v < g.n(); ++v) {
    balls[v] = neighborhood(g, v, r);
    balls[v].push_back(v);
  }
  std::vector<std::vector<int>> bags;
  bags.reserve(td.node_count());
  for (int node = 0; node < td.node_count(); ++node) {
    std::set<int> grown;
    for (int v : td.bag(node)) grown.insert(balls[v].begin(), balls[v].end());
    bags.emplace_back(grown.begin(), grown.end());
  }
  return TreeDecomposition(std::move(bags), td.tree_edges());
}

TreeDecomposition min_degree_decomposition(const Graph& g) {
  const int n = g.n();
  if (n == 0) return TreeDecomposition({{}}, {});
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v)
    adj[v] = std::set<int>(g.neighbors(v).begin(), g.neighbors(v).end());

  std::vector<char> alive(n, 1);
  std::vector<int> elim_step(n, -1);
  std::vector<std::vector<int>> bags(n);
  std::vector<std::vector<int>> fill_neighbors(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      if (pick == -1 || adj[v].size() < adj[pick].size()) pick = v;
    }
    elim_step[pick] = step;
    bags[step].assign(adj[pick].begin(), adj[pick].end());
    fill_neighbors[step] = bags[step];
    bags[step].push_back(pick);
    std::sort(bags[step].begin(), bags[step].end());
    for (int a : fill_neighbors[step])
      for (int b : fill_neighbors[step])
        if (a < b) {
          adj[a].insert(b);
          adj[b].insert(a);
        }
    for (int a : fill_neighbors[step]) adj[a].erase(pick);
    alive[pick] = 0;
  }

  // Each bag hangs off the step that eliminates the earliest-eliminated
  // surviving neighbor; neighbor-free steps are component roots, chained so
  // the result is one tree.
  std::vector<Edge> edges;
  std::vector<int> roots;
  for (int step = 0; step < n; ++step) {
    int parent = -1;
    for (int v : fill_neighbors[step])
      if (parent == -1 || elim_step[v] < parent) parent = elim_step[v];
    if (parent == -1)
      roots.push_back(step);
    else
      edges.emplace_back(step, parent);
  }
  for (std::size_t i = 1; i < roots.size(); ++i) edges.emplace_back(roots[i - 1], roots[i]);
  return TreeDecomposition(std::move(bags), std::move(edges));
}

}  // namespace dscatter
