#pragma once

#include <optional>
#include <string>

#include "dscatter/graph.hpp"

namespace dscatter {

// Bags indexed 0..node_count-1, connected by tree edges. The constructor
// sorts and deduplicates bag contents and checks edge endpoints; whether the
// structure is a valid decomposition of a particular graph is the job of
// validate_decomposition.
class TreeDecomposition {
 public:
  TreeDecomposition() = default;
  TreeDecomposition(std::vector<std::vector<int>> bags, std::vector<Edge> tree_edges);

  int node_count() const { return static_cast<int>(bags_.size()); }
  const std::vector<int>& bag(int node) const;
  const std::vector<std::vector<int>>& bags() const { return bags_; }
  const std::vector<Edge>& tree_edges() const { return edges_; }
  const std::vector<int>& tree_neighbors(int node) const;
  int width() const;  // max bag size - 1; -1 when there are no bags

 private:
  std::vector<std::vector<int>> bags_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

struct TdViolation {
  std::string condition;  // "tree-shape", "bag-content", "vertex-coverage",
                          // "edge-coverage" or "connected-subtree"
  std::string detail;
};

// First violated decomposition condition for g, or nullopt when valid.
std::optional<TdViolation> validate_decomposition(const Graph& g, const TreeDecomposition& td);

// Replaces every bag by the union of closed radius-ceil(d/2) balls around
// its members, keeping the tree shape. A decomposition of g becomes one of
// the power graph g^d: a distance-<=d pair has a midpoint within the radius
// of both ends. Throws when td is not valid for g.
TreeDecomposition power_decomposition(const Graph& g, const TreeDecomposition& td, int d);

// Min-degree elimination heuristic; always valid, width is only a heuristic
// upper bound on the true treewidth.
TreeDecomposition min_degree_decomposition(const Graph& g);

}  // namespace dscatter
