#pragma once

#include <optional>
#include <stdexcept>

#include "dscatter/graph.hpp"

namespace dscatter {

// Ask: a set of >= k vertices whose pairwise hop distance is at least d.
// Only the graph and d live here; k is a property of callers.
struct ProblemInstance {
  Graph graph;
  int d = 2;

  ProblemInstance(Graph g, int d_) : graph(std::move(g)), d(d_) {
    if (d < 2) throw std::invalid_argument("instance: required distance must be >= 2");
  }
};

struct SolutionSet {
  std::vector<int> vertices;     // sorted ascending
  bool certified = false;        // pairwise distance >= d re-checked
  std::optional<Edge> witness;   // smallest violating pair when not certified

  int size() const { return static_cast<int>(vertices.size()); }
};

// Checks the pairwise distance condition. Duplicates are collapsed; on
// failure the witness is the lexicographically smallest violating pair.
SolutionSet is_scattered(const ProblemInstance& inst, std::vector<int> vertices);

// Upper bound on the optimum: sum over components of floor(|C| / floor(d/2)),
// except that a component always admits one pick, so the per-component term
// is clamped up to 1 (a component smaller than floor(d/2) has diameter < d).
int size_upper_bound(const ProblemInstance& inst);

}  // namespace dscatter
