#include "dscatter/feasibility.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dscatter {

SolutionSet is_scattered(const ProblemInstance& inst, std::vector<int> vertices) {
  const Graph& g = inst.graph;
  for (int v : vertices) {
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("is_scattered: vertex out of range: " + std::to_string(v));
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  SolutionSet out;
  out.vertices = std::move(vertices);
  // Scanning sources in ascending order and taking the first partner hit
  // within d-1 hops yields the lexicographically smallest violating pair.
  for (std::size_t i = 0; i + 1 < out.vertices.size(); ++i) {
    const DistanceRow row = bfs_distances(g, out.vertices[i], inst.d - 1);
    for (std::size_t j = i + 1; j < out.vertices.size(); ++j) {
      if (row.reachable(out.vertices[j])) {
        out.witness = Edge{out.vertices[i], out.vertices[j]};
        return out;
      }
    }
  }
  out.certified = true;
  return out;
}

int size_upper_bound(const ProblemInstance& inst) {
  const int half = inst.d / 2;
  int total = 0;
  for (const auto& comp : connected_components(inst.graph))
    total += std::max(1, static_cast<int>(comp.size()) / half);
  return total;
}

}  // namespace dscatter
