#pragma once

#include <optional>
#include <string_view>

#include "dscatter/feasibility.hpp"

namespace dscatter {

enum class SelectionRule {
  kMinDegreeResidual,  // fewest un-removed neighbors, recomputed each round
  kMinDegreeStatic,    // fewest neighbors in the input graph
  kFirstId,
};

const char* to_string(SelectionRule rule);
std::optional<SelectionRule> parse_rule(std::string_view name);

struct GreedyResult {
  SolutionSet solution;
  // balls[i]: the vertices removed when solution.vertices... in pick order;
  // picks[i] is the i-th selected vertex, balls[i] its removed radius-(d-1)
  // ball. The balls partition V.
  std::vector<int> picks;
  std::vector<std::vector<int>> balls;
};

// Repeatedly select a surviving vertex by `rule` (ties to the lowest id) and
// delete everything within hop distance d-1 of it in the *input* graph.
GreedyResult greedy_scattered(const ProblemInstance& inst,
                              SelectionRule rule = SelectionRule::kMinDegreeResidual);

}  // namespace dscatter
