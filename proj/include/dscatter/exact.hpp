#pragma once

#include <cstdint>

#include "dscatter/feasibility.hpp"

namespace dscatter {

struct SearchStats {
  std::uint64_t subsets_examined = 0;
};

// Exhaustive optimum over all vertex subsets, bitmask-pruned. Refuses
// instances above node_cap (and 64 regardless); among optima it returns the
// lexicographically smallest vertex set.
SolutionSet brute_force_opt(const ProblemInstance& inst, int node_cap = 22);

struct ExactResult {
  SolutionSet solution;
  SearchStats stats;
};

// Optimum via per-component enumeration capped by the per-component size
// bound (see size_upper_bound); same tie-break as brute_force_opt.
ExactResult exact_bounded(const ProblemInstance& inst);

}  // namespace dscatter
