#pragma once

#include "dscatter/feasibility.hpp"

namespace dscatter {

// Packing view of the one-sided problem (even d only). Each set is tagged by
// the side-A vertex it represents and collects every tracked element within
// hop distance d/2 - 1 of it. Elements track side-B vertices always, and
// side-A vertices too when d/2 is odd (then a set contains its own tag's
// element, at distance zero).
struct SetPackingInstance {
  enum class Side { kA, kB };
  struct Element {
    int vertex;
    Side side;
  };
  struct TaggedSet {
    int tag;                    // side-A vertex
    std::vector<int> elements;  // element ids, ascending
  };
  std::vector<Element> elements;
  std::vector<TaggedSet> sets;
};

SetPackingInstance build_set_packing(const ProblemInstance& inst,
                                     const std::vector<int>& side_a,
                                     const std::vector<int>& side_b);

struct PackingSolution {
  std::vector<int> chosen_tags;  // selection order
  bool disjoint = false;         // re-checked pairwise
};

// Smallest-cardinality-first greedy (ties to the lowest tag); a picked set
// knocks out every set sharing an element with it.
PackingSolution greedy_set_packing(const SetPackingInstance& sp);

// Runs the packing greedy with each side in the tag role and keeps the larger
// answer (ties to the lexicographically smaller vertex set). Requires a
// bipartite graph and even d >= 4.
SolutionSet bipartite_approx(const ProblemInstance& inst);

}  // namespace dscatter
