#pragma once

#include <cstdint>
#include <vector>

namespace dscatter::detail {

struct SubsetSearchResult {
  std::vector<int> best;          // local indices, ascending
  std::uint64_t examined = 0;     // non-empty feasible subsets visited
};

// Enumerates every pairwise-compatible subset of {0..k-1} with size <= budget.
// The DFS extends by ascending index, so equal-size subsets appear in
// lexicographic order; keeping only strict size improvements therefore
// realizes "largest size, ties broken lexicographically". Subsets containing
// an incompatible pair are never entered, which keeps the visit count at most
// sum_{i<=budget} C(k,i).
template <typename Compatible>
SubsetSearchResult best_bounded_subset(int k, int budget, Compatible&& compatible) {
  SubsetSearchResult res;
  if (budget <= 0 || k <= 0) return res;
  std::vector<int> current;
  auto dfs = [&](auto&& self, int start) -> void {
    for (int i = start; i < k; ++i) {
      bool ok = true;
      for (int c : current) {
        if (!compatible(c, i)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      current.push_back(i);
      ++res.examined;
      if (current.size() > res.best.size()) res.best = current;
      if (static_cast<int>(current.size()) < budget) self(self, i + 1);
      current.pop_back();
    }
  };
  dfs(dfs, 0);
  return res;
}

}  // namespace dscatter::detail
