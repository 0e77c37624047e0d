#pragma once

#include <cstdint>
#include <string>

#include "dscatter/exact.hpp"

namespace dscatter {

// Exact positive rational for the trade-off parameter. Degree thresholds and
// subset budgets are compared in integer arithmetic, so "deg < rho" means
// deg * den < num with no floating point involved.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);        // reduced; requires n, d > 0
  static Rational parse(const std::string& text);  // "3", "1.5" or "3/2"

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

struct RhoResult {
  SolutionSet solution;
  SearchStats stats;
  std::vector<int> phase1_selected;  // low-degree picks (odd d), ascending
  std::vector<int> phase1_excluded;  // their knocked-out surroundings, ascending
  std::vector<int> phase2_pool;      // survivors handed to enumeration, ascending
};

// Even d: per-component enumeration with the budget shrunk by rho.
// Requires 1 <= rho <= n / floor(d/2).
RhoResult rho_approx_even(const ProblemInstance& inst, const Rational& rho);

// Odd d: work in the power graph G^((d-1)/2), where the requirement becomes
// pairwise distance >= 3. Phase 1 keeps taking a minimum-degree vertex while
// that degree is < rho, excluding its distance-<=2 ball; phase 2 enumerates
// bounded subsets of the survivors per component, jointly compatible with
// everything already taken. static_degree switches phase 1 to degrees of the
// untouched power graph.
RhoResult rho_approx_odd(const ProblemInstance& inst, const Rational& rho,
                         bool static_degree = false);

}  // namespace dscatter
