#include "dscatter/rho.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "subset_search.hpp"

namespace dscatter {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (num <= 0 || den <= 0) throw std::invalid_argument("rho: must be a positive rational");
  const std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
}

Rational Rational::parse(const std::string& text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("rho: cannot parse '" + text + "'");
  };
  auto as_int = [&](const std::string& part) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(part, &used);
    } catch (const std::exception&) {
      fail();
    }
    if (used != part.size()) fail();
    return value;
  };
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    return Rational(as_int(text.substr(0, slash)), as_int(text.substr(slash + 1)));
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 9) fail();
    for (char c : frac)
      if (c < '0' || c > '9') fail();
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t head = whole.empty() ? 0 : as_int(whole);
    return Rational(head * den + as_int(frac), den);
  }
  return Rational(as_int(text), 1);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

void check_rho_range(const Rational& rho, int n, int half) {
  if (rho.num < rho.den) throw std::invalid_argument("rho: must be at least 1");
  if (rho.num * half > rho.den * static_cast<std::int64_t>(n))
    throw std::invalid_argument("rho: exceeds n / floor(d/2) for this instance");
}

}  // namespace

RhoResult rho_approx_even(const ProblemInstance& inst, const Rational& rho) {
  if (inst.d % 2 != 0) throw std::invalid_argument("rho_approx_even: d must be even");
  const Graph& g = inst.graph;
  const int half = inst.d / 2;
  check_rho_range(rho, g.n(), half);

  RhoResult res;
  std::vector<int> chosen;
  for (const auto& comp : connected_components(g)) {
    const int k = static_cast<int>(comp.size());
    const auto budget = static_cast<int>(
        std::max<std::int64_t>(1, k * rho.den / (rho.num * half)));
    std::vector<std::vector<char>> near(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i) {
      const DistanceRow row = bfs_distances(g, comp[i], inst.d - 1);
      for (int j = 0; j < k; ++j) near[i][j] = row.reachable(comp[j]);
    }
    auto found = detail::best_bounded_subset(
        k, budget, [&](int a, int b) { return !near[a][b]; });
    res.stats.subsets_examined += found.examined;
    for (int i : found.best) chosen.push_back(comp[i]);
  }
  res.solution = is_scattered(inst, std::move(chosen));
  assert(res.solution.certified);
  return res;
}

RhoResult rho_approx_odd(const ProblemInstance& inst, const Rational& rho, bool static_degree) {
  if (inst.d % 2 == 0) throw std::invalid_argument("rho_approx_odd: d must be odd");
  const Graph& g = inst.graph;
  const int half = inst.d / 2;
  check_rho_range(rho, g.n(), half);

  // Distance >= d in g is distance >= 3 in the (d-1)/2 power.
  const Graph gp = power_graph(g, (inst.d - 1) / 2);
  const int n = g.n();

  RhoResult res;
  std::vector<char> gone(n, 0);
  std::vector<int> s1;
  for (;;) {
    int pick = -1;
    int best_deg = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      int deg = 0;
      if (static_degree) {
        deg = gp.degree(v);
      } else {
        for (int u : gp.neighbors(v)) deg += !gone[u];
      }
      if (pick == -1 || deg < best_deg) {
        pick = v;
        best_deg = deg;
      }
    }
    // Keep harvesting while the minimum degree stays below rho.
    if (pick == -1 || best_deg * rho.den >= rho.num) break;
    s1.push_back(pick);
    gone[pick] = 1;
    const DistanceRow ball = bfs_distances(gp, pick, 2);
    for (int u = 0; u < n; ++u) {
      if (!gone[u] && ball.reachable(u)) {
        gone[u] = 1;
        res.phase1_excluded.push_back(u);
      }
    }
  }
  res.phase1_selected = s1;
  std::sort(res.phase1_selected.begin(), res.phase1_selected.end());
  std::sort(res.phase1_excluded.begin(), res.phase1_excluded.end());

  std::vector<int> pool;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) pool.push_back(v);
  res.phase2_pool = pool;

  // Conflict rows in gp (anything within two hops) for every pool vertex;
  // used both for pairwise checks and for compatibility with earlier picks.
  std::vector<std::vector<char>> near_pool;
  std::vector<int> pool_index(n, -1);
  near_pool.reserve(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    pool_index[pool[i]] = static_cast<int>(i);
    const DistanceRow row = bfs_distances(gp, pool[i], 2);
    std::vector<char> flat(n, 0);
    for (int u = 0; u < n; ++u) flat[u] = row.reachable(u);
    near_pool.push_back(std::move(flat));
  }

  // Components of the power graph induced on the pool, by smallest member.
  std::vector<std::vector<int>> comps;
  {
    std::vector<char> seen(n, 0);
    for (int s : pool) {
      if (seen[s]) continue;
      std::vector<int> comp;
      std::vector<int> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (int u : gp.neighbors(v)) {
          if (pool_index[u] != -1 && !seen[u]) {
            seen[u] = 1;
            stack.push_back(u);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  }

  std::vector<int> taken = s1;  // grows with accepted phase-2 picks
  std::vector<int> chosen = s1;
  for (const auto& comp : comps) {
    const auto nc = static_cast<std::int64_t>(comp.size());
    // floor(2 nc / (rho (rho + half))), clamped so a nonempty component may
    // still contribute one vertex.
    const auto budget = static_cast<int>(std::max<std::int64_t>(
        1, 2 * nc * rho.den * rho.den / (rho.num * (rho.num + rho.den * half))));
    // Distinct components of the induced pool can still clash through
    // excluded vertices, hence the joint filter against everything taken.
    std::vector<int> allowed;
    for (int v : comp) {
      bool ok = true;
      for (int w : taken) {
        if (near_pool[pool_index[v]][w]) {
          ok = false;
          break;
        }
      }
      if (ok) allowed.push_back(v);
    }
    auto found = detail::best_bounded_subset(
        static_cast<int>(allowed.size()), budget, [&](int a, int b) {
          return !near_pool[pool_index[allowed[a]]][allowed[b]];
        });
    res.stats.subsets_examined += found.examined;
    for (int i : found.best) {
      taken.push_back(allowed[i]);
      chosen.push_back(allowed[i]);
    }
  }

  res.solution = is_scattered(inst, std::move(chosen));
  assert(res.solution.certified);
  return res;
}

}  // namespace dscatter
