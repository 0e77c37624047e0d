#include "dscatter/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "dscatter/rng.hpp"

namespace dscatter {

namespace {
constexpr const char* kAlphaRelation = "alpha(source) == opt_d(product)";
}

ReductionResult reduce_is_even(const Graph& g, int d) {
  if (d < 4 || d % 2 != 0)
    throw std::invalid_argument("reduce_is_even: requires even d >= 4");
  const int n = g.n();
  const int tail = d / 2 - 1;  // >= 1
  std::vector<Edge> edges = g.edges();
  auto tail_vertex = [&](int v, int j) { return n + v * tail + j; };
  for (int v = 0; v < n; ++v) {
    edges.emplace_back(v, tail_vertex(v, 0));
    for (int j = 1; j < tail; ++j) edges.emplace_back(tail_vertex(v, j - 1), tail_vertex(v, j));
  }
  ReductionResult res{Graph(n * (1 + tail), edges), {}};
  res.certificate.source_n = n;
  res.certificate.source_m = g.m();
  res.certificate.relation = kAlphaRelation;
  for (int v = 0; v < n; ++v) res.certificate.vertex_map.push_back(tail_vertex(v, tail - 1));
  return res;
}

ReductionResult reduce_is_odd(const Graph& g, int d) {
  if (d < 5 || d % 2 != 1)
    throw std::invalid_argument("reduce_is_odd: requires odd d >= 5");
  const int n = g.n();
  const int tail = (d - 3) / 2;  // >= 1
  const auto src_edges = g.edges();
  const int base = n * (1 + tail);
  std::vector<Edge> edges;
  auto tail_vertex = [&](int v, int j) { return n + v * tail + j; };
  for (int v = 0; v < n; ++v) {
    edges.emplace_back(v, tail_vertex(v, 0));
    for (int j = 1; j < tail; ++j) edges.emplace_back(tail_vertex(v, j - 1), tail_vertex(v, j));
  }
  // One clique vertex per source edge carries the adjacency; the source
  // edges themselves are not copied.
  for (std::size_t k = 0; k < src_edges.size(); ++k) {
    const int ev = base + static_cast<int>(k);
    edges.emplace_back(src_edges[k].first, ev);
    edges.emplace_back(src_edges[k].second, ev);
    for (std::size_t j = 0; j < k; ++j) edges.emplace_back(base + static_cast<int>(j), ev);
  }
  ReductionResult res{Graph(base + g.m(), edges), {}};
  res.certificate.source_n = n;
  res.certificate.source_m = g.m();
  res.certificate.relation = kAlphaRelation;
  for (int v = 0; v < n; ++v) res.certificate.vertex_map.push_back(tail_vertex(v, tail - 1));
  return res;
}

Graph cycle_plus_matching(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("cycle_plus_matching: need n >= 3");
  std::set<Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.insert({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  SplitMix64 rng(seed);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);
  for (int i = 0; i + 1 < n; i += 2)
    edges.insert({std::min(perm[i], perm[i + 1]), std::max(perm[i], perm[i + 1])});
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

namespace {

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

}  // namespace

Graph random_gnm_graph(int n, int m, std::uint64_t seed) {
  if (n < 0 || m < 0) throw std::invalid_argument("random_gnm_graph: negative size");
  auto pairs = all_pairs(n);
  if (m > static_cast<int>(pairs.size()))
    throw std::invalid_argument("random_gnm_graph: more edges than vertex pairs");
  SplitMix64 rng(seed);
  rng.shuffle(pairs);
  pairs.resize(m);
  return Graph(n, pairs);
}

Graph random_connected_graph(int n, int m, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_connected_graph: need n >= 1");
  auto pairs = all_pairs(n);
  if (m < n - 1 || m > static_cast<int>(pairs.size()))
    throw std::invalid_argument("random_connected_graph: need n-1 <= m <= C(n,2)");
  SplitMix64 rng(seed);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  std::set<Edge> edges;
  for (int i = 1; i < n; ++i) {
    const int j = static_cast<int>(rng.next_below(i));
    edges.insert({std::min(order[i], order[j]), std::max(order[i], order[j])});
  }
  rng.shuffle(pairs);
  for (const auto& e : pairs) {
    if (static_cast<int>(edges.size()) >= m) break;
    edges.insert(e);
  }
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph random_bipartite_graph(int n_a, int n_b, int m, std::uint64_t seed) {
  if (n_a < 0 || n_b < 0 || m < 0)
    throw std::invalid_argument("random_bipartite_graph: negative size");
  std::vector<Edge> pairs;
  for (int a = 0; a < n_a; ++a)
    for (int b = 0; b < n_b; ++b) pairs.emplace_back(a, n_a + b);
  if (m > static_cast<int>(pairs.size()))
    throw std::invalid_argument("random_bipartite_graph: more edges than cross pairs");
  SplitMix64 rng(seed);
  rng.shuffle(pairs);
  pairs.resize(m);
  return Graph(n_a + n_b, pairs);
}

int GadgetConfig::delta() const {
  const int root = d / 2;
  int t = 1;
  for (;;) {
    std::int64_t p = 1;
    for (int i = 0; i < root && p < max_degree; ++i) p *= t;
    if (p >= max_degree) return t;
    ++t;
  }
}

int GadgetConfig::tree_height() const { return d % 2 == 0 ? d / 2 - 1 : d / 2; }

int GadgetConfig::power_exponent() const {
  const double raw = (1.0 + 2.0 * epsilon1 / d) * std::log2(static_cast<double>(delta()));
  // Tolerance keeps an exactly-integral product from rounding one step up.
  return static_cast<int>(std::ceil(raw - 1e-9));
}

double GadgetConfig::clique_threshold() const {
  const double dl = static_cast<double>(delta());
  return 1.0 + 2.0 * epsilon1 / d + std::log(3.0) / std::log(dl);
}

GadgetInstance gadget_tree_instance(const Graph& g, const GadgetConfig& cfg) {
  if (cfg.d < 4) throw std::invalid_argument("gadget: requires d >= 4");
  if (cfg.max_degree < 2) throw std::invalid_argument("gadget: requires degree bound >= 2");
  if (!(cfg.epsilon1 > 0.0 && cfg.epsilon1 < cfg.d / 2))
    throw std::invalid_argument("gadget: epsilon1 outside (0, floor(d/2))");
  if (g.max_degree() > cfg.max_degree)
    throw std::invalid_argument("gadget: source degree exceeds the configured bound");

  const int n = g.n();
  const int h = cfg.tree_height();
  const int delta = cfg.delta();
  const int exponent = cfg.power_exponent();
  const double clique_below = cfg.clique_threshold();
  const bool odd = cfg.d % 2 == 1;

  std::vector<std::int64_t> level_offset(h + 2, 0);
  std::int64_t level_size = 1;
  for (int i = 0; i <= h; ++i) {
    level_offset[i + 1] = level_offset[i] + level_size;
    level_size *= delta;
  }
  const std::int64_t block = level_offset[h + 1];
  if (static_cast<std::int64_t>(n) * block > 5'000'000)
    throw std::invalid_argument("gadget: product would exceed five million vertices");
  const int total_prov = static_cast<int>(n * block);
  auto prov = [&](int v, int level, std::int64_t pos) {
    return static_cast<int>(v * block + level_offset[level] + pos);
  };
  auto slot = [&](int v, int u) {
    const auto& adj = g.neighbors(v);
    return static_cast<int>(std::lower_bound(adj.begin(), adj.end(), u) - adj.begin());
  };

  // Odd d: the leaf for edge (u,v) on the higher endpoint redirects to the
  // lower endpoint's leaf. Slots are distinct per incident edge, so no chains.
  std::vector<int> redirect(total_prov, -1);
  if (odd) {
    for (const auto& [u, v] : g.edges())
      redirect[prov(v, h, slot(v, u))] = prov(u, h, slot(u, v));
  }
  std::vector<int> final_id(total_prov, -1);
  int total = 0;
  for (int x = 0; x < total_prov; ++x)
    final_id[x] = redirect[x] == -1 ? total++ : final_id[redirect[x]];

  std::set<Edge> edges;
  auto add_edge = [&](int a, int b) {
    const int fa = final_id[a], fb = final_id[b];
    if (fa != fb) edges.insert({std::min(fa, fb), std::max(fa, fb)});
  };

  const SplitMix64 root_rng(cfg.seed);
  for (int v = 0; v < n; ++v) {
    const SplitMix64 gadget_rng = root_rng.split(v);
    for (int i = 1; i <= h; ++i) {
      const auto k = level_offset[i + 1] - level_offset[i];
      for (std::int64_t p = 0; p < k; ++p) add_edge(prov(v, i - 1, p / delta), prov(v, i, p));
      if (i < clique_below) {
        for (std::int64_t p = 0; p < k; ++p)
          for (std::int64_t q = p + 1; q < k; ++q) add_edge(prov(v, i, p), prov(v, i, q));
        continue;
      }
      // Cycle in natural order plus a seeded matching, then the power of
      // that local subgraph; only these levels consume randomness.
      SplitMix64 level_rng = gadget_rng.split(i);
      const int kk = static_cast<int>(k);
      std::set<Edge> local;
      for (int p = 0; p < kk; ++p)
        local.insert({std::min(p, (p + 1) % kk), std::max(p, (p + 1) % kk)});
      std::vector<int> perm(kk);
      for (int p = 0; p < kk; ++p) perm[p] = p;
      level_rng.shuffle(perm);
      for (int p = 0; p + 1 < kk; p += 2)
        local.insert({std::min(perm[p], perm[p + 1]), std::max(perm[p], perm[p + 1])});
      const Graph powered =
          power_graph(Graph(kk, std::vector<Edge>(local.begin(), local.end())), exponent);
      for (const auto& [a, b] : powered.edges()) add_edge(prov(v, i, a), prov(v, i, b));
    }
  }
  if (!odd) {
    // Leaves hand out delta cross slots each; edge slot s lands on leaf s/delta.
    for (const auto& [u, v] : g.edges())
      add_edge(prov(u, h, slot(u, v) / delta), prov(v, h, slot(v, u) / delta));
  }

  GadgetInstance out{Graph(total, std::vector<Edge>(edges.begin(), edges.end())), {}, {}};
  out.certificate.source_n = n;
  out.certificate.source_m = g.m();
  out.certificate.relation = kAlphaRelation;
  for (int v = 0; v < n; ++v) out.certificate.vertex_map.push_back(final_id[prov(v, 0, 0)]);
  out.gadget_vertices.assign(n, {});
  for (int v = 0; v < n; ++v) {
    auto& mine = out.gadget_vertices[v];
    for (std::int64_t x = 0; x < block; ++x) mine.push_back(final_id[v * block + x]);
    std::sort(mine.begin(), mine.end());
  }
  return out;
}

Graph merge_graphs(const Graph& g1, const Graph& g2, int v1, int v2,
                   const std::vector<int>& cross_u, const std::vector<int>& cross_w) {
  if (v1 < 0 || v1 >= g1.n() || v2 < 0 || v2 >= g2.n())
    throw std::invalid_argument("merge: glue vertex out of range");
  if (cross_u.size() != cross_w.size())
    throw std::invalid_argument("merge: cross lists differ in length");
  for (int u : cross_u)
    if (u < 0 || u >= g1.n()) throw std::invalid_argument("merge: cross vertex out of range");
  for (int w : cross_w)
    if (w < 0 || w >= g2.n()) throw std::invalid_argument("merge: cross vertex out of range");

  const int n1 = g1.n();
  auto map2 = [&](int w) { return w == v2 ? v1 : n1 + w - (w > v2 ? 1 : 0); };
  std::set<Edge> edges;
  for (const auto& e : g1.edges()) edges.insert(e);
  for (const auto& [a, b] : g2.edges()) {
    const int x = map2(a), y = map2(b);
    edges.insert({std::min(x, y), std::max(x, y)});
  }
  for (std::size_t i = 0; i < cross_u.size(); ++i) {
    const int x = cross_u[i], y = map2(cross_w[i]);
    if (x != y) edges.insert({std::min(x, y), std::max(x, y)});
  }
  return Graph(n1 + g2.n() - 1, std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace dscatter
