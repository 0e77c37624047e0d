#pragma once

#include <cstdint>
#include <string>

#include "dscatter/graph.hpp"

namespace dscatter {

struct ReductionCertificate {
  int source_n = 0;
  int source_m = 0;
  std::vector<int> vertex_map;  // source vertex -> its representative in the product
  std::string relation;
};

struct ReductionResult {
  Graph graph;
  ReductionCertificate certificate;
};

// Independence number of g equals the distance-d optimum of the product.
// Even d >= 4: copy g and hang a path of d/2-1 edges off every vertex; the
// representative is the far path end. Odd d >= 5: vertices keep a path of
// (d-3)/2 edges, original edges are replaced by one clique vertex each,
// joined to both endpoints.
ReductionResult reduce_is_even(const Graph& g, int d);
ReductionResult reduce_is_odd(const Graph& g, int d);

// n-cycle plus a random perfect matching (one vertex stays single when n is
// odd); matching edges that duplicate cycle edges are dropped. n >= 3.
Graph cycle_plus_matching(int n, std::uint64_t seed);

// Uniform simple graph with exactly m edges. Requires m <= C(n,2).
Graph random_gnm_graph(int n, int m, std::uint64_t seed);
// Random spanning tree plus m-(n-1) extra edges. Requires n-1 <= m <= C(n,2).
Graph random_connected_graph(int n, int m, std::uint64_t seed);
// Sides 0..n_a-1 and n_a..n_a+n_b-1, m random cross edges (m <= n_a*n_b).
Graph random_bipartite_graph(int n_a, int n_b, int m, std::uint64_t seed);

// Degree-compressing product: one near-regular tree gadget per source vertex,
// adjacency realized through the leaves (shared slots for even d, identified
// leaves for odd d), plus per-height-level overlays that shrink each gadget's
// diameter to its height: levels below the clique threshold become cliques,
// higher ones get a cycle, a seeded random matching and the configured power
// of that cycle-plus-matching subgraph.
struct GadgetConfig {
  int d = 4;            // >= 4, either parity
  int max_degree = 2;   // bound on source degrees, >= 2
  double epsilon1 = 1.0;  // in (0, floor(d/2))
  std::uint64_t seed = 0;

  int delta() const;             // smallest t with t^floor(d/2) >= max_degree
  int tree_height() const;       // d/2-1 even, floor(d/2) odd
  int power_exponent() const;    // ceil((1+2*epsilon1/d) * log2(delta))
  double clique_threshold() const;  // 1 + 2*epsilon1/d + log_delta(3)
};

struct GadgetInstance {
  Graph graph;
  ReductionCertificate certificate;              // source vertex -> gadget root
  std::vector<std::vector<int>> gadget_vertices; // per source vertex, ascending
};

GadgetInstance gadget_tree_instance(const Graph& g, const GadgetConfig& cfg);

// Glue g2 onto g1: v1 and v2 collapse into one vertex (keeping v1's id),
// remaining g2 ids follow g1's block, and cross_u[i]-cross_w[i] edges are
// added across. Duplicate edges collapse, a cross pair (v1,v2) is dropped.
Graph merge_graphs(const Graph& g1, const Graph& g2, int v1, int v2,
                   const std::vector<int>& cross_u, const std::vector<int>& cross_w);

}  // namespace dscatter
