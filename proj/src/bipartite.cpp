#include "dscatter/bipartite.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace dscatter {

namespace {

void check_sides(const Graph& g, const std::vector<int>& side_a, const std::vector<int>& side_b) {
  std::vector<int> side(g.n(), -1);
  auto place = [&](const std::vector<int>& verts, int tag) {
    for (int v : verts) {
      if (v < 0 || v >= g.n())
        throw std::invalid_argument("set packing: side vertex out of range");
      if (side[v] != -1) throw std::invalid_argument("set packing: sides overlap");
      side[v] = tag;
    }
  };
  place(side_a, 0);
  place(side_b, 1);
  for (int v = 0; v < g.n(); ++v)
    if (side[v] == -1) throw std::invalid_argument("set packing: sides do not cover the graph");
  for (const auto& [u, v] : g.edges())
    if (side[u] == side[v])
      throw std::invalid_argument("set packing: edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") stays inside one side");
}

bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    (a[i] < b[j] ? i : j)++;
  }
  return false;
}

}  // namespace

SetPackingInstance build_set_packing(const ProblemInstance& inst,
                                     const std::vector<int>& side_a,
                                     const std::vector<int>& side_b) {
  if (inst.d < 4 || inst.d % 2 != 0)
    throw std::invalid_argument("set packing: construction requires even d >= 4");
  const Graph& g = inst.graph;
  check_sides(g, side_a, side_b);

  const int half = inst.d / 2;
  const bool track_a = half % 2 == 1;
  SetPackingInstance sp;
  std::vector<int> elem_of(g.n(), -1);
  auto track = [&](const std::vector<int>& verts, SetPackingInstance::Side s) {
    std::vector<int> ordered = verts;
    std::sort(ordered.begin(), ordered.end());
    for (int v : ordered) {
      elem_of[v] = static_cast<int>(sp.elements.size());
      sp.elements.push_back({v, s});
    }
  };
  track(side_b, SetPackingInstance::Side::kB);
  if (track_a) track(side_a, SetPackingInstance::Side::kA);

  std::vector<int> tags = side_a;
  std::sort(tags.begin(), tags.end());
  for (int a : tags) {
    SetPackingInstance::TaggedSet set;
    set.tag = a;
    const DistanceRow row = bfs_distances(g, a, half - 1);
    for (int v = 0; v < g.n(); ++v)
      if (elem_of[v] != -1 && row.reachable(v)) set.elements.push_back(elem_of[v]);
    std::sort(set.elements.begin(), set.elements.end());
    sp.sets.push_back(std::move(set));
  }
  return sp;
}

PackingSolution greedy_set_packing(const SetPackingInstance& sp) {
  const int k = static_cast<int>(sp.sets.size());
  std::vector<char> alive(k, 1);
  PackingSolution out;
  std::vector<int> chosen_idx;
  for (;;) {
    int pick = -1;
    for (int i = 0; i < k; ++i) {
      if (!alive[i]) continue;
      if (pick == -1 || sp.sets[i].elements.size() < sp.sets[pick].elements.size() ||
          (sp.sets[i].elements.size() == sp.sets[pick].elements.size() &&
           sp.sets[i].tag < sp.sets[pick].tag))
        pick = i;
    }
    if (pick == -1) break;
    alive[pick] = 0;
    chosen_idx.push_back(pick);
    out.chosen_tags.push_back(sp.sets[pick].tag);
    for (int i = 0; i < k; ++i)
      if (alive[i] && intersects(sp.sets[i].elements, sp.sets[pick].elements)) alive[i] = 0;
  }
  out.disjoint = true;
  for (std::size_t i = 0; i < chosen_idx.size() && out.disjoint; ++i)
    for (std::size_t j = i + 1; j < chosen_idx.size(); ++j)
      if (intersects(sp.sets[chosen_idx[i]].elements, sp.sets[chosen_idx[j]].elements)) {
        out.disjoint = false;
        break;
      }
  return out;
}

SolutionSet bipartite_approx(const ProblemInstance& inst) {
  if (inst.d < 4 || inst.d % 2 != 0)
    throw std::invalid_argument("bipartite solver: requires even d >= 4");
  const auto sides = bipartition(inst.graph);
  if (!sides) throw std::invalid_argument("bipartite solver: graph is not bipartite");

  auto one_side = [&](const std::vector<int>& tag_side, const std::vector<int>& other) {
    const auto sp = build_set_packing(inst, tag_side, other);
    const auto packed = greedy_set_packing(sp);
    assert(packed.disjoint);
    SolutionSet sol = is_scattered(inst, packed.chosen_tags);
    assert(sol.certified);
    return sol;
  };
  SolutionSet from_a = one_side(sides->side_a, sides->side_b);
  SolutionSet from_b = one_side(sides->side_b, sides->side_a);
  if (from_a.size() != from_b.size()) return from_a.size() > from_b.size() ? from_a : from_b;
  return from_a.vertices <= from_b.vertices ? from_a : from_b;
}

}  // namespace dscatter
