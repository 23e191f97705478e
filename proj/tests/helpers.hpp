#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "gpr/cubic_graph.hpp"

namespace gpr::testing {

inline std::vector<std::pair<Vertex, Vertex>> edge_pairs(const CubicGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.lo, e.hi);
  return out;
}

inline CubicGraph k4() {
  std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return CubicGraph::from_edges(4, e);
}

inline CubicGraph k33() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 3; b < 6; ++b) e.emplace_back(a, b);
  return CubicGraph::from_edges(6, e);
}

inline CubicGraph two_k4() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex base : {0u, 4u})
    for (Vertex a = 0; a < 4; ++a)
      for (Vertex b = a + 1; b < 4; ++b) e.emplace_back(base + a, base + b);
  return CubicGraph::from_edges(8, e);
}

/// Same graph with shuffled edge order, flipped endpoints, and optionally
/// a random vertex relabeling.
inline CubicGraph scrambled(const CubicGraph& g, std::uint64_t seed, bool relabel) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(g.num_vertices());
  for (Vertex v = 0; v < perm.size(); ++v) perm[v] = v;
  if (relabel) std::shuffle(perm.begin(), perm.end(), rng);
  auto edges = edge_pairs(g);
  std::shuffle(edges.begin(), edges.end(), rng);
  for (auto& [a, b] : edges) {
    a = perm[a];
    b = perm[b];
    if (rng() & 1) std::swap(a, b);
  }
  return CubicGraph::from_edges(g.num_vertices(), edges);
}

}  // namespace gpr::testing
