#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gpr/cubic_graph.hpp"

namespace gpr {

/// Components of g, optionally restricted to a vertex subset and with some
/// edges deleted. Sorted by decreasing size, ties by smallest member id.
std::vector<VertexSet> connected_components(const CubicGraph& g,
                                            const std::optional<VertexSet>& restricted_to = std::nullopt,
                                            const std::optional<EdgeSet>& without_edges = std::nullopt);

bool is_connected(const CubicGraph& g);

// g[u] is a single cycle through all of u (|u| >= 3).
bool is_cycle_graph(const CubicGraph& g, const VertexSet& u);

// Every vertex of u has exactly two neighbors inside u.
bool is_two_regular(const CubicGraph& g, const VertexSet& u);

/// Induced subgraph on the vertices within `radius` of either endpoint of an
/// edge. Local vertex 0 and 1 are the edge endpoints (lo, hi); local ids grow
/// with BFS distance.
struct EdgeBall {
  static constexpr std::int32_t kNone = -1;

  std::vector<Vertex> to_global;
  std::vector<std::array<std::int32_t, 3>> adjacency;  // padded with kNone
  std::vector<std::uint8_t> distance;                  // to the nearer endpoint

  std::size_t size() const { return to_global.size(); }
  std::size_t num_edges() const;
};

inline constexpr int kMaxBallRadius = 8;

/// Reusable extractor; keeps an O(|V|) scratch index so each extraction
/// costs only the size of the ball. Not thread-safe; use one per thread.
class BallExtractor {
 public:
  explicit BallExtractor(const CubicGraph& g);

  EdgeBall extract(EdgeId e, int radius);

 private:
  const CubicGraph* graph_;
  std::vector<std::int32_t> local_of_;
};

// Throws std::invalid_argument if radius > kMaxBallRadius.
EdgeBall edge_ball(const CubicGraph& g, EdgeId e, int radius);

}  // namespace gpr
