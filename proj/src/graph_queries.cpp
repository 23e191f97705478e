#include "gpr/graph_queries.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpr {

std::vector<VertexSet> connected_components(const CubicGraph& g, const std::optional<VertexSet>& restricted_to,
                                            const std::optional<EdgeSet>& without_edges) {
  const auto nv = g.num_vertices();
  auto allowed = [&](Vertex v) { return !restricted_to || restricted_to->contains(v); };

  std::vector<char> seen(nv, 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < nv; ++root) {
    if (seen[root] || !allowed(root)) continue;
    VertexSet comp(nv);
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.insert(x);
      for (int i = 0; i < 3; ++i) {
        Vertex y = g.neighbors(x)[i];
        if (seen[y] || !allowed(y)) continue;
        if (without_edges && without_edges->contains(g.incident_edges(x)[i])) continue;
        seen[y] = 1;
        stack.push_back(y);
      }
    }
    out.push_back(std::move(comp));
  }
  // Roots are visited in increasing id, so a stable sort keeps the
  // smallest-member tie-break.
  std::stable_sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  return out;
}

bool is_connected(const CubicGraph& g) { return connected_components(g).size() <= 1; }

namespace {

int induced_degree(const CubicGraph& g, const VertexSet& u, Vertex v) {
  int d = 0;
  for (Vertex w : g.neighbors(v)) d += u.contains(w) ? 1 : 0;
  return d;
}

}  // namespace

bool is_two_regular(const CubicGraph& g, const VertexSet& u) {
  if (u.universe() != g.num_vertices()) return false;
  for (Vertex v : u.members())
    if (induced_degree(g, u, v) != 2) return false;
  return true;
}

bool is_cycle_graph(const CubicGraph& g, const VertexSet& u) {
  if (u.size() < 3 || !is_two_regular(g, u)) return false;
  return connected_components(g, u).size() == 1;
}

std::size_t EdgeBall::num_edges() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency)
    for (auto w : row) twice += w != kNone ? 1 : 0;
  return twice / 2;
}

BallExtractor::BallExtractor(const CubicGraph& g) : graph_(&g), local_of_(g.num_vertices(), EdgeBall::kNone) {}

EdgeBall BallExtractor::extract(EdgeId e, int radius) {
  if (radius < 0 || radius > kMaxBallRadius) throw std::invalid_argument("edge_ball: radius out of range");
  const CubicGraph& g = *graph_;
  const Edge& ed = g.edge(e);

  EdgeBall ball;
  auto add = [&](Vertex v, std::uint8_t dist) {
    local_of_[v] = static_cast<std::int32_t>(ball.to_global.size());
    ball.to_global.push_back(v);
    ball.distance.push_back(dist);
  };
  add(ed.lo, 0);
  add(ed.hi, 0);
  for (std::size_t head = 0; head < ball.to_global.size(); ++head) {
    if (ball.distance[head] == radius) continue;
    for (Vertex w : g.neighbors(ball.to_global[head]))
      if (local_of_[w] == EdgeBall::kNone) add(w, static_cast<std::uint8_t>(ball.distance[head] + 1));
  }

  ball.adjacency.assign(ball.size(), {EdgeBall::kNone, EdgeBall::kNone, EdgeBall::kNone});
  for (std::size_t i = 0; i < ball.size(); ++i) {
    int slot = 0;
    for (Vertex w : g.neighbors(ball.to_global[i]))
      if (local_of_[w] != EdgeBall::kNone) ball.adjacency[i][slot++] = local_of_[w];
  }

  for (Vertex v : ball.to_global) local_of_[v] = EdgeBall::kNone;
  return ball;
}

EdgeBall edge_ball(const CubicGraph& g, EdgeId e, int radius) { return BallExtractor(g).extract(e, radius); }

}  // namespace gpr
