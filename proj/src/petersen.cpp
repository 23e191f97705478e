#include "gpr/petersen.hpp"

#include <numeric>

namespace gpr {

GpParams::GpParams(int n, int k) : n_(n), k_(k) {
  if (!valid(n, k))
    throw InvalidParams("invalid parameters: GP(" + std::to_string(n) + "," + std::to_string(k) +
                        ") needs n >= 3 and 1 <= k < n/2");
}

std::optional<GpParams> GpParams::checked(int n, int k) noexcept {
  if (!valid(n, k)) return std::nullopt;
  return GpParams(n, k, Unchecked{});
}

std::string to_string(const GpParams& p) {
  return "GP(" + std::to_string(p.n()) + "," + std::to_string(p.k()) + ")";
}

std::vector<std::pair<Vertex, Vertex>> gp_edges(const GpParams& p, const GpLabeling& lab) {
  const int n = p.n();
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(3 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(lab.outer[i], lab.outer[(i + 1) % n]);
    edges.emplace_back(lab.outer[i], lab.inner[i]);
    edges.emplace_back(lab.inner[i], lab.inner[(i + p.k()) % n]);
  }
  return edges;
}

GpGraph build(const GpParams& p) {
  const int n = p.n();
  GpLabeling lab;
  lab.outer.resize(n);
  lab.inner.resize(n);
  std::iota(lab.outer.begin(), lab.outer.end(), Vertex{0});
  std::iota(lab.inner.begin(), lab.inner.end(), static_cast<Vertex>(n));
  auto edges = gp_edges(p, lab);
  return {CubicGraph::from_edges(2 * static_cast<std::size_t>(n), edges), std::move(lab)};
}

InnerCycles inner_cycle_structure(const GpParams& p) {
  int g = std::gcd(p.n(), p.k());
  return {g, p.n() / g};
}

std::vector<GpParams> enumerate_params(int n) {
  std::vector<GpParams> out;
  for (int k = 1; 2 * k < n; ++k) out.emplace_back(n, k);
  return out;
}

std::vector<EdgeClass> edge_classes(const CubicGraph& g, const GpParams& p, const GpLabeling& lab) {
  std::vector<EdgeClass> out(g.num_edges(), EdgeClass::Outer);
  const auto edges = gp_edges(p, lab);
  for (std::size_t j = 0; j < edges.size(); ++j) {
    auto id = g.find_edge(edges[j].first, edges[j].second);
    if (!id) throw std::invalid_argument("edge_classes: labeling does not match graph");
    out[*id] = static_cast<EdgeClass>(j % 3);
  }
  return out;
}

}  // namespace gpr
