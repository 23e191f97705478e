#include "gpr/recognizer.hpp"

#include <algorithm>

#include "gpr/cycle_census.hpp"
#include "gpr/graph_queries.hpp"
#include "gpr/oracle.hpp"

namespace gpr {

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::NotCubic: return "NotCubic";
    case RejectReason::OddOrder: return "OddOrder";
    case RejectReason::Disconnected: return "Disconnected";
    case RejectReason::NoSizeNPart: return "NoSizeNPart";
    case RejectReason::CandidateNotRim: return "CandidateNotRim";
    case RejectReason::ExtendFailed: return "ExtendFailed";
    case RejectReason::OracleRejected: return "OracleRejected";
  }
  return "Unknown";
}

bool is_exceptional_order(std::size_t num_vertices) {
  return std::find(kExceptionalOrders.begin(), kExceptionalOrders.end(), num_vertices) != kExceptionalOrders.end();
}

namespace {

// Cyclic order of a vertex set known to induce a single cycle, starting at
// its smallest vertex and stepping to the smaller rim neighbor first.
std::vector<Vertex> walk_cycle(const CubicGraph& g, const VertexSet& rim) {
  const auto start = rim.members().front();
  std::vector<Vertex> order;
  order.reserve(rim.size());
  Vertex prev = start, cur = start;
  do {
    order.push_back(cur);
    std::optional<Vertex> next;
    for (Vertex w : g.neighbors(cur)) {
      if (!rim.contains(w) || (w == prev && cur != start)) continue;
      if (!next || w < *next) next = w;
    }
    prev = cur;
    cur = *next;
  } while (cur != start && order.size() <= rim.size());
  return order;
}

}  // namespace

RecognitionResult extend(const CubicGraph& g, const VertexSet& u) {
  const auto order2 = g.num_vertices();
  if (order2 % 2 != 0 || order2 < 6 || u.universe() != order2) return RecognitionResult::reject(RejectReason::ExtendFailed);
  const auto n = order2 / 2;

  VertexSet rim = u;
  if (rim.size() != n || !is_cycle_graph(g, rim)) {
    if (rim.size() != n) return RecognitionResult::reject(RejectReason::ExtendFailed);
    rim = rim.complement();
    if (!is_cycle_graph(g, rim)) return RecognitionResult::reject(RejectReason::ExtendFailed);
  }

  GpLabeling lab;
  lab.outer = walk_cycle(g, rim);
  if (lab.outer.size() != n) return RecognitionResult::reject(RejectReason::ExtendFailed);

  std::vector<char> taken(order2, 0);
  lab.inner.reserve(n);
  for (Vertex ui : lab.outer) {
    // g[rim] is 2-regular, so exactly one neighbor leaves the rim.
    Vertex spoke_end = *std::find_if(g.neighbors(ui).begin(), g.neighbors(ui).end(),
                                     [&](Vertex w) { return !rim.contains(w); });
    if (taken[spoke_end]) return RecognitionResult::reject(RejectReason::ExtendFailed);
    taken[spoke_end] = 1;
    lab.inner.push_back(spoke_end);
  }

  std::size_t k = 1;
  while (k < n && !g.adjacent(lab.inner[0], lab.inner[k])) ++k;
  if (k == n || 2 * k == n) return RecognitionResult::reject(RejectReason::ExtendFailed);
  for (std::size_t i = 1; i < n; ++i)
    if (!g.adjacent(lab.inner[i], lab.inner[(i + k) % n])) return RecognitionResult::reject(RejectReason::ExtendFailed);

  const auto kk = std::min(k, n - k);
  return RecognitionResult::accept(GpParams(static_cast<int>(n), static_cast<int>(kk)), std::move(lab));
}

RecognitionResult main_recognize(const CubicGraph& g, unsigned threads) {
  const auto n = g.num_vertices() / 2;
  const auto partition = sigma_partition(g, threads);

  auto with_steps = [&](RecognitionResult r) {
    r.sigma_steps = partition.path_steps;
    return r;
  };

  // parts is keyed by sigma ascending, so the first minimum wins ties.
  const EdgeSet* smallest = nullptr;
  for (const auto& [sigma, part] : partition.parts)
    if (!smallest || part.size() < smallest->size()) smallest = &part;
  if (!smallest || smallest->size() != n) return with_steps(RecognitionResult::reject(RejectReason::NoSizeNPart));

  std::vector<std::uint8_t> degree(g.num_vertices(), 0);
  VertexSet endpoints(g.num_vertices());
  for (EdgeId e : smallest->members()) {
    const auto& ed = g.edge(e);
    ++degree[ed.lo];
    ++degree[ed.hi];
    endpoints.insert(ed.lo);
    endpoints.insert(ed.hi);
  }
  const auto max_degree = *std::max_element(degree.begin(), degree.end());

  VertexSet candidate = max_degree == 1 ? connected_components(g, std::nullopt, *smallest).front()
                                        : std::move(endpoints);
  if (!is_two_regular(g, candidate)) return with_steps(RecognitionResult::reject(RejectReason::CandidateNotRim));
  return with_steps(extend(g, candidate));
}

RecognitionResult recognize(const CubicGraph& g, unsigned threads) {
  if (g.num_vertices() % 2 != 0) return RecognitionResult::reject(RejectReason::OddOrder);
  if (!is_connected(g)) return RecognitionResult::reject(RejectReason::Disconnected);

  auto result = is_exceptional_order(g.num_vertices()) ? oracle::brute_force_recognize(g) : main_recognize(g, threads);
  if (result.accepted && !verify_mapping(g, *result.params, *result.labeling)) {
    auto steps = result.sigma_steps;
    result = RecognitionResult::reject(RejectReason::ExtendFailed);
    result.sigma_steps = steps;
  }
  return result;
}

bool verify_mapping(const CubicGraph& g, const GpParams& p, const GpLabeling& lab) {
  const auto n = static_cast<std::size_t>(p.n());
  if (g.num_vertices() != 2 * n || g.num_edges() != 3 * n) return false;
  if (lab.outer.size() != n || lab.inner.size() != n) return false;

  std::vector<char> used(2 * n, 0);
  for (const auto* side : {&lab.outer, &lab.inner})
    for (Vertex v : *side) {
      if (v >= 2 * n || used[v]) return false;
      used[v] = 1;
    }
  // The labeled edges are 3n distinct pairs under a bijection; with
  // |E(g)| = 3n, containment is equality.
  for (auto [a, b] : gp_edges(p, lab))
    if (!g.adjacent(a, b)) return false;
  return true;
}

bool verify_mapping(const CubicGraph& g, int n, int k, const GpLabeling& lab) {
  auto p = GpParams::checked(n, k);
  return p && verify_mapping(g, *p, lab);
}

}  // namespace gpr
