#include "gpr/cycle_census.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "gpr/graph_queries.hpp"

namespace gpr {

std::string_view to_string(CycleLabel label) {
  static constexpr std::array<std::string_view, 8> names{"C0", "C1", "C2", "C3", "C4", "C5", "C6", "C7"};
  return names[static_cast<std::size_t>(label)];
}

namespace {

constexpr std::uint8_t kUnreached = std::numeric_limits<std::uint8_t>::max();

// Counts simple paths of length 7 from local vertex 0 to local vertex 1 that
// do not use the edge 0-1. Each such path closes exactly one 8-cycle through
// the edge, so no symmetry correction is needed.
class PathCounter {
 public:
  explicit PathCounter(const EdgeBall& ball)
      : ball_(ball), to_target_(ball.size(), kUnreached), on_path_(ball.size(), 0) {
    std::vector<std::int32_t> queue{1};
    to_target_[1] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto x = queue[head];
      for (auto y : ball_.adjacency[x]) {
        if (y == EdgeBall::kNone || to_target_[y] != kUnreached) continue;
        to_target_[y] = static_cast<std::uint8_t>(to_target_[x] + 1);
        queue.push_back(y);
      }
    }
  }

  std::uint32_t run() {
    on_path_[0] = 1;
    extend(0, 0);
    return cycles_;
  }

  std::uint64_t steps() const { return steps_; }

 private:
  void extend(std::int32_t x, int depth) {
    const int remaining = kCycleLength - 1 - (depth + 1);
    for (auto y : ball_.adjacency[x]) {
      if (y == EdgeBall::kNone || on_path_[y]) continue;
      if (y == 1) {
        if (remaining == 0) {
          ++steps_;
          ++cycles_;
        }
        continue;
      }
      if (to_target_[y] > remaining) continue;
      ++steps_;
      on_path_[y] = 1;
      extend(y, depth + 1);
      on_path_[y] = 0;
    }
  }

  const EdgeBall& ball_;
  std::vector<std::uint8_t> to_target_;
  std::vector<char> on_path_;
  std::uint32_t cycles_ = 0;
  std::uint64_t steps_ = 0;
};

std::uint32_t count_in_ball(const EdgeBall& ball, std::uint64_t* steps) {
  PathCounter counter(ball);
  auto cycles = counter.run();
  if (steps) *steps += counter.steps();
  return cycles;
}

void census_range(const CubicGraph& g, EdgeId begin, EdgeId end, std::vector<std::uint32_t>& per_edge,
                  std::uint64_t& steps) {
  BallExtractor extractor(g);
  for (EdgeId e = begin; e < end; ++e) per_edge[e] = count_in_ball(extractor.extract(e, kCensusRadius), &steps);
}

}  // namespace

std::uint32_t count_8cycles_through(const CubicGraph& g, EdgeId e, std::uint64_t* steps) {
  return count_in_ball(edge_ball(g, e, kCensusRadius), steps);
}

SigmaPartition sigma_partition(const CubicGraph& g, unsigned threads) {
  const auto m = static_cast<EdgeId>(g.num_edges());
  SigmaPartition out;
  out.per_edge.assign(m, 0);

  threads = std::clamp(threads, 1u, std::max(1u, m / 64));
  if (threads == 1) {
    census_range(g, 0, m, out.per_edge, out.path_steps);
  } else {
    std::vector<std::uint64_t> steps(threads, 0);
    {
      std::vector<std::jthread> workers;
      const EdgeId chunk = (m + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        EdgeId lo = std::min(m, t * chunk), hi = std::min(m, lo + chunk);
        workers.emplace_back([&, t, lo, hi] { census_range(g, lo, hi, out.per_edge, steps[t]); });
      }
    }
    for (auto s : steps) out.path_steps += s;
  }

  for (EdgeId e = 0; e < m; ++e) {
    auto [it, inserted] = out.parts.try_emplace(out.per_edge[e], m);
    it->second.insert(e);
  }
  return out;
}

namespace {

bool divides(int n, long long x) { return ((x % n) + n) % n == 0; }

bool divides_pm(int n, long long base, long long offset) {
  return divides(n, base + offset) || divides(n, base - offset);
}

}  // namespace

std::vector<CycleLabel> present_cycle_types(const GpParams& p) {
  const long long n = p.n(), k = p.k();
  std::vector<CycleLabel> out;
  // Inner rims are themselves 8-cycles.
  if (n % 8 == 0 && (8 * k == n || 8 * k == 3 * n)) out.push_back(CycleLabel::C0);
  if (divides_pm(p.n(), 5 * k, 1)) out.push_back(CycleLabel::C1);
  if (divides_pm(p.n(), 4 * k, 2)) out.push_back(CycleLabel::C2);
  if (divides_pm(p.n(), 3 * k, 3)) out.push_back(CycleLabel::C3);
  if (divides_pm(p.n(), 2 * k, 4)) out.push_back(CycleLabel::C4);
  if (k == 5) out.push_back(CycleLabel::C5);
  if (n == 2 * k + 2) out.push_back(CycleLabel::C6);
  // The four-spoke cycle u0 u1 v1 v_{k+1} u_{k+1} u_k v_k v0 revisits u1 when k = 1.
  if (k != 1) out.push_back(CycleLabel::C7);
  return out;
}

SigmaTriple predict_sigma(const GpParams& p) {
  if (p.n() <= kLargeThreshold)
    throw SmallGraphError("predict_sigma: n = " + std::to_string(p.n()) + " is not large (n must exceed 40)");
  SigmaTriple total;
  int non_c7 = 0;
  for (auto label : present_cycle_types(p)) {
    total = total + cycle_type(label).delta;
    non_c7 += label != CycleLabel::C7 ? 1 : 0;
  }
  if (non_c7 > 1) throw std::logic_error("predict_sigma: two non-C7 cycle types coexist for " + to_string(p));
  return total;
}

std::vector<SigmaTriple> admissible_large_triples() {
  const auto base = cycle_type(CycleLabel::C7).delta;
  std::vector<SigmaTriple> out{base};
  for (const auto& t : kCycleTypes)
    if (t.label != CycleLabel::C7) out.push_back(base + t.delta);
  out.push_back(cycle_type(CycleLabel::C3).delta);
  return out;
}

}  // namespace gpr
