#include "gpr/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "gpr/graph_queries.hpp"

namespace gpr::oracle {

namespace {

void guard_size(const CubicGraph& g, std::size_t limit, const char* what) {
  if (g.num_vertices() > limit)
    throw TooLarge(std::string(what) + ": " + std::to_string(g.num_vertices()) + " vertices exceeds limit " +
                   std::to_string(limit));
}

}  // namespace

std::vector<std::array<Vertex, 8>> all_8cycles(const CubicGraph& g) {
  guard_size(g, kMaxCensusVertices, "all_8cycles");
  const auto nv = g.num_vertices();
  std::vector<std::array<Vertex, 8>> cycles;
  std::array<Vertex, 8> path{};
  std::vector<char> on_path(nv, 0);

  // Paths start at their minimum vertex s and only visit vertices above s.
  auto dfs = [&](auto&& self, Vertex s, int len) -> void {
    Vertex x = path[len - 1];
    if (len == 8) {
      if (g.adjacent(x, s) && path[1] < path[7]) cycles.push_back(path);
      return;
    }
    for (Vertex y : g.neighbors(x)) {
      if (y <= s || on_path[y]) continue;
      on_path[y] = 1;
      path[len] = y;
      self(self, s, len + 1);
      on_path[y] = 0;
    }
  };
  for (Vertex s = 0; s < nv; ++s) {
    path[0] = s;
    on_path[s] = 1;
    dfs(dfs, s, 1);
    on_path[s] = 0;
  }
  return cycles;
}

std::vector<std::uint32_t> sigma_global(const CubicGraph& g) {
  std::vector<std::uint32_t> counts(g.num_edges(), 0);
  for (const auto& c : all_8cycles(g))
    for (std::size_t i = 0; i < c.size(); ++i) ++counts[*g.find_edge(c[i], c[(i + 1) % c.size()])];
  return counts;
}

std::uint32_t count_8cycles_global(const CubicGraph& g, EdgeId e) { return sigma_global(g).at(e); }

namespace {

std::vector<std::uint32_t> bfs_distances(const CubicGraph& g, Vertex root) {
  constexpr auto kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(g.num_vertices(), kInf);
  std::vector<Vertex> queue{root};
  dist[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Vertex w : g.neighbors(queue[head]))
      if (dist[w] == kInf) {
        dist[w] = dist[queue[head]] + 1;
        queue.push_back(w);
      }
  return dist;
}

// Number of vertices at each distance (unreachable vertices in the last slot),
// interned to small ids shared between two graphs.
class ProfileTable {
 public:
  std::vector<int> intern(const CubicGraph& g) {
    std::vector<int> ids(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto dist = bfs_distances(g, v);
      std::vector<std::uint32_t> hist(g.num_vertices() + 1, 0);
      for (auto d : dist) ++hist[std::min<std::size_t>(d, g.num_vertices())];
      auto [it, inserted] = ids_.try_emplace(std::move(hist), static_cast<int>(ids_.size()));
      ids[v] = it->second;
    }
    return ids;
  }

 private:
  std::map<std::vector<std::uint32_t>, int> ids_;
};

class IsoSearch {
 public:
  IsoSearch(const CubicGraph& pattern, const CubicGraph& target) : p_(pattern), g_(target) {
    ProfileTable table;
    p_profile_ = table.intern(p_);
    g_profile_ = table.intern(g_);

    p_dist_ = bfs_distances(p_, 0);
    order_.push_back(0);
    parent_.assign(p_.num_vertices(), 0);
    std::vector<char> seen(p_.num_vertices(), 0);
    seen[0] = 1;
    for (std::size_t head = 0; head < order_.size(); ++head)
      for (Vertex w : p_.neighbors(order_[head]))
        if (!seen[w]) {
          seen[w] = 1;
          parent_[w] = order_[head];
          order_.push_back(w);
        }
  }

  std::optional<IsoWitness> run() {
    const auto nv = p_.num_vertices();
    if (order_.size() != nv) return std::nullopt;  // disconnected pattern
    {
      auto a = p_profile_, b = g_profile_;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return std::nullopt;
    }
    for (Vertex root = 0; root < nv; ++root) {
      if (g_profile_[root] != p_profile_[0]) continue;
      map_.assign(nv, kUnmapped);
      used_.assign(nv, 0);
      g_dist_ = bfs_distances(g_, root);
      map_[0] = root;
      used_[root] = 1;
      if (assign(1)) return IsoWitness{map_};
    }
    return std::nullopt;
  }

 private:
  static constexpr Vertex kUnmapped = std::numeric_limits<Vertex>::max();

  bool assign(std::size_t idx) {
    if (idx == order_.size()) return true;
    const Vertex pv = order_[idx];
    for (Vertex c : g_.neighbors(map_[parent_[pv]])) {
      if (used_[c] || g_profile_[c] != p_profile_[pv] || g_dist_[c] != p_dist_[pv]) continue;
      if (!consistent(pv, c)) continue;
      map_[pv] = c;
      used_[c] = 1;
      if (assign(idx + 1)) return true;
      map_[pv] = kUnmapped;
      used_[c] = 0;
    }
    return false;
  }

  // Mapped pattern neighbors of pv must land exactly on the used neighbors of c.
  bool consistent(Vertex pv, Vertex c) const {
    int mapped = 0, used = 0;
    for (Vertex q : p_.neighbors(pv)) {
      if (map_[q] == kUnmapped) continue;
      ++mapped;
      if (!g_.adjacent(c, map_[q])) return false;
    }
    for (Vertex w : g_.neighbors(c)) used += used_[w] ? 1 : 0;
    return mapped == used;
  }

  const CubicGraph& p_;
  const CubicGraph& g_;
  std::vector<int> p_profile_, g_profile_;
  std::vector<std::uint32_t> p_dist_, g_dist_;
  std::vector<Vertex> order_, parent_, map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<IsoWitness> find_isomorphism(const CubicGraph& pattern, const CubicGraph& g) {
  guard_size(g, kMaxIsoVertices, "find_isomorphism");
  if (pattern.num_vertices() != g.num_vertices() || pattern.num_edges() != g.num_edges()) return std::nullopt;
  if (g.num_vertices() == 0) return IsoWitness{};
  return IsoSearch(pattern, g).run();
}

RecognitionResult brute_force_recognize(const CubicGraph& g) {
  guard_size(g, kMaxIsoVertices, "brute_force_recognize");
  if (g.num_vertices() % 2 != 0) return RecognitionResult::reject(RejectReason::OracleRejected);
  const int n = static_cast<int>(g.num_vertices() / 2);
  for (const auto& p : enumerate_params(n)) {
    auto pattern = build(p);
    if (auto iso = find_isomorphism(pattern.graph, g)) {
      GpLabeling lab;
      lab.outer.assign(iso->mapping.begin(), iso->mapping.begin() + n);
      lab.inner.assign(iso->mapping.begin() + n, iso->mapping.end());
      return RecognitionResult::accept(p, std::move(lab));
    }
  }
  return RecognitionResult::reject(RejectReason::OracleRejected);
}

CubicGraph random_cubic(std::size_t num_vertices, std::uint64_t seed) {
  if (num_vertices < 4 || num_vertices % 2 != 0)
    throw std::invalid_argument("random_cubic: need an even vertex count >= 4");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> points(3 * num_vertices);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Edge> sorted;

  for (;;) {
    std::iota(points.begin(), points.end(), Vertex{0});
    std::shuffle(points.begin(), points.end(), rng);
    edges.clear();
    sorted.clear();
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      Vertex a = points[i] / 3, b = points[i + 1] / 3;
      if (a == b) simple = false;
      edges.emplace_back(a, b);
      sorted.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    if (!simple) continue;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    auto g = CubicGraph::from_edges(num_vertices, edges);
    if (is_connected(g)) return g;
  }
}

}  // namespace gpr::oracle
