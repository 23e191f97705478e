#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gpr {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex lo;
  Vertex hi;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Dense membership set over ids 0..universe-1.
template <class Tag>
class DenseSet {
 public:
  DenseSet() = default;
  explicit DenseSet(std::size_t universe) : bits_(universe, false) {}

  static DenseSet of(std::size_t universe, std::span<const std::uint32_t> ids) {
    DenseSet s(universe);
    for (auto id : ids) s.insert(id);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(std::uint32_t id) const { return id < bits_.size() && bits_[id]; }

  void insert(std::uint32_t id) {
    if (id >= bits_.size()) throw std::out_of_range("DenseSet::insert: id out of range");
    if (!bits_[id]) {
      bits_[id] = true;
      ++count_;
    }
  }

  void erase(std::uint32_t id) {
    if (contains(id)) {
      bits_[id] = false;
      --count_;
    }
  }

  DenseSet complement() const {
    DenseSet out(bits_.size());
    for (std::uint32_t i = 0; i < bits_.size(); ++i)
      if (!bits_[i]) out.insert(i);
    return out;
  }

  // Members in ascending order.
  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    out.reserve(count_);
    for (std::uint32_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.push_back(i);
    return out;
  }

  friend bool operator==(const DenseSet& a, const DenseSet& b) { return a.bits_ == b.bits_; }

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

struct VertexTag;
struct EdgeTag;
using VertexSet = DenseSet<VertexTag>;
using EdgeSet = DenseSet<EdgeTag>;

enum class GraphErrorKind { NotCubic, DuplicateEdge, SelfLoop, MalformedLine, NonContiguousIds };

std::string_view to_string(GraphErrorKind kind);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, std::string message, std::optional<Vertex> vertex = {},
             std::optional<unsigned> degree = {}, std::optional<std::size_t> line = {})
      : std::runtime_error(std::move(message)),
        kind_(kind),
        vertex_(vertex),
        degree_(degree),
        line_(line) {}

  GraphErrorKind kind() const { return kind_; }
  std::optional<Vertex> vertex() const { return vertex_; }
  std::optional<unsigned> degree() const { return degree_; }
  std::optional<std::size_t> line() const { return line_; }

 private:
  GraphErrorKind kind_;
  std::optional<Vertex> vertex_;
  std::optional<unsigned> degree_;
  std::optional<std::size_t> line_;
};

/// Immutable simple 3-regular graph on vertices 0..num_vertices()-1.
///
/// Edges are stored once, in canonical (lo, hi) lexicographic order, and
/// EdgeIds index that order. Each vertex keeps its three neighbors in the
/// order the edges were supplied to from_edges(), together with the EdgeId
/// of each incident edge.
class CubicGraph {
 public:
  CubicGraph() = default;

  /// Validates and builds. Throws GraphError on self-loops, duplicate
  /// edges, ids >= num_vertices, or any vertex of degree != 3.
  static CubicGraph from_edges(std::size_t num_vertices, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::array<Vertex, 3>& neighbors(Vertex v) const { return adjacency_[v]; }
  const std::array<EdgeId, 3>& incident_edges(Vertex v) const { return incident_[v]; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  bool adjacent(Vertex a, Vertex b) const;
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

 private:
  std::vector<std::array<Vertex, 3>> adjacency_;
  std::vector<std::array<EdgeId, 3>> incident_;
  std::vector<Edge> edges_;
};

/// Parses the whitespace edge-list format: one "a b" pair per line, '#'
/// comments and blank lines ignored, vertex count = max id + 1.
CubicGraph parse_edge_list(std::istream& in);
CubicGraph parse_edge_list(std::string_view text);

/// Canonical edge order, one "lo hi" per line.
void write_edge_list(std::ostream& out, const CubicGraph& g);
std::string serialize_edge_list(const CubicGraph& g);

}  // namespace gpr
