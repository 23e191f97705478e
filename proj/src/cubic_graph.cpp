#include "gpr/cubic_graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

namespace gpr {

std::string_view to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::NotCubic: return "NotCubic";
    case GraphErrorKind::DuplicateEdge: return "DuplicateEdge";
    case GraphErrorKind::SelfLoop: return "SelfLoop";
    case GraphErrorKind::MalformedLine: return "MalformedLine";
    case GraphErrorKind::NonContiguousIds: return "NonContiguousIds";
  }
  return "Unknown";
}

namespace {

Edge normalized(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

void check_simple(std::span<const std::pair<Vertex, Vertex>> edges, std::size_t num_vertices) {
  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b)
      throw GraphError(GraphErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(a), a);
    if (a >= num_vertices || b >= num_vertices)
      throw GraphError(GraphErrorKind::NonContiguousIds, "vertex id out of range", std::max(a, b));
    sorted.push_back(normalized(a, b));
  }
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw GraphError(GraphErrorKind::DuplicateEdge,
                     "duplicate edge " + std::to_string(dup->lo) + " " + std::to_string(dup->hi), dup->lo);
}

}  // namespace

CubicGraph CubicGraph::from_edges(std::size_t num_vertices, std::span<const std::pair<Vertex, Vertex>> edges) {
  check_simple(edges, num_vertices);

  std::vector<unsigned> degree(num_vertices, 0);
  for (auto [a, b] : edges) {
    ++degree[a];
    ++degree[b];
  }
  for (Vertex v = 0; v < num_vertices; ++v) {
    if (degree[v] != 3)
      throw GraphError(GraphErrorKind::NotCubic,
                       "vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]), v,
                       degree[v]);
  }

  CubicGraph g;
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) g.edges_.push_back(normalized(a, b));
  std::sort(g.edges_.begin(), g.edges_.end());

  g.adjacency_.assign(num_vertices, {});
  g.incident_.assign(num_vertices, {});
  std::fill(degree.begin(), degree.end(), 0);
  for (auto [a, b] : edges) {
    auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), normalized(a, b));
    auto id = static_cast<EdgeId>(it - g.edges_.begin());
    g.adjacency_[a][degree[a]] = b;
    g.incident_[a][degree[a]++] = id;
    g.adjacency_[b][degree[b]] = a;
    g.incident_[b][degree[b]++] = id;
  }
  return g;
}

bool CubicGraph::adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

std::optional<EdgeId> CubicGraph::find_edge(Vertex a, Vertex b) const {
  if (a >= adjacency_.size()) return std::nullopt;
  for (int i = 0; i < 3; ++i)
    if (adjacency_[a][i] == b) return incident_[a][i];
  return std::nullopt;
}

namespace {

bool parse_id(std::string_view tok, Vertex& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

CubicGraph parse_edge_list(std::istream& in) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Edge> seen;
  std::string line;
  std::size_t line_no = 0;
  Vertex max_id = 0;
  bool any = false;

  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    Vertex a = 0, b = 0;
    if (toks.size() != 2 || !parse_id(toks[0], a) || !parse_id(toks[1], b))
      throw GraphError(GraphErrorKind::MalformedLine, "malformed edge on line " + std::to_string(line_no),
                       std::nullopt, std::nullopt, line_no);
    if (a == b)
      throw GraphError(GraphErrorKind::SelfLoop,
                       "self-loop at vertex " + std::to_string(a) + " on line " + std::to_string(line_no), a,
                       std::nullopt, line_no);
    edges.emplace_back(a, b);
    seen.push_back(normalized(a, b));
    max_id = std::max({max_id, a, b});
    any = true;
  }

  std::sort(seen.begin(), seen.end());
  if (auto dup = std::adjacent_find(seen.begin(), seen.end()); dup != seen.end())
    throw GraphError(GraphErrorKind::DuplicateEdge,
                     "duplicate edge " + std::to_string(dup->lo) + " " + std::to_string(dup->hi), dup->lo);

  std::size_t num_vertices = any ? std::size_t{max_id} + 1 : 0;
  std::vector<unsigned> degree(num_vertices, 0);
  for (auto [a, b] : edges) {
    ++degree[a];
    ++degree[b];
  }
  for (Vertex v = 0; v < num_vertices; ++v)
    if (degree[v] == 0)
      throw GraphError(GraphErrorKind::NonContiguousIds, "vertex id " + std::to_string(v) + " never appears", v);

  return CubicGraph::from_edges(num_vertices, edges);
}

CubicGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const CubicGraph& g) {
  for (const auto& e : g.edges()) out << e.lo << ' ' << e.hi << '\n';
}

std::string serialize_edge_list(const CubicGraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace gpr
