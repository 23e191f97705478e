#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpr/cubic_graph.hpp"

namespace gpr {

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters of GP(n, k): n >= 3 and 1 <= k with 2k < n.
class GpParams {
 public:
  // Throws InvalidParams.
  GpParams(int n, int k);

  static std::optional<GpParams> checked(int n, int k) noexcept;
  static bool valid(int n, int k) noexcept { return n >= 3 && k >= 1 && 2 * k < n; }

  int n() const { return n_; }
  int k() const { return k_; }

  friend auto operator<=>(const GpParams&, const GpParams&) = default;

 private:
  struct Unchecked {};
  GpParams(int n, int k, Unchecked) : n_(n), k_(k) {}

  int n_;
  int k_;
};

std::string to_string(const GpParams& p);

/// Vertex ids assigned to u_0..u_{n-1} (outer) and v_0..v_{n-1} (inner).
struct GpLabeling {
  std::vector<Vertex> outer;
  std::vector<Vertex> inner;

  friend bool operator==(const GpLabeling&, const GpLabeling&) = default;
};

struct GpGraph {
  CubicGraph graph;
  GpLabeling labeling;
};

/// GP(n, k) with u_i -> i and v_i -> n + i.
GpGraph build(const GpParams& p);

/// Edge list of GP(n, k) under an arbitrary labeling, in rim / spoke / inner
/// order per index i. Used by construction and witness checking alike.
std::vector<std::pair<Vertex, Vertex>> gp_edges(const GpParams& p, const GpLabeling& lab);

struct InnerCycles {
  int count;
  int length;
};

// gcd(n, k) inner rims of length n / gcd(n, k).
InnerCycles inner_cycle_structure(const GpParams& p);

// All valid (n, k), k ascending. Empty for n < 3.
std::vector<GpParams> enumerate_params(int n);

enum class EdgeClass { Outer, Spoke, Inner };

/// Class of every edge of g (indexed by EdgeId) under a GP labeling.
/// Throws std::invalid_argument if some edge of the labeled GP(n, k) is
/// missing from g.
std::vector<EdgeClass> edge_classes(const CubicGraph& g, const GpParams& p, const GpLabeling& lab);

}  // namespace gpr
