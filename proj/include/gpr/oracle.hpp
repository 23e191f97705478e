#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gpr/cubic_graph.hpp"
#include "gpr/petersen.hpp"
#include "gpr/recognizer.hpp"

// Brute-force reference implementations. Nothing here uses the locality
// shortcut or the sigma partition.
namespace gpr::oracle {

class TooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kMaxCensusVertices = 200;
inline constexpr std::size_t kMaxIsoVertices = 120;

/// Every 8-cycle of g as a vertex sequence, each cycle listed once: it
/// starts at its smallest vertex and the second vertex is smaller than the
/// last. Throws TooLarge above kMaxCensusVertices.
std::vector<std::array<Vertex, 8>> all_8cycles(const CubicGraph& g);

// Per-edge 8-cycle counts from one whole-graph enumeration.
std::vector<std::uint32_t> sigma_global(const CubicGraph& g);

std::uint32_t count_8cycles_global(const CubicGraph& g, EdgeId e);

/// Bijection from GP(n, k) vertex ids (u_i = i, v_i = n + i) onto g.
struct IsoWitness {
  std::vector<Vertex> mapping;
};

/// Backtracking isomorphism search GP(n, k) -> g with distance-profile
/// pruning. Throws TooLarge above kMaxIsoVertices.
std::optional<IsoWitness> find_isomorphism(const CubicGraph& pattern, const CubicGraph& g);

/// Tries every valid k for n = |V(g)|/2. Rejects with OracleRejected.
RecognitionResult brute_force_recognize(const CubicGraph& g);

/// Seeded configuration-model sample of a simple connected cubic graph.
/// Throws std::invalid_argument unless num_vertices is even and >= 4.
CubicGraph random_cubic(std::size_t num_vertices, std::uint64_t seed);

}  // namespace gpr::oracle
