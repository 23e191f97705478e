#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "gpr/cubic_graph.hpp"
#include "gpr/petersen.hpp"

namespace gpr {

/// Per-class 8-cycle counts (outer rim, spokes, inner rims) for a GP graph,
/// or per-class contributions of one 8-cycle orbit.
struct SigmaTriple {
  std::uint32_t outer = 0;
  std::uint32_t spoke = 0;
  std::uint32_t inner = 0;

  friend bool operator==(const SigmaTriple&, const SigmaTriple&) = default;
  friend SigmaTriple operator+(SigmaTriple a, const SigmaTriple& b) {
    return {a.outer + b.outer, a.spoke + b.spoke, a.inner + b.inner};
  }

  bool uniform() const { return outer == spoke && spoke == inner; }
};

enum class CycleLabel : std::uint8_t { C0, C1, C2, C3, C4, C5, C6, C7 };

struct CycleType {
  CycleLabel label;
  SigmaTriple delta;
};

// The eight 8-cycle orbit shapes of GP(n, k) and their per-edge contributions.
inline constexpr std::array<CycleType, 8> kCycleTypes{{
    {CycleLabel::C0, {0, 0, 1}},
    {CycleLabel::C1, {1, 2, 5}},
    {CycleLabel::C2, {2, 2, 4}},
    {CycleLabel::C3, {3, 2, 3}},
    {CycleLabel::C4, {4, 2, 2}},
    {CycleLabel::C5, {5, 2, 1}},
    {CycleLabel::C6, {1, 2, 1}},
    {CycleLabel::C7, {2, 4, 2}},
}};

constexpr const CycleType& cycle_type(CycleLabel label) { return kCycleTypes[static_cast<std::size_t>(label)]; }

std::string_view to_string(CycleLabel label);

inline constexpr int kCycleLength = 8;
inline constexpr int kCensusRadius = 4;

/// Number of distinct 8-cycles through edge e, counted inside the radius-4
/// ball around e. If `steps` is non-null, the number of path extensions
/// performed is added to it.
std::uint32_t count_8cycles_through(const CubicGraph& g, EdgeId e, std::uint64_t* steps = nullptr);

/// Edges grouped by their 8-cycle count.
struct SigmaPartition {
  std::map<std::uint32_t, EdgeSet> parts;
  std::vector<std::uint32_t> per_edge;
  std::uint64_t path_steps = 0;
};

/// Computes sigma for every edge. With threads > 1 the edges are split into
/// contiguous chunks; the result is identical to the sequential one.
SigmaPartition sigma_partition(const CubicGraph& g, unsigned threads = 1);

class SmallGraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// n at or below this bound is "small": several non-C7 shapes may coexist.
inline constexpr int kLargeThreshold = 40;

/// Non-C7 cycle types present in GP(n, k), from the closed-form existence
/// conditions. Valid for any n, though more than one may fire when n <= 40.
std::vector<CycleLabel> present_cycle_types(const GpParams& p);

/// Predicted (outer, spoke, inner) sigma for large GP(n, k).
/// Throws SmallGraphError for n <= 40, std::logic_error if two non-C7
/// shapes would fire.
SigmaTriple predict_sigma(const GpParams& p);

/// The nine triples realizable by large GP graphs: the bare C7 value, C7
/// plus one of C0..C6, and the prism value (3,2,3) of GP(n,1).
std::vector<SigmaTriple> admissible_large_triples();

}  // namespace gpr
