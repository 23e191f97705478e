#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "gpr/cubic_graph.hpp"
#include "gpr/petersen.hpp"

namespace gpr {

enum class RejectReason {
  NotCubic,
  OddOrder,
  Disconnected,
  NoSizeNPart,
  CandidateNotRim,
  ExtendFailed,
  OracleRejected,
};

std::string_view to_string(RejectReason reason);

struct RecognitionResult {
  bool accepted = false;
  std::optional<GpParams> params;
  std::optional<GpLabeling> labeling;
  std::optional<RejectReason> reason;
  // Path extensions spent in the sigma census (0 when it was not run).
  std::uint64_t sigma_steps = 0;

  static RecognitionResult accept(GpParams p, GpLabeling lab) {
    return {true, p, std::move(lab), std::nullopt, 0};
  }
  static RecognitionResult reject(RejectReason r) { return {false, std::nullopt, std::nullopt, r, 0}; }
};

// Vertex counts at which some GP(n, k) has a single-part sigma partition.
inline constexpr std::array<std::size_t, 9> kExceptionalOrders{6, 8, 10, 16, 20, 24, 26, 48, 52};

bool is_exceptional_order(std::size_t num_vertices);

/// Tries to complete the vertex set u (an outer or inner rim candidate) into
/// a GP(n, k) labeling of g, where |V(g)| = 2n.
///
/// If g[u] is not an n-cycle, the complement is tried instead. The rim is
/// walked from its smallest vertex; each rim vertex's third neighbor becomes
/// its spoke partner, and k is the smallest offset at which v_0 is adjacent
/// to v_k. The spoke partners must be distinct and every v_i v_{i+k} must be
/// an edge; since 2k != n this accounts for all 3n edges. Reported k is
/// min(k, n - k).
RecognitionResult extend(const CubicGraph& g, const VertexSet& u);

/// Sigma-partition recognizer for connected cubic graphs outside the
/// exceptional orders. Picks the smallest sigma part (ties by smaller sigma),
/// turns it into a rim vertex set and hands it to extend().
RecognitionResult main_recognize(const CubicGraph& g, unsigned threads = 1);

/// Full dispatch: order and connectivity checks, oracle fallback at the
/// exceptional orders, main_recognize otherwise. Every accept is checked
/// with verify_mapping before it is returned.
RecognitionResult recognize(const CubicGraph& g, unsigned threads = 1);

bool verify_mapping(const CubicGraph& g, const GpParams& p, const GpLabeling& lab);
// Invalid (n, k) yields false.
bool verify_mapping(const CubicGraph& g, int n, int k, const GpLabeling& lab);

}  // namespace gpr
