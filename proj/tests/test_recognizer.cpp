#include <doctest.h>

#include <random>

#include "gpr/cycle_census.hpp"
#include "gpr/graph_queries.hpp"
#include "gpr/oracle.hpp"
#include "gpr/recognizer.hpp"
#include "helpers.hpp"

using namespace gpr;

namespace {

VertexSet vertex_set(std::size_t universe, const std::vector<Vertex>& ids) {
  VertexSet s(universe);
  for (auto v : ids) s.insert(v);
  return s;
}

void check_accepts(const RecognitionResult& r, const CubicGraph& g, int n, std::optional<int> k = std::nullopt) {
  REQUIRE(r.accepted);
  REQUIRE(r.params);
  REQUIRE(r.labeling);
  CHECK_FALSE(r.reason);
  CHECK(r.params->n() == n);
  if (k) CHECK(r.params->k() == *k);
  CHECK(verify_mapping(g, *r.params, *r.labeling));
}

}  // namespace

TEST_CASE("extend from the outer rim") {
  auto gp = build(GpParams(9, 2));
  auto r = extend(gp.graph, vertex_set(18, gp.labeling.outer));
  check_accepts(r, gp.graph, 9, 2);
}

TEST_CASE("extend from a single inner rim recovers the inverse step") {
  auto gp = build(GpParams(13, 5));
  auto r = extend(gp.graph, vertex_set(26, gp.labeling.inner));
  // 5 * 8 = 40 = 1 (mod 13); normalized min(8, 5) = 5.
  check_accepts(r, gp.graph, 13, 5);
  CHECK(r.labeling->outer[0] == 13u);
}

TEST_CASE("extend swaps to the complement when the inner rims are split") {
  auto gp = build(GpParams(12, 3));
  auto r = extend(gp.graph, vertex_set(24, gp.labeling.inner));
  check_accepts(r, gp.graph, 12, 3);
  CHECK(r.labeling->outer == gp.labeling.outer);
}

TEST_CASE("extend rejects bad rims") {
  auto gp = build(GpParams(50, 5));
  CHECK_FALSE(extend(gp.graph, VertexSet(100)).accepted);
  CHECK(extend(gp.graph, VertexSet(100)).reason == RejectReason::ExtendFailed);
  CHECK_FALSE(extend(gp.graph, VertexSet(7)).accepted);

  std::vector<Vertex> first(gp.labeling.outer.begin(), gp.labeling.outer.begin() + 49);
  first.push_back(gp.labeling.inner[0]);
  CHECK_FALSE(extend(gp.graph, vertex_set(100, first)).accepted);

  CHECK_FALSE(extend(testing::k4(), vertex_set(4, {0, 1})).accepted);
}

TEST_CASE("extend rejects a spoke step of n/2") {
  // Rim 0..7 with partners 8..15. Partners are joined to their antipodes and by
  // the matching (0,5) (1,6) (2,7) (3,4), so the first partner adjacent to v_0
  // is v_4 and every v_i v_{i+4} exists, yet the graph is not GP(8,4).
  const Vertex n = 8;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n + i);
  }
  for (Vertex i = 0; i < n / 2; ++i) e.emplace_back(n + i, n + i + n / 2);
  for (auto [a, b] : std::initializer_list<std::pair<Vertex, Vertex>>{{0, 5}, {1, 6}, {2, 7}, {3, 4}})
    e.emplace_back(n + a, n + b);
  auto g = CubicGraph::from_edges(2 * n, e);
  std::vector<Vertex> rim(n);
  for (Vertex i = 0; i < n; ++i) rim[i] = i;
  auto r = extend(g, vertex_set(16, rim));
  CHECK_FALSE(r.accepted);
  CHECK(r.reason == RejectReason::ExtendFailed);
}

TEST_CASE("main_recognize on large GP graphs") {
  for (auto [n, k] : std::initializer_list<std::pair<int, int>>{{50, 5}, {41, 1}, {43, 1}, {60, 15}, {82, 40}}) {
    CAPTURE(n);
    auto gp = build(GpParams(n, k));
    auto r = main_recognize(gp.graph);
    check_accepts(r, gp.graph, n, k);
    CHECK(r.sigma_steps > 0);
  }
}

TEST_CASE("main_recognize rejects a random 100-vertex cubic graph like the oracle") {
  auto g = oracle::random_cubic(100, 2024);
  auto fast = main_recognize(g);
  CHECK_FALSE(fast.accepted);
  CHECK((fast.reason == RejectReason::NoSizeNPart || fast.reason == RejectReason::CandidateNotRim ||
         fast.reason == RejectReason::ExtendFailed));
  CHECK_FALSE(oracle::brute_force_recognize(g).accepted);
}

TEST_CASE("recognize dispatch") {
  SUBCASE("Petersen graph via the exceptional-order fallback") {
    auto gp = build(GpParams(5, 2));
    check_accepts(recognize(gp.graph), gp.graph, 5, 2);
    CHECK(recognize(gp.graph).sigma_steps == 0);
  }
  SUBCASE("GP(26,5) via the fallback") {
    auto gp = build(GpParams(26, 5));
    check_accepts(recognize(gp.graph), gp.graph, 26, 5);
  }
  SUBCASE("K4 is rejected, matching the oracle") {
    auto r = recognize(testing::k4());
    CHECK_FALSE(r.accepted);
    CHECK(r.reason == RejectReason::NoSizeNPart);
    CHECK_FALSE(oracle::brute_force_recognize(testing::k4()).accepted);
  }
  SUBCASE("K33 is rejected by the oracle") {
    auto r = recognize(testing::k33());
    CHECK_FALSE(r.accepted);
    CHECK(r.reason == RejectReason::OracleRejected);
  }
  SUBCASE("disconnected input") {
    auto r = recognize(testing::two_k4());
    CHECK_FALSE(r.accepted);
    CHECK(r.reason == RejectReason::Disconnected);
  }
  SUBCASE("scrambled labels still recognized") {
    auto gp = build(GpParams(37, 6));
    auto g = testing::scrambled(gp.graph, 5, true);
    check_accepts(recognize(g), g, 37);
  }
}

TEST_CASE("recognize is deterministic") {
  auto g = testing::scrambled(build(GpParams(64, 7)).graph, 11, true);
  auto a = recognize(g), b = recognize(g);
  CHECK(a.accepted == b.accepted);
  CHECK(a.params == b.params);
  CHECK(a.labeling == b.labeling);
  CHECK(a.sigma_steps == b.sigma_steps);
}

TEST_CASE("verify_mapping") {
  auto gp = build(GpParams(7, 2));
  CHECK(verify_mapping(gp.graph, GpParams(7, 2), gp.labeling));
  CHECK_FALSE(verify_mapping(gp.graph, GpParams(7, 3), gp.labeling));
  auto gp13 = build(GpParams(13, 5));
  CHECK_FALSE(verify_mapping(gp13.graph, 13, 8, gp13.labeling));
  CHECK(verify_mapping(gp13.graph, 13, 5, gp13.labeling));

  auto broken = gp.labeling;
  std::swap(broken.outer[0], broken.outer[1]);
  CHECK_FALSE(verify_mapping(gp.graph, GpParams(7, 2), broken));
  broken = gp.labeling;
  broken.inner[0] = broken.outer[0];
  CHECK_FALSE(verify_mapping(gp.graph, GpParams(7, 2), broken));
  broken = gp.labeling;
  broken.inner.pop_back();
  CHECK_FALSE(verify_mapping(gp.graph, GpParams(7, 2), broken));
}

TEST_CASE("census work per edge is bounded") {
  for (int n : {100, 400, 1600}) {
    auto gp = build(GpParams(n, 7));
    auto r = recognize(gp.graph);
    REQUIRE(r.accepted);
    // A length-7 path search in a cubic graph extends at most 3 * 2^6 leaves.
    CHECK(r.sigma_steps <= 3 * 127 * gp.graph.num_edges());
  }
}

TEST_CASE("exceptional orders") {
  for (auto v : kExceptionalOrders) CHECK(is_exceptional_order(v));
  CHECK_FALSE(is_exceptional_order(12));
  CHECK_FALSE(is_exceptional_order(4));
}
