#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpr/cubic_graph.hpp"
#include "gpr/cycle_census.hpp"
#include "gpr/recognizer.hpp"

namespace gpr::cli {

inline constexpr int kExitAccept = 0;
inline constexpr int kExitReject = 1;
inline constexpr int kExitInputError = 2;

nlohmann::ordered_json result_to_json(const RecognitionResult& r);
nlohmann::ordered_json partition_to_json(const CubicGraph& g, const SigmaPartition& p);

struct BenchRecord {
  int n;
  int k;
  std::chrono::nanoseconds wall_time;
  std::uint64_t sigma_steps;
  bool accepted;
};

// Throws InvalidParams before running anything if some (n, k) is invalid.
std::vector<BenchRecord> run_bench(const std::vector<int>& sizes, int k, int reps);
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows);

/// Entry point shared by the executable and the tests. Paths given as "-"
/// use the supplied streams.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gpr::cli
