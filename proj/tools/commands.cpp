#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "gpr/graph_queries.hpp"
#include "gpr/oracle.hpp"
#include "gpr/petersen.hpp"

namespace gpr::cli {

nlohmann::ordered_json result_to_json(const RecognitionResult& r) {
  nlohmann::ordered_json j;
  j["is_gp"] = r.accepted;
  j["n"] = r.params ? nlohmann::ordered_json(r.params->n()) : nullptr;
  j["k"] = r.params ? nlohmann::ordered_json(r.params->k()) : nullptr;
  j["outer"] = r.labeling ? nlohmann::ordered_json(r.labeling->outer) : nullptr;
  j["inner"] = r.labeling ? nlohmann::ordered_json(r.labeling->inner) : nullptr;
  j["reason"] = r.reason ? nlohmann::ordered_json(std::string(to_string(*r.reason))) : nullptr;
  return j;
}

nlohmann::ordered_json partition_to_json(const CubicGraph& g, const SigmaPartition& p) {
  auto parts = nlohmann::ordered_json::array();
  for (const auto& [sigma, edges] : p.parts) {
    auto list = nlohmann::ordered_json::array();
    for (EdgeId e : edges.members()) list.push_back({g.edge(e).lo, g.edge(e).hi});
    nlohmann::ordered_json part;
    part["sigma"] = sigma;
    part["size"] = edges.size();
    part["edges"] = std::move(list);
    parts.push_back(std::move(part));
  }
  nlohmann::ordered_json j;
  j["parts"] = std::move(parts);
  return j;
}

std::vector<BenchRecord> run_bench(const std::vector<int>& sizes, int k, int reps) {
  if (reps < 1) throw InvalidParams("repetitions must be positive");
  std::vector<GpParams> params;
  for (int n : sizes) params.emplace_back(n, k);

  std::vector<BenchRecord> rows;
  for (const auto& p : params) {
    const auto gp = build(p);
    for (int r = 0; r < reps; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto result = recognize(gp.graph);
      const auto t1 = std::chrono::steady_clock::now();
      auto ns = std::max(std::chrono::nanoseconds{1}, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0));
      rows.push_back({p.n(), p.k(), ns, result.sigma_steps, result.accepted});
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows) {
  out << "n,k,wall_time_ns,sigma_steps,accepted\n";
  for (const auto& r : rows)
    out << r.n << ',' << r.k << ',' << r.wall_time.count() << ',' << r.sigma_steps << ','
        << (r.accepted ? "true" : "false") << '\n';
}

namespace {

// Stream for a path argument, or the given default stream for "-".
template <class Stream, class FileStream, class Base>
Base& open_or(const std::string& path, Base& fallback, std::unique_ptr<FileStream>& holder) {
  if (path == "-") return fallback;
  holder = std::make_unique<FileStream>(path);
  if (!*holder) throw std::runtime_error("cannot open " + path);
  return *holder;
}

int generate(int n, int k, const std::string& out_path, bool verbose, std::ostream& out, std::ostream& err) {
  auto p = GpParams::checked(n, k);
  if (!p) {
    err << "invalid parameters: GP(" << n << "," << k << ") needs n >= 3 and 1 <= k < n/2\n";
    return kExitInputError;
  }
  const auto gp = build(*p);
  std::unique_ptr<std::ofstream> file;
  try {
    auto& sink = open_or<std::ostream, std::ofstream>(out_path, out, file);
    write_edge_list(sink, gp.graph);
    sink.flush();
    if (!sink) throw std::runtime_error("write failed for " + out_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  if (verbose) {
    nlohmann::ordered_json lab;
    lab["outer"] = gp.labeling.outer;
    lab["inner"] = gp.labeling.inner;
    err << lab.dump() << '\n';
  }
  return kExitAccept;
}

// Parses the graph or reports the failure. Non-cubic input becomes a
// NotCubic rejection; any other parse failure is an input error.
std::optional<CubicGraph> load_graph(const std::string& path, std::istream& in, std::ostream& out,
                                     std::ostream& err, int& status, bool report_not_cubic) {
  try {
    std::unique_ptr<std::ifstream> file;
    auto& source = open_or<std::istream, std::ifstream>(path, in, file);
    return parse_edge_list(source);
  } catch (const GraphError& e) {
    if (report_not_cubic && e.kind() == GraphErrorKind::NotCubic) {
      out << result_to_json(RecognitionResult::reject(RejectReason::NotCubic)).dump() << '\n';
      status = kExitReject;
    } else {
      err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
      status = kExitInputError;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    status = kExitInputError;
  }
  return std::nullopt;
}

int recognize_cmd(const std::string& path, bool use_oracle, std::istream& in, std::ostream& out, std::ostream& err) {
  int status = kExitInputError;
  auto g = load_graph(path, in, out, err, status, true);
  if (!g) return status;

  RecognitionResult result;
  try {
    if (!use_oracle) {
      result = recognize(*g);
    } else if (g->num_vertices() % 2 != 0) {
      result = RecognitionResult::reject(RejectReason::OddOrder);
    } else if (!is_connected(*g)) {
      result = RecognitionResult::reject(RejectReason::Disconnected);
    } else {
      result = oracle::brute_force_recognize(*g);
    }
  } catch (const oracle::TooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  out << result_to_json(result).dump() << '\n';
  return result.accepted ? kExitAccept : kExitReject;
}

int sigma_cmd(const std::string& path, std::istream& in, std::ostream& out, std::ostream& err) {
  int status = kExitInputError;
  auto g = load_graph(path, in, out, err, status, false);
  if (!g) return status;
  out << partition_to_json(*g, sigma_partition(*g)).dump() << '\n';
  return kExitAccept;
}

int bench_cmd(const std::vector<int>& sizes, int k, int reps, std::ostream& out, std::ostream& err) {
  try {
    write_bench_csv(out, run_bench(sizes, k, reps));
  } catch (const InvalidParams& e) {
    err << e.what() << '\n';
    return kExitInputError;
  }
  return kExitAccept;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recognize generalized Petersen graphs GP(n,k) by their 8-cycle edge census", "gprecog"};
  app.require_subcommand(1);

  int gen_n = 0, gen_k = 0;
  std::string gen_out = "-";
  bool gen_verbose = false;
  auto* gen = app.add_subcommand("generate", "Write GP(N,K) as an edge list");
  gen->add_option("N", gen_n)->required();
  gen->add_option("K", gen_k)->required();
  gen->add_option("OUT", gen_out, "output path, - for stdout");
  gen->add_flag("-v,--verbose", gen_verbose, "print the u/v labeling to stderr");

  std::string rec_path;
  bool rec_oracle = false, rec_json = false;
  auto* rec = app.add_subcommand("recognize", "Decide whether an edge list is a GP graph (JSON output)");
  rec->add_option("PATH", rec_path)->required();
  rec->add_flag("--oracle", rec_oracle, "use brute-force isomorphism search instead");
  rec->add_flag("--json", rec_json, "emit JSON (the default and only format)");

  std::string sig_path;
  auto* sig = app.add_subcommand("sigma", "Dump the 8-cycle edge partition as JSON");
  sig->add_option("PATH", sig_path)->required();

  std::vector<int> bench_sizes;
  int bench_k = 0, bench_reps = 1;
  auto* bench = app.add_subcommand("bench", "Time recognition of GP(n,K) for each size n (CSV)");
  bench->add_option("--sizes", bench_sizes)->required()->delimiter(',');
  bench->add_option("--k", bench_k)->required();
  bench->add_option("--reps", bench_reps)->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.push_back("gprecog");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  if (*gen) return generate(gen_n, gen_k, gen_out, gen_verbose, out, err);
  if (*rec) return recognize_cmd(rec_path, rec_oracle, in, out, err);
  if (*sig) return sigma_cmd(sig_path, in, out, err);
  return bench_cmd(bench_sizes, bench_k, bench_reps, out, err);
}

}  // namespace gpr::cli
