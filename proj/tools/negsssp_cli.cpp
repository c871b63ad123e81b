// Command-line driver over the C interface.
//
// Exit codes: 0 tree produced / check passed, 2 negative cycle / check
// failed, 1 usage or I/O error.

#include <cstdio>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "negsssp/negsssp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

struct GraphDeleter {
  void operator()(nsp_graph* g) const { nsp_graph_free(g); }
};
struct ResultDeleter {
  void operator()(nsp_result* r) const { nsp_result_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { nsp_string_free(s); }
};
using GraphPtr = std::unique_ptr<nsp_graph, GraphDeleter>;
using ResultPtr = std::unique_ptr<nsp_result, ResultDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int report(nsp_status status) {
  std::cerr << "error: " << nsp_status_string(status) << ": " << nsp_last_error() << '\n';
  return kExitError;
}

GraphPtr read_graph(const std::string& path, nsp_status& status) {
  nsp_graph* raw = nullptr;
  status = nsp_graph_read_file(path.c_str(), &raw);
  return GraphPtr(raw);
}

bool emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout.flush());
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out.flush());
}

int run_solve(const std::string& input, std::int64_t source, std::uint64_t seed, const std::string& output,
              bool json) {
  nsp_status status;
  GraphPtr g = read_graph(input, status);
  if (status != NSP_OK) return report(status);

  std::uint32_t src = 0;
  if (source > 0) {
    if (static_cast<std::size_t>(source) > nsp_graph_num_vertices(g.get())) {
      std::cerr << "error: source " << source << " out of range\n";
      return kExitError;
    }
    src = static_cast<std::uint32_t>(source - 1);
  } else if (!nsp_graph_source(g.get(), &src)) {
    std::cerr << "error: no source given (-s) and none in the input\n";
    return kExitError;
  }

  nsp_result* raw = nullptr;
  status = nsp_solve(g.get(), src, seed, &raw);
  if (status != NSP_OK) return report(status);
  ResultPtr result(raw);

  char* text = nullptr;
  status = json ? nsp_result_to_json(result.get(), &text) : nsp_result_to_text(result.get(), &text);
  if (status != NSP_OK) return report(status);
  StringPtr owned(text);
  if (!emit(text, output)) {
    std::cerr << "error: cannot write " << output << '\n';
    return kExitError;
  }
  return nsp_result_has_cycle(result.get()) ? kExitNegative : kExitOk;
}

int run_gen(const std::string& kind, std::size_t n, std::size_t m, std::int64_t lo, std::int64_t hi,
            std::uint64_t seed, bool plant, const std::string& output) {
  nsp_gen_spec spec{};
  if (kind == "restricted") spec.kind = NSP_GEN_RESTRICTED;
  else if (kind == "general") spec.kind = NSP_GEN_GENERAL;
  else if (kind == "nonneg") spec.kind = NSP_GEN_NONNEG;
  else {
    std::cerr << "error: unknown kind '" << kind << "'\n";
    return kExitError;
  }
  spec.n = n;
  spec.m = m;
  spec.lo = lo;
  spec.hi = hi;
  spec.seed = seed;
  spec.plant_negative_cycle = plant ? 1 : 0;
  nsp_graph* raw = nullptr;
  nsp_status status = nsp_generate(&spec, &raw);
  if (status != NSP_OK) return report(status);
  GraphPtr g(raw);
  char* text = nullptr;
  status = nsp_graph_to_text(g.get(), &text);
  if (status != NSP_OK) return report(status);
  StringPtr owned(text);
  if (!emit(text, output)) {
    std::cerr << "error: cannot write " << output << '\n';
    return kExitError;
  }
  return kExitOk;
}

int run_ldd(const std::string& input, std::int64_t d, std::uint64_t seed) {
  nsp_status status;
  GraphPtr g = read_graph(input, status);
  if (status != NSP_OK) return report(status);
  char* text = nullptr;
  status = nsp_ldd(g.get(), d, seed, &text);
  if (status != NSP_OK) return report(status);
  StringPtr owned(text);
  std::cout << text;
  return kExitOk;
}

int run_validate(const std::string& input, bool restricted) {
  nsp_status status;
  GraphPtr g = read_graph(input, status);
  if (status != NSP_OK) return report(status);
  int ok = 0;
  char* text = nullptr;
  status = nsp_validate(g.get(), restricted ? 1 : 0, &ok, &text);
  if (status != NSP_OK) return report(status);
  StringPtr owned(text);
  std::cout << text << '\n';
  return ok ? kExitOk : kExitNegative;
}

int run_bench(const std::string& sizes_csv, std::size_t seeds, std::uint64_t base_seed, bool wall_time,
              const std::string& csv_path) {
  std::vector<std::size_t> sizes;
  std::stringstream in(sizes_csv);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      sizes.push_back(std::stoul(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      std::cerr << "error: bad size '" << item << "'\n";
      return kExitError;
    }
  }
  char* csv = nullptr;
  char* summary = nullptr;
  int bounds_ok = 0;
  const nsp_status status = nsp_bench(sizes.data(), sizes.size(), seeds, base_seed, wall_time ? 1 : 0, &csv, &summary, &bounds_ok);
  if (status != NSP_OK) return report(status);
  StringPtr owned_csv(csv), owned_summary(summary);
  if (!emit(csv, csv_path)) {
    std::cerr << "error: cannot write " << csv_path << '\n';
    return kExitError;
  }
  std::cerr << summary << '\n';
  return bounds_ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Negative-weight single-source shortest paths"};
  app.require_subcommand(1);

  std::string input, output, kind = "general", sizes = "256,512,1024", csv;
  std::int64_t source = 0, d = 1, lo = -8, hi = 8;
  std::uint64_t seed = 1;
  std::size_t n = 0, m = 0, seeds = 1;
  bool json = false, plant = false, restricted = false, no_wall_time = false;

  auto* solve = app.add_subcommand("solve", "Shortest path tree or negative cycle");
  solve->add_option("-i,--input", input, "DIMACS graph file")->required();
  solve->add_option("-s,--source", source, "Source vertex (1-indexed); defaults to the file's s line");
  solve->add_option("--seed", seed, "Random seed");
  solve->add_option("-o,--output", output, "Output file (default stdout)");
  solve->add_flag("--json", json, "JSON output");

  auto* gen = app.add_subcommand("gen", "Generate a seeded graph");
  gen->add_option("--kind", kind, "restricted | general | nonneg");
  gen->add_option("-n", n, "Vertices")->required()->check(CLI::PositiveNumber);
  gen->add_option("-m", m, "Edges")->required();
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--lo", lo, "Smallest weight (general)");
  gen->add_option("--hi", hi, "Largest weight (general, nonneg)");
  gen->add_flag("--plant-cycle", plant, "Plant a negative cycle (general)");
  gen->add_option("-o,--output", output, "Output file")->required();

  auto* ldd = app.add_subcommand("ldd", "Low-diameter decomposition");
  ldd->add_option("-i,--input", input, "DIMACS graph file")->required();
  ldd->add_option("-d", d, "Diameter bound")->required();
  ldd->add_option("--seed", seed, "Random seed");

  auto* validate = app.add_subcommand("validate", "Check a graph file");
  validate->add_option("-i,--input", input, "DIMACS graph file")->required();
  validate->add_flag("--restricted", restricted, "Require weights in {-1..n} and cycle mean >= 1");

  auto* bench = app.add_subcommand("bench", "Doubling benchmark of the restricted solver");
  bench->add_option("--sizes", sizes, "Comma-separated vertex counts, ascending");
  bench->add_option("--seeds", seeds, "Seeds per size");
  bench->add_option("--seed", seed, "First seed");
  bench->add_flag("--no-wall-time", no_wall_time, "Omit the wall_time column (byte-identical reruns)");
  bench->add_option("--csv", csv, "CSV output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  if (*solve) return run_solve(input, source, seed, output, json);
  if (*gen) return run_gen(kind, n, m, lo, hi, seed, plant, output);
  if (*ldd) return run_ldd(input, d, seed);
  if (*validate) return run_validate(input, restricted);
  return run_bench(sizes, seeds, seed, !no_wall_time, csv);
}
