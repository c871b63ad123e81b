#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "negsssp/graph.hpp"
#include "negsssp/ldd.hpp"
#include "negsssp/pipeline.hpp"

namespace negsssp {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParsedGraph {
  Graph graph;
  std::optional<Vertex> source;  // 0-indexed
};

/// DIMACS shortest-path text with signed weights: "c ..." comments, one
/// "p sp <n> <m>" header, arcs "a <u> <v> <w>" (1-indexed), optional
/// "s <source>".
ParsedGraph parse_graph(std::string_view text);
std::string write_graph(const Graph& g, std::optional<Vertex> source = std::nullopt);

enum class GenKind { kRestricted, kGeneral, kNonneg };

struct GenSpec {
  GenKind kind = GenKind::kGeneral;
  std::size_t n = 1;
  std::size_t m = 0;
  Weight lo = -8;  // general: weight range [lo, hi]; nonneg: [0, hi]
  Weight hi = 8;
  std::uint64_t seed = 0;
  bool plant_negative_cycle = false;  // general only
};

/// Seeded generators.
///
/// restricted: w0 in [1, max(1, n/2)], pi in [0, n/4],
/// w = clamp(w0 + pi(u) - pi(v), -1, n); checked with validate_restricted
/// when n <= 1024.
/// general: w0 in [0, hi - P] shifted by pi in [0, P] with P = min(-lo, hi/2),
/// so every cycle is nonnegative; plant_negative_cycle adds a cycle of
/// 1..8 edges with weights in [lo, 0] summing below zero.
/// nonneg: uniform in [0, hi].
Graph gen_graph(const GenSpec& spec);

std::optional<GenKind> parse_gen_kind(std::string_view name);

/// "d v dist|inf" for every vertex then "t v parent" for tree edges, or a
/// single "cycle v1 ... v1" line. Vertices are 1-indexed.
std::string format_result_text(const SsspResult& result);

/// Keys: dist, parent, cycle, work, span, oracle_calls, seed. Vertices are
/// 1-indexed; null marks an unreachable vertex or a missing parent.
std::string format_result_json(const SsspResult& result, std::uint64_t seed);

/// "part i: v1 v2 ..." then "cut u v", all 1-indexed.
std::string format_clustering(const Graph& g, const Clustering& c);

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::uint64_t work = 0;         // oracle calls plus decompositions
  std::uint64_t oracle_work = 0;  // nonnegative-oracle calls only
  std::uint64_t span = 0;
  std::uint64_t oracle_calls = 0;
  std::uint64_t stages = 0;
  double wall_time = 0;  // seconds
  std::uint64_t work_bound = 0;
  std::uint64_t call_bound = 0;
  bool valid = false;   // potential passed validate_potential
};

struct BenchReport {
  std::vector<BenchRow> rows;
  double slope = 0;        // least squares of log(oracle_work) on log(m)
  double total_slope = 0;  // same for work
  bool bounds_ok = true;
};

/// Constant c in the work bound L R^2 (t+1) (n+m+1) c, checked against the
/// oracle work. Same constant as the oracle-size assertion.
inline constexpr std::uint64_t kWorkBoundFactor = kOracleSizeFactor;

std::uint64_t work_bound(const RestrictedParams& p, std::size_t n, std::size_t m);

/// L R (R+1) k_max + L R: one call per cluster and potential plus slack per
/// round.
std::uint64_t oracle_call_bound(const RestrictedParams& p, std::size_t max_clusters);

/// Restricted graphs with m = 4n; one restricted_sssp run per (size, seed).
BenchReport bench_doubling(const std::vector<std::size_t>& sizes, std::size_t seeds, std::uint64_t base_seed = 1);

/// Header plus one line per row. wall_time is the only column that varies
/// between identical runs; leave it out for byte-identical output.
std::string format_bench_csv(const BenchReport& report, bool wall_time = true);

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace negsssp
