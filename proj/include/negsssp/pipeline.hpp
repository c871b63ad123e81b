#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "negsssp/baselines.hpp"
#include "negsssp/graph.hpp"
#include "negsssp/instrument.hpp"
#include "negsssp/nonneg_sssp.hpp"
#include "negsssp/restricted.hpp"

namespace negsssp {

/// w*(e) = 2n w(e) + 1. Cycles of G with w(C) >= 0 get mean >= 1; negative
/// cycles stay negative. Shortest paths under w* are shortest under w (fewest
/// hops among ties), and dist_w = floor(dist_w* / 2n) for simple paths.
Graph scale_weights(const Graph& g);

struct ScalingRound {
  Graph instance;                   // weights in {-1..n}
  std::vector<EdgeId> kept;         // instance edge -> input edge
  std::vector<EdgeId> removed;      // input edges rounded above n
  Weight negativity = 0;            // B = max(0, -min w_phi)
  Weight step = 1;                  // Delta
  Weight shift = 0;                 // s
};

/// One rounding step. With a = w_phi and B its negativity, uses
/// Delta = floor((B+2)/3), s = B - 2 Delta + 1 and r(e) = ceil((a(e)+s)/Delta),
/// so r >= -1, and cycle mean >= 1 carries over from a. Edges with r > n are
/// dropped; they never lie on a shortest V-v path of the rounded graph.
///
/// `B` is the negativity of w_phi and must be >= 1.
ScalingRound scaling_round(const Graph& g, const Potential& phi, Weight negativity);

/// max(0, -min_e w_phi(e)).
Weight negativity(const Graph& g, const Potential& phi);

struct PipelineOptions {
  RestrictedOptions restricted;
  std::size_t max_retries = 0;      // K; 0 means max(1, 3 ceil(log2 n))
  std::size_t karp_limit = 1024;    // Karp check on each instance when n <= this
};

struct PipelineStats {
  std::size_t rounds = 0;
  std::size_t restricted_calls = 0;
  std::size_t first_attempt_successes = 0;
  std::size_t retries = 0;
  std::size_t max_retries = 0;      // K actually used
  bool fallback = false;            // answered by Bellman-Ford
  bool cycle_by_karp = false;
  WorkSpanCounter counter;
  std::vector<Potential> restricted_potentials;  // every validated restricted result
};

struct NonnegativeResult {
  std::variant<Potential, NegativeCycle> outcome;
  PipelineStats stats;
};

/// A potential with w_phi >= 0 on every edge, or a negative cycle. Both are
/// verified before returning, so the answer is always correct; randomness
/// only affects how many retries are needed.
NonnegativeResult make_nonnegative(const Graph& g, std::uint64_t seed, const PipelineOptions& options = {});

struct SsspResult {
  std::variant<TreeResult, NegativeCycle> outcome;
  PipelineStats stats;
};

SsspResult solve_sssp(const Graph& g, Vertex source, std::uint64_t seed, const PipelineOptions& options = {});

/// Upper bound on restricted_sssp calls per solve: ceil(log2(n W)) * K, with
/// the log at least 1.
std::size_t restricted_call_budget(const Graph& g, std::size_t max_retries);

}  // namespace negsssp
