#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "negsssp/graph.hpp"
#include "negsssp/nonneg_sssp.hpp"

namespace negsssp {

/// Closed walk v0 v1 ... vk with v0 == vk; consecutive pairs are edges.
struct NegativeCycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;  // edges[i] goes vertices[i] -> vertices[i+1]
  Weight total = 0;
};

/// Sum of the cycle's edge weights, after checking that the edges chain.
/// Throws std::invalid_argument on a malformed cycle.
Weight cycle_weight(const Graph& g, const NegativeCycle& cycle);

struct BellmanFordResult {
  DistLabels dist;
  std::vector<std::optional<ParentLink>> parent;
};

/// Reference Bellman-Ford from a virtual source with the given offsets
/// (offsets may be negative here). Returns a verified negative cycle when one
/// is reachable from the sources.
std::variant<BellmanFordResult, NegativeCycle> bellman_ford(const Graph& g,
                                                            std::span<const SourceOffset> sources);

/// Every vertex as a source with offset 0: dist(V, v).
std::variant<BellmanFordResult, NegativeCycle> bellman_ford_all(const Graph& g);

struct CycleMean {
  Weight numerator = 0;    // reduced fraction numerator / denominator
  Weight denominator = 1;  // > 0
  std::vector<Vertex> cycle;  // closed: front() == back()
  std::vector<EdgeId> edges;
};

/// Exact minimum cycle mean (Karp, per SCC) with a witness cycle attaining
/// it; nullopt for acyclic graphs.
std::optional<CycleMean> karp_min_mean_cycle(const Graph& g);

struct RestrictedVerdict {
  bool ok = true;
  std::string reason;  // empty when ok
};

/// Weights in {-1, ..., n} and every cycle C has w(C) >= |C|.
RestrictedVerdict validate_restricted(const Graph& g);

enum class Accumulate { kOriginal, kReweighted };

/// min over paths (any start) ending at v with at most t edges negative
/// under w_phi, of w(P) (or w_phi(P) with kReweighted). Requires no negative
/// cycles. Label-correcting DP over (vertex, negatives used).
DistLabels dp_limited_neg(const Graph& g, const Potential& phi, std::size_t t,
                          Accumulate accumulate = Accumulate::kOriginal);

}  // namespace negsssp
