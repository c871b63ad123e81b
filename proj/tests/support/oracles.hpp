#pragma once

// Brute-force reference computations for tests. Nothing here calls into the
// solver's own shortest-path code.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "negsssp/graph.hpp"
#include "negsssp/nonneg_sssp.hpp"

namespace oracle {

using negsssp::Distance;
using negsssp::Edge;
using negsssp::Graph;
using negsssp::Vertex;
using negsssp::Weight;

using Matrix = std::vector<std::vector<Distance>>;

/// All-pairs distances with D[v][v] = min(0, best cycle through v). nullopt
/// when a negative cycle exists.
std::optional<Matrix> floyd_warshall(const Graph& g);

/// dist(V, v) = min(0, min_u D[u][v]); requires no negative cycle.
std::vector<Distance> dist_from_all(const Graph& g);

/// dist(s, v) with +inf for unreachable; requires no negative cycle.
std::vector<Distance> dist_from(const Graph& g, Vertex s);

bool has_negative_cycle(const Graph& g);

/// Minimum weight over all simple paths u -> v (including the empty path for
/// u == v); nullopt if none. Exponential, n <= 9.
std::optional<Weight> min_simple_path(const Graph& g, Vertex u, Vertex v);

/// Minimum cycle mean over simple cycles as (num, den), by enumeration. n <= 8.
std::optional<std::pair<Weight, Weight>> min_cycle_mean(const Graph& g);

/// Mutual-reachability classes via transitive closure; each class sorted,
/// classes ordered by smallest member.
std::vector<std::vector<Vertex>> scc_classes(const Graph& g);

std::vector<std::vector<bool>> reachability(const Graph& g);

/// Max over ordered pairs in `vertices` of their distance in g (nonnegative
/// weights); +inf when some pair is unreachable.
Distance weak_diameter(const Graph& g, const std::vector<Vertex>& vertices);

Graph random_graph(std::size_t n, std::size_t m, Weight lo, Weight hi, std::uint64_t seed);

/// Edges only go from lower to higher ids.
Graph random_dag(std::size_t n, std::size_t m, Weight lo, Weight hi, std::uint64_t seed);

/// Random graph without negative cycles: w = w0 + pi(u) - pi(v) with
/// w0 >= 0.
Graph random_no_negative_cycle(std::size_t n, std::size_t m, Weight spread, Weight base_hi, std::uint64_t seed);

/// The oracle contract implemented with plain Bellman-Ford, to check that
/// nothing depends on Dijkstra specifics.
class BellmanFordOracle final : public negsssp::NonnegativeOracle {
 public:
  negsssp::ShortestPathForest solve(const Graph& g,
                                    std::span<const negsssp::SourceOffset> sources) const override;
};

}  // namespace oracle
