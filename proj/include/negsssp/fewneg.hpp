#pragma once

#include <cstddef>

#include "negsssp/graph.hpp"
#include "negsssp/instrument.hpp"
#include "negsssp/nonneg_sssp.hpp"

namespace negsssp {

/// (t+1) copies of G plus a source. Inside layer i an edge keeps weight
/// w_phi when that is nonnegative; every edge also steps from layer i to i+1
/// with weight w_phi + M; the source reaches (u, 0) with weight M - phi(u).
struct LayeredGraph {
  std::size_t base_n = 0;
  std::size_t t = 0;
  Graph graph;
  Vertex source = 0;
  Weight offset = 0;  // M = 2 max|phi| + max|w|

  Vertex encode(Vertex v, std::size_t layer) const {
    return static_cast<Vertex>(layer * base_n + v);
  }
};

LayeredGraph layered_graph(const Graph& g, const Potential& phi, std::size_t t);

/// Number of edges with w_phi < 0.
std::size_t count_negative(const Graph& g, const Potential& phi);

/// Upper bounds d with dist(V, v) <= d(v) <= w(P) for every path P into v
/// having at most t edges negative under w_phi (G free of negative cycles).
///
/// d(v) is read out as the minimum over all layers i of
/// dist(s, (v, i)) - (i+1) M + phi(v). The layer count is capped at
/// (#negative edges + 1): no path can use more negative edges than exist,
/// so the result is the same as with the full t.
DistLabels few_neg_sssp(const Graph& g, const Potential& phi, std::size_t t,
                        TaskLog* log = nullptr, const NonnegativeOracle& oracle = default_oracle());

}  // namespace negsssp
