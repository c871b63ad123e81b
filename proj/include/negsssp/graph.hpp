#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace negsssp {

using Vertex = std::uint32_t;
using EdgeId = std::size_t;
using Weight = std::int64_t;
using Distance = std::int64_t;

inline constexpr Distance kInfinity = std::numeric_limits<Distance>::max();

/// Largest |w| accepted from callers. Leaves room for the 2n scaling and
/// layered-graph offsets applied inside the solver.
inline constexpr Weight kMaxInputWeight = Weight{1} << 40;

/// Bound used for graphs the solver builds internally (scaled or layered).
inline constexpr Weight kMaxInternalWeight = std::numeric_limits<Weight>::max() / 4;

inline bool is_finite(Distance d) { return d != kInfinity; }

/// Per-vertex integer potential phi; reweights (u,v) to w + phi(u) - phi(v).
using Potential = std::vector<Weight>;

/// Per-vertex distances; kInfinity marks unreachable vertices.
using DistLabels = std::vector<Distance>;

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  Weight weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  GraphError(const std::string& what, EdgeId edge)
      : std::invalid_argument(what), edge_(edge) {}
  EdgeId edge() const { return edge_; }

 private:
  EdgeId edge_;
};

/// Immutable directed multigraph with dense vertex ids 0..n-1.
///
/// Edges keep their input order; out/in adjacency lists enumerate edge ids in
/// that same order. Negative self-loops are accepted (they are negative
/// cycles, which validation reports).
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError naming the first edge with an out-of-range endpoint
  /// or a weight outside [-weight_limit, weight_limit].
  Graph(std::size_t n, std::vector<Edge> edges, Weight weight_limit = kMaxInputWeight);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const EdgeId> out_edges(Vertex v) const {
    return {out_ids_.data() + out_offsets_[v], out_ids_.data() + out_offsets_[v + 1]};
  }
  std::span<const EdgeId> in_edges(Vertex v) const {
    return {in_ids_.data() + in_offsets_[v], in_ids_.data() + in_offsets_[v + 1]};
  }

  Weight max_abs_weight() const;
  Weight min_weight() const;  // 0 for an edgeless graph
  Weight max_weight() const;  // 0 for an edgeless graph

  /// Same structure, new weights (one per edge, in edge order).
  Graph with_weights(std::span<const Weight> weights,
                     Weight weight_limit = kMaxInternalWeight) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<EdgeId> out_ids_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<EdgeId> in_ids_;
};

/// Validated constructor for external input (|w| <= 2^40).
Graph build_graph(std::size_t n, std::vector<Edge> edges);

/// Throws std::overflow_error if a reweighted value leaves int64 range.
Weight reweight(const Edge& e, const Potential& phi);

/// w_phi(u,v) = w(u,v) + phi(u) - phi(v) on every edge.
Graph apply_potential(const Graph& g, const Potential& phi);

/// max(0, w(e)) on every edge.
Graph nonneg_projection(const Graph& g);

struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;       // new vertex id -> original id
  std::vector<EdgeId> edge_to_parent;  // new edge id -> original edge id
};

/// G[S]: vertices renumbered 0..|S|-1 in the order given by `vertices`.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

struct SccOrder {
  std::vector<std::vector<Vertex>> components;  // topological order, ids ascending
  std::vector<std::size_t> component_index;     // per vertex
};

/// Strongly connected components, condensation in topological order.
/// Deterministic for a fixed graph. `skip_edge`, when non-empty, masks edges.
SccOrder scc_condensation_topo(const Graph& g, std::span<const std::uint8_t> skip_edge = {});

}  // namespace negsssp
