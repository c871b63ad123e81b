#include "negsssp/fewneg.hpp"

#include <algorithm>
#include <stdexcept>

namespace negsssp {

std::size_t count_negative(const Graph& g, const Potential& phi) {
  std::size_t count = 0;
  for (const Edge& e : g.edges()) count += reweight(e, phi) < 0;
  return count;
}

LayeredGraph layered_graph(const Graph& g, const Potential& phi, std::size_t t) {
  if (phi.size() != g.num_vertices()) throw std::invalid_argument("potential must cover every vertex");
  const std::size_t n = g.num_vertices();

  LayeredGraph out;
  out.base_n = n;
  out.t = t;
  Weight max_phi = 0;
  for (Weight p : phi) max_phi = std::max(max_phi, p < 0 ? -p : p);
  out.offset = 2 * max_phi + g.max_abs_weight();
  out.source = static_cast<Vertex>((t + 1) * n);

  std::vector<Weight> reweighted(g.num_edges());
  for (EdgeId id = 0; id < g.num_edges(); ++id) reweighted[id] = reweight(g.edge(id), phi);

  std::vector<Edge> edges;
  edges.reserve((t + 1) * g.num_edges() + t * g.num_edges() + n);
  for (std::size_t layer = 0; layer <= t; ++layer) {
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      if (reweighted[id] < 0) continue;
      const Edge& e = g.edge(id);
      edges.push_back({out.encode(e.from, layer), out.encode(e.to, layer), reweighted[id]});
    }
  }
  for (std::size_t layer = 0; layer < t; ++layer) {
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      const Edge& e = g.edge(id);
      edges.push_back({out.encode(e.from, layer), out.encode(e.to, layer + 1), reweighted[id] + out.offset});
    }
  }
  for (Vertex v = 0; v < n; ++v) edges.push_back({out.source, out.encode(v, 0), out.offset - phi[v]});

  for (const Edge& e : edges) {
    if (e.weight < 0) throw std::logic_error("layered graph produced a negative edge");
  }
  out.graph = Graph((t + 1) * n + 1, std::move(edges), kMaxInternalWeight);
  return out;
}

DistLabels few_neg_sssp(const Graph& g, const Potential& phi, std::size_t t, TaskLog* log,
                        const NonnegativeOracle& oracle) {
  const std::size_t n = g.num_vertices();
  const std::size_t negatives = count_negative(g, phi);
  const std::size_t layers = std::min(t, negatives);

  if (negatives == 0) {
    // G_phi is already nonnegative: one multi-source call with offsets
    // shifted by max phi to keep them nonnegative.
    const Weight top = n == 0 ? 0 : *std::max_element(phi.begin(), phi.end());
    std::vector<SourceOffset> sources(n);
    for (Vertex v = 0; v < n; ++v) sources[v] = {v, top - phi[v]};
    const ShortestPathForest forest =
        dijkstra_multi(apply_potential(g, phi), sources, log, oracle, CallKind::kFewNeg);
    DistLabels d(n);
    for (Vertex v = 0; v < n; ++v) d[v] = forest.dist[v] - top + phi[v];
    return d;
  }

  const LayeredGraph layered = layered_graph(g, phi, layers);
  const SourceOffset source{layered.source, 0};
  const ShortestPathForest forest =
      dijkstra_multi(layered.graph, std::span(&source, 1), log, oracle, CallKind::kFewNeg);

  DistLabels d(n, kInfinity);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t layer = 0; layer <= layers; ++layer) {
      const Distance reached = forest.dist[layered.encode(v, layer)];
      if (!is_finite(reached)) continue;
      const auto hops = static_cast<Weight>(layer + 1);
      d[v] = std::min(d[v], reached - hops * layered.offset + phi[v]);
    }
  }
  return d;
}

}  // namespace negsssp
