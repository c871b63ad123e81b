#include "negsssp/nonneg_sssp.hpp"

#include <functional>
#include <queue>
#include <string>
#include <utility>

namespace negsssp {

ShortestPathForest DijkstraOracle::solve(const Graph& g, std::span<const SourceOffset> sources) const {
  const std::size_t n = g.num_vertices();
  ShortestPathForest out;
  out.dist.assign(n, kInfinity);
  out.parent.assign(n, std::nullopt);

  using Entry = std::pair<Distance, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (const SourceOffset& s : sources) {
    if (s.offset < out.dist[s.vertex]) {
      out.dist[s.vertex] = s.offset;
      heap.emplace(s.offset, s.vertex);
    }
  }
  std::vector<std::uint8_t> done(n, 0);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (done[u] || d != out.dist[u]) continue;
    done[u] = 1;
    ++out.work;
    for (EdgeId id : g.out_edges(u)) {
      const Edge& e = g.edge(id);
      ++out.work;
      const Distance candidate = d + e.weight;
      if (candidate < out.dist[e.to]) {
        out.dist[e.to] = candidate;
        out.parent[e.to] = ParentLink{u, id};
        heap.emplace(candidate, e.to);
      }
    }
  }
  return out;
}

const NonnegativeOracle& default_oracle() {
  static const DijkstraOracle oracle;
  return oracle;
}

ShortestPathForest dijkstra_multi(const Graph& g, std::span<const SourceOffset> sources,
                                  TaskLog* log, const NonnegativeOracle& oracle, CallKind kind) {
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (g.edge(id).weight < 0) {
      throw NegativeWeightError("negative weight passed to nonnegative oracle (edge " +
                                    std::to_string(id) + ")",
                                id);
    }
  }
  for (const SourceOffset& s : sources) {
    if (s.vertex >= g.num_vertices()) throw std::invalid_argument("source vertex out of range");
    if (s.offset < 0) throw std::invalid_argument("source offsets must be nonnegative");
  }
  ShortestPathForest forest = oracle.solve(g, sources);
  if (log) log->record({kind, g.num_vertices(), g.num_edges(), forest.work});
  return forest;
}

TreeResult build_tree(const Graph& g, const Potential& phi, Vertex s, TaskLog* log,
                      const NonnegativeOracle& oracle) {
  if (s >= g.num_vertices()) throw std::invalid_argument("source vertex out of range");
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (reweight(g.edge(id), phi) < 0) {
      throw NegativeWeightError("potential leaves edge " + std::to_string(id) + " negative", id);
    }
  }
  const Graph reweighted = apply_potential(g, phi);
  const SourceOffset source{s, 0};
  ShortestPathForest forest = dijkstra_multi(reweighted, std::span(&source, 1), log, oracle);

  TreeResult tree;
  tree.root = s;
  tree.dist = std::move(forest.dist);
  tree.parent = std::move(forest.parent);
  for (std::size_t v = 0; v < tree.dist.size(); ++v) {
    if (is_finite(tree.dist[v])) tree.dist[v] += phi[v] - phi[s];
  }
  return tree;
}

}  // namespace negsssp
