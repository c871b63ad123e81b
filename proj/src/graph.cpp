#include "negsssp/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace negsssp {

namespace {

void build_csr(std::size_t n, const std::vector<Edge>& edges, bool outgoing,
               std::vector<std::size_t>& offsets, std::vector<EdgeId>& ids) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : edges) ++offsets[(outgoing ? e.from : e.to) + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  ids.resize(edges.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (EdgeId id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    ids[cursor[outgoing ? e.from : e.to]++] = id;
  }
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges, Weight weight_limit)
    : n_(n), edges_(std::move(edges)) {
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    if (e.from >= n_ || e.to >= n_) {
      throw GraphError("edge " + std::to_string(id) + ": endpoint out of range", id);
    }
    if (e.weight > weight_limit || e.weight < -weight_limit) {
      throw GraphError("edge " + std::to_string(id) + ": weight out of range", id);
    }
  }
  build_csr(n_, edges_, true, out_offsets_, out_ids_);
  build_csr(n_, edges_, false, in_offsets_, in_ids_);
}

Weight Graph::max_abs_weight() const {
  Weight best = 0;
  for (const Edge& e : edges_) best = std::max(best, e.weight < 0 ? -e.weight : e.weight);
  return best;
}

Weight Graph::min_weight() const {
  if (edges_.empty()) return 0;
  Weight best = edges_.front().weight;
  for (const Edge& e : edges_) best = std::min(best, e.weight);
  return best;
}

Weight Graph::max_weight() const {
  if (edges_.empty()) return 0;
  Weight best = edges_.front().weight;
  for (const Edge& e : edges_) best = std::max(best, e.weight);
  return best;
}

Graph Graph::with_weights(std::span<const Weight> weights, Weight weight_limit) const {
  if (weights.size() != edges_.size()) {
    throw std::invalid_argument("with_weights: one weight per edge required");
  }
  std::vector<Edge> edges = edges_;
  for (EdgeId id = 0; id < edges.size(); ++id) edges[id].weight = weights[id];
  return Graph(n_, std::move(edges), weight_limit);
}

Graph build_graph(std::size_t n, std::vector<Edge> edges) {
  return Graph(n, std::move(edges), kMaxInputWeight);
}

Weight reweight(const Edge& e, const Potential& phi) {
  Weight out = 0;
  if (__builtin_add_overflow(e.weight, phi[e.from], &out) ||
      __builtin_sub_overflow(out, phi[e.to], &out)) {
    throw std::overflow_error("potential adjustment overflows 64-bit weights");
  }
  return out;
}

Graph apply_potential(const Graph& g, const Potential& phi) {
  if (phi.size() != g.num_vertices()) {
    throw std::invalid_argument("potential must cover every vertex");
  }
  std::vector<Weight> weights(g.num_edges());
  for (EdgeId id = 0; id < g.num_edges(); ++id) weights[id] = reweight(g.edge(id), phi);
  return g.with_weights(weights, std::numeric_limits<Weight>::max());
}

Graph nonneg_projection(const Graph& g) {
  std::vector<Weight> weights(g.num_edges());
  for (EdgeId id = 0; id < g.num_edges(); ++id) weights[id] = std::max<Weight>(0, g.edge(id).weight);
  return g.with_weights(weights, std::numeric_limits<Weight>::max());
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> local(g.num_vertices(), kAbsent);
  Subgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (local[vertices[i]] != kAbsent) throw std::invalid_argument("induced_subgraph: duplicate vertex");
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (EdgeId id : g.out_edges(vertices[i])) {
      const Edge& e = g.edge(id);
      if (local[e.to] == kAbsent) continue;
      sub.edge_to_parent.push_back(id);
    }
  }
  // Keep the parent's edge order.
  std::sort(sub.edge_to_parent.begin(), sub.edge_to_parent.end());
  edges.reserve(sub.edge_to_parent.size());
  for (EdgeId id : sub.edge_to_parent) {
    const Edge& e = g.edge(id);
    edges.push_back({local[e.from], local[e.to], e.weight});
  }
  sub.graph = Graph(vertices.size(), std::move(edges), std::numeric_limits<Weight>::max());
  return sub;
}

SccOrder scc_condensation_topo(const Graph& g, std::span<const std::uint8_t> skip_edge) {
  // Iterative Tarjan. Components are emitted sinks-first, so the emission
  // order is reversed at the end.
  const std::size_t n = g.num_vertices();
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), edge_pos(n, 0);
  std::vector<std::uint8_t> on_stack(n, 0);
  std::vector<Vertex> stack, call;
  std::vector<std::vector<Vertex>> emitted;
  std::size_t counter = 0;
  auto skipped = [&](EdgeId id) { return !skip_edge.empty() && skip_edge[id]; };

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back(root);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      const Vertex v = call.back();
      auto out = g.out_edges(v);
      bool descended = false;
      while (edge_pos[v] < out.size()) {
        const EdgeId id = out[edge_pos[v]++];
        if (skipped(id)) continue;
        const Vertex w = g.edge(id).to;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back(w);
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
      if (low[v] == index[v]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        emitted.push_back(std::move(comp));
      }
    }
  }

  SccOrder order;
  order.components.assign(std::make_move_iterator(emitted.rbegin()),
                          std::make_move_iterator(emitted.rend()));
  order.component_index.assign(n, 0);
  for (std::size_t c = 0; c < order.components.size(); ++c) {
    for (Vertex v : order.components[c]) order.component_index[v] = c;
  }
  return order;
}

}  // namespace negsssp
