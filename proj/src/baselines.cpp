#include "negsssp/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace negsssp {

namespace {

using Wide = __int128;

NegativeCycle cycle_from_parents(const Graph& g, const std::vector<std::optional<ParentLink>>& parent,
                                 Vertex start) {
  // Walk back n steps to land on the cycle, then collect it.
  Vertex v = start;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    if (!parent[v]) throw std::logic_error("parent chain ended before reaching a cycle");
    v = parent[v]->parent;
  }
  NegativeCycle cycle;
  std::vector<EdgeId> reversed_edges;
  std::vector<Vertex> reversed{v};
  Vertex u = v;
  do {
    const ParentLink link = *parent[u];
    reversed_edges.push_back(link.edge);
    u = link.parent;
    reversed.push_back(u);
  } while (u != v);
  cycle.vertices.assign(reversed.rbegin(), reversed.rend());
  cycle.edges.assign(reversed_edges.rbegin(), reversed_edges.rend());
  cycle.total = cycle_weight(g, cycle);
  if (cycle.total >= 0) throw std::logic_error("extracted cycle is not negative");
  return cycle;
}

struct Fraction {
  Wide num = 0;
  Wide den = 1;  // > 0
};

bool less_than(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }

Weight gcd_weight(Weight a, Weight b) { return std::gcd(a < 0 ? -a : a, b); }

// Cycle of the subgraph formed by `usable` edges, restricted to `members`;
// empty when acyclic.
std::vector<EdgeId> find_cycle(const Graph& g, const std::vector<std::uint8_t>& usable,
                               std::span<const Vertex> members) {
  std::vector<std::uint8_t> state(g.num_vertices(), 0);  // 0 new, 1 active, 2 done
  std::vector<EdgeId> via(g.num_vertices(), 0);
  for (Vertex root : members) {
    if (state[root]) continue;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      auto out = g.out_edges(v);
      if (pos == out.size()) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      const EdgeId id = out[pos++];
      if (!usable[id]) continue;
      const Vertex w = g.edge(id).to;
      if (state[w] == 1) {
        std::vector<EdgeId> cycle{id};
        for (Vertex x = v; x != w;) {
          cycle.push_back(via[x]);
          x = g.edge(via[x]).from;
        }
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (state[w] == 0) {
        state[w] = 1;
        via[w] = id;
        stack.emplace_back(w, 0);
      }
    }
  }
  return {};
}

}  // namespace

Weight cycle_weight(const Graph& g, const NegativeCycle& cycle) {
  if (cycle.vertices.size() < 2 || cycle.vertices.front() != cycle.vertices.back() ||
      cycle.edges.size() + 1 != cycle.vertices.size()) {
    throw std::invalid_argument("cycle must be a closed walk with one edge per step");
  }
  Weight total = 0;
  for (std::size_t i = 0; i < cycle.edges.size(); ++i) {
    const Edge& e = g.edge(cycle.edges[i]);
    if (e.from != cycle.vertices[i] || e.to != cycle.vertices[i + 1]) {
      throw std::invalid_argument("cycle edge does not connect consecutive vertices");
    }
    total += e.weight;
  }
  return total;
}

std::variant<BellmanFordResult, NegativeCycle> bellman_ford(const Graph& g,
                                                            std::span<const SourceOffset> sources) {
  const std::size_t n = g.num_vertices();
  BellmanFordResult out;
  out.dist.assign(n, kInfinity);
  out.parent.assign(n, std::nullopt);
  for (const SourceOffset& s : sources) out.dist[s.vertex] = std::min(out.dist[s.vertex], s.offset);

  // With the virtual source, simple paths have at most n-1 real edges.
  for (std::size_t round = 0; round < n; ++round) {
    std::optional<Vertex> changed;
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      const Edge& e = g.edge(id);
      if (!is_finite(out.dist[e.from])) continue;
      const Distance candidate = out.dist[e.from] + e.weight;
      if (candidate < out.dist[e.to]) {
        out.dist[e.to] = candidate;
        out.parent[e.to] = ParentLink{e.from, id};
        changed = e.to;
      }
    }
    if (!changed) return out;
    if (round + 1 == n) return cycle_from_parents(g, out.parent, *changed);
  }
  return out;
}

std::variant<BellmanFordResult, NegativeCycle> bellman_ford_all(const Graph& g) {
  std::vector<SourceOffset> sources(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) sources[v] = {v, 0};
  return bellman_ford(g, sources);
}

std::optional<CycleMean> karp_min_mean_cycle(const Graph& g) {
  const SccOrder scc = scc_condensation_topo(g);
  std::optional<Fraction> best;
  std::vector<EdgeId> best_cycle;

  std::vector<std::size_t> local(g.num_vertices(), 0);
  for (const auto& comp : scc.components) {
    const std::size_t k = comp.size();
    std::vector<EdgeId> inner;
    for (Vertex v : comp) {
      for (EdgeId id : g.out_edges(v)) {
        if (scc.component_index[g.edge(id).to] == scc.component_index[v]) inner.push_back(id);
      }
    }
    if (inner.empty()) continue;  // singleton without self-loop
    for (std::size_t i = 0; i < k; ++i) local[comp[i]] = i;

    // D_j(v): min weight of a walk with exactly j edges from comp[0] to v.
    auto step = [&](const std::vector<Wide>& prev, std::vector<Wide>& next) {
      std::fill(next.begin(), next.end(), std::numeric_limits<Wide>::max());
      for (EdgeId id : inner) {
        const Edge& e = g.edge(id);
        const Wide from = prev[local[e.from]];
        if (from == std::numeric_limits<Wide>::max()) continue;
        next[local[e.to]] = std::min(next[local[e.to]], from + e.weight);
      }
    };
    const Wide inf = std::numeric_limits<Wide>::max();
    std::vector<Wide> row(k, inf), next(k, inf);
    row[0] = 0;
    for (std::size_t j = 0; j < k; ++j) {
      step(row, next);
      row.swap(next);
    }
    const std::vector<Wide> last = row;  // D_k

    // Second pass recomputes D_j to avoid holding the full table.
    std::vector<std::optional<Fraction>> worst(k);
    std::fill(row.begin(), row.end(), inf);
    row[0] = 0;
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t v = 0; v < k; ++v) {
        if (last[v] == inf || row[v] == inf) continue;
        const Fraction f{last[v] - row[v], static_cast<Wide>(k - j)};
        if (!worst[v] || less_than(*worst[v], f)) worst[v] = f;
      }
      step(row, next);
      row.swap(next);
    }
    std::optional<Fraction> comp_best;
    for (std::size_t v = 0; v < k; ++v) {
      if (worst[v] && (!comp_best || less_than(*worst[v], *comp_best))) comp_best = worst[v];
    }
    if (!comp_best) continue;
    if (best && !less_than(*comp_best, *best)) continue;

    // Witness: cycles of weight 0 under q*w - p are exactly the mean-p/q cycles.
    const Wide p = comp_best->num, q = comp_best->den;
    std::vector<Wide> pot(k, 0);
    for (std::size_t round = 0; round <= k; ++round) {
      bool changed = false;
      for (EdgeId id : inner) {
        const Edge& e = g.edge(id);
        const Wide candidate = pot[local[e.from]] + q * e.weight - p;
        if (candidate < pot[local[e.to]]) {
          pot[local[e.to]] = candidate;
          changed = true;
        }
      }
      if (!changed) break;
    }
    std::vector<std::uint8_t> tight(g.num_edges(), 0);
    for (EdgeId id : inner) {
      const Edge& e = g.edge(id);
      tight[id] = pot[local[e.from]] + q * e.weight - p == pot[local[e.to]];
    }
    std::vector<EdgeId> cycle = find_cycle(g, tight, comp);
    if (cycle.empty()) throw std::logic_error("karp: no cycle attains the minimum mean");
    best = comp_best;
    best_cycle = std::move(cycle);
  }

  if (!best) return std::nullopt;
  CycleMean out;
  Weight num = static_cast<Weight>(best->num), den = static_cast<Weight>(best->den);
  const Weight divisor = gcd_weight(num, den);
  out.numerator = num / divisor;
  out.denominator = den / divisor;
  out.edges = best_cycle;
  out.cycle.push_back(g.edge(best_cycle.front()).from);
  for (EdgeId id : best_cycle) out.cycle.push_back(g.edge(id).to);
  return out;
}

RestrictedVerdict validate_restricted(const Graph& g) {
  const auto n = static_cast<Weight>(g.num_vertices());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Weight w = g.edge(id).weight;
    if (w < -1 || w > n) {
      return {false, "weight range: edge " + std::to_string(id) + " has weight " + std::to_string(w)};
    }
  }
  if (auto mean = karp_min_mean_cycle(g); mean && mean->numerator < mean->denominator) {
    return {false, "cycle mean " + std::to_string(mean->numerator) + "/" +
                       std::to_string(mean->denominator) + " < 1"};
  }
  return {};
}

DistLabels dp_limited_neg(const Graph& g, const Potential& phi, std::size_t t, Accumulate accumulate) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> negative(g.num_edges(), 0);
  std::vector<Weight> gain(g.num_edges(), 0);
  std::size_t negative_count = 0;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Weight reweighted = reweight(g.edge(id), phi);
    negative[id] = reweighted < 0;
    negative_count += negative[id];
    gain[id] = accumulate == Accumulate::kOriginal ? g.edge(id).weight : reweighted;
  }
  // No walk has more negative edges than the graph; larger budgets coincide.
  const std::size_t layers = std::min(t, negative_count) + 1;

  // best[k * n + v]: walks into v using at most k negative edges.
  std::vector<Distance> best(layers * n, 0);
  const std::size_t max_rounds = n * layers + 1;
  for (std::size_t round = 0;; ++round) {
    if (round > max_rounds) throw std::invalid_argument("dp_limited_neg: negative cycle");
    bool changed = false;
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      const Edge& e = g.edge(id);
      for (std::size_t k = 0; k < layers; ++k) {
        const std::size_t target = negative[id] ? k + 1 : k;
        if (target >= layers) break;
        const Distance candidate = best[k * n + e.from] + gain[id];
        if (candidate < best[target * n + e.to]) {
          best[target * n + e.to] = candidate;
          changed = true;
        }
      }
    }
    // "at most k" is monotone in k.
    for (std::size_t k = 1; k < layers; ++k) {
      for (std::size_t v = 0; v < n; ++v) {
        if (best[(k - 1) * n + v] < best[k * n + v]) {
          best[k * n + v] = best[(k - 1) * n + v];
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return DistLabels(best.begin() + static_cast<std::ptrdiff_t>((layers - 1) * n), best.end());
}

}  // namespace negsssp
