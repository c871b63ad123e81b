#include "negsssp/pipeline.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "negsssp/ldd.hpp"
#include "negsssp/rng.hpp"

namespace negsssp {

namespace {

using Wide = __int128;

Weight narrow(Wide x, const char* what) {
  if (x > std::numeric_limits<Weight>::max() || x < std::numeric_limits<Weight>::min()) {
    throw std::overflow_error(std::string(what) + " overflows 64-bit arithmetic");
  }
  return static_cast<Weight>(x);
}

Wide ceil_div(Wide x, Wide d) { return x >= 0 ? (x + d - 1) / d : -((-x) / d); }
Wide floor_div(Wide x, Wide d) { return x >= 0 ? x / d : -((-x + d - 1) / d); }

// dist(V, v) in g from a potential that makes every edge nonnegative: one
// multi-source call on g_phi with offsets max(phi) - phi(u).
DistLabels distances_from_all(const Graph& g, const Potential& phi, TaskLog& log) {
  const std::size_t n = g.num_vertices();
  const Weight top = *std::max_element(phi.begin(), phi.end());
  std::vector<SourceOffset> sources(n);
  for (Vertex v = 0; v < n; ++v) sources[v] = {v, narrow(Wide{top} - phi[v], "source offset")};
  const ShortestPathForest forest = dijkstra_multi(apply_potential(g, phi), sources, &log);
  DistLabels dist(n);
  for (Vertex v = 0; v < n; ++v) dist[v] = narrow(Wide{forest.dist[v]} - top + phi[v], "distance");
  return dist;
}

std::size_t default_retries(std::size_t n) { return std::max<std::size_t>(1, 3 * ceil_log2(n)); }

}  // namespace

Graph scale_weights(const Graph& g) {
  const Wide factor = 2 * static_cast<Wide>(g.num_vertices());
  std::vector<Weight> weights(g.num_edges());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    weights[id] = narrow(factor * g.edge(id).weight + 1, "scaled weight");
  }
  return g.with_weights(weights);
}

Weight negativity(const Graph& g, const Potential& phi) {
  Weight worst = 0;
  for (const Edge& e : g.edges()) worst = std::max(worst, -reweight(e, phi));
  return worst;
}

ScalingRound scaling_round(const Graph& g, const Potential& phi, Weight b) {
  if (b < 1) throw std::invalid_argument("scaling_round: negativity must be >= 1");
  const std::size_t n = g.num_vertices();
  ScalingRound round;
  round.negativity = b;
  round.step = (b + 2) / 3;
  round.shift = b - 2 * round.step + 1;

  std::vector<Edge> edges;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    const Wide a = reweight(e, phi);
    if (a < -b) throw std::invalid_argument("scaling_round: negativity below the true minimum");
    const Wide r = ceil_div(a + round.shift, round.step);
    if (r > static_cast<Wide>(n)) {
      round.removed.push_back(id);
      continue;
    }
    edges.push_back({e.from, e.to, static_cast<Weight>(r)});
    round.kept.push_back(id);
  }
  round.instance = Graph(n, std::move(edges), kMaxInternalWeight);
  return round;
}

std::size_t restricted_call_budget(const Graph& g, std::size_t max_retries) {
  const std::size_t n = g.num_vertices();
  const std::size_t k = max_retries ? max_retries : default_retries(n);
  const auto nw = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(std::max<Weight>(1, g.max_abs_weight()));
  return std::max<std::size_t>(1, ceil_log2(nw)) * k;
}

NonnegativeResult make_nonnegative(const Graph& g, std::uint64_t seed, const PipelineOptions& options) {
  const std::size_t n = g.num_vertices();
  NonnegativeResult result;
  PipelineStats& stats = result.stats;
  stats.max_retries = options.max_retries ? options.max_retries : default_retries(n);
  if (n == 0) {
    result.outcome = Potential{};
    return result;
  }

  // Negative cycle or Bellman-Ford fallback; both are exact.
  auto finish_with_bellman_ford = [&](bool fallback) {
    auto answer = bellman_ford_all(g);
    if (auto* cycle = std::get_if<NegativeCycle>(&answer)) {
      result.outcome = std::move(*cycle);
    } else {
      stats.fallback = fallback;
      result.outcome = std::get<BellmanFordResult>(std::move(answer)).dist;
    }
    return std::move(result);
  };

  const Graph scaled = scale_weights(g);
  Potential phi(n, 0);
  // Instances are restricted by construction unless g has a negative cycle;
  // a failed attempt then falls through to Bellman-Ford.
  RestrictedOptions inner = options.restricted;
  inner.check_input = false;

  // Each round removes at least a third of the negativity; this cap only
  // guards against an arithmetic bug.
  const std::size_t round_cap = 4 * (ceil_log2(static_cast<std::uint64_t>(negativity(scaled, phi)) + 1) + 2);

  for (Weight b = negativity(scaled, phi); b > 0; b = negativity(scaled, phi)) {
    if (stats.rounds >= round_cap) throw std::logic_error("make_nonnegative: scaling did not converge");
    const ScalingRound round = scaling_round(scaled, phi, b);
    ++stats.rounds;

    if (n <= options.karp_limit) {
      // The instance inherits cycle mean >= 1 from any negative-cycle-free
      // input, so a smaller mean proves a negative cycle in g.
      const auto mean = karp_min_mean_cycle(round.instance);
      if (mean && mean->numerator < mean->denominator) {
        stats.cycle_by_karp = true;
        return finish_with_bellman_ford(false);
      }
    }

    std::optional<Potential> psi;
    for (std::size_t attempt = 0; attempt < stats.max_retries && !psi; ++attempt) {
      const std::uint64_t attempt_seed = split_seed(seed, "attempt", {stats.rounds, attempt});
      RestrictedRun run = restricted_sssp(round.instance, attempt_seed, inner);
      ++stats.restricted_calls;
      stats.counter.append(run.counter);
      if (run.range_ok && validate_potential(round.instance, run.potential).empty()) {
        if (attempt == 0) ++stats.first_attempt_successes;
        psi = std::move(run.potential);
      } else {
        ++stats.retries;
      }
    }
    if (!psi) return finish_with_bellman_ford(true);
    stats.restricted_potentials.push_back(*psi);

    // Removed edges are too heavy to lie on a shortest V-v path, so dist over
    // the kept edges is a valid potential for the whole rounded graph.
    TaskLog log;
    const DistLabels rounded_dist = distances_from_all(round.instance, *psi, log);
    stats.counter.record_sequential(log);
    for (Vertex v = 0; v < n; ++v) {
      phi[v] = narrow(Wide{phi[v]} + Wide{round.step} * rounded_dist[v], "potential");
    }
  }

  // w*_phi >= 0: recover dist_w(V, .) = floor(dist_w*(V, .) / 2n).
  TaskLog log;
  const DistLabels scaled_dist = distances_from_all(scaled, phi, log);
  stats.counter.record_sequential(log);
  Potential johnson(n);
  const Wide factor = 2 * static_cast<Wide>(n);
  for (Vertex v = 0; v < n; ++v) johnson[v] = narrow(floor_div(scaled_dist[v], factor), "potential");

  if (!validate_potential(g, johnson).empty()) {
    throw std::logic_error("make_nonnegative: recovered potential leaves a negative edge");
  }
  result.outcome = std::move(johnson);
  return result;
}

SsspResult solve_sssp(const Graph& g, Vertex source, std::uint64_t seed, const PipelineOptions& options) {
  if (source >= g.num_vertices()) throw std::invalid_argument("source vertex out of range");
  NonnegativeResult reduced = make_nonnegative(g, seed, options);
  SsspResult out;
  out.stats = std::move(reduced.stats);
  if (auto* cycle = std::get_if<NegativeCycle>(&reduced.outcome)) {
    out.outcome = std::move(*cycle);
    return out;
  }
  const Potential& phi = std::get<Potential>(reduced.outcome);
  if (!validate_potential(g, phi).empty()) {
    throw std::logic_error("solve_sssp: potential failed validation");
  }
  TaskLog log;
  out.outcome = build_tree(g, phi, source, &log);
  out.stats.counter.record_sequential(log);
  return out;
}

}  // namespace negsssp
