#include "negsssp/restricted.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "negsssp/baselines.hpp"
#include "negsssp/fewneg.hpp"
#include "negsssp/rng.hpp"

namespace negsssp {

namespace {

// Runs body(i) for i in [0, count) on up to `threads` workers. The first
// exception (lowest index) is rethrown on the caller's thread.
template <typename Body>
void parallel_for(std::size_t count, std::size_t threads, Body&& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_index = count;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t workers = std::min(threads, count);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// d is dist(S, .) in h as soon as it is <= 0 (always true) and satisfies
// every triangle inequality.
bool certifies_distances(const Graph& h, const DistLabels& d) {
  for (const Edge& e : h.edges()) {
    if (d[e.to] > d[e.from] + e.weight) return false;
  }
  return true;
}

// phi^(i) for one cluster: pointwise min over the previous level's
// potentials of FewNegSSSP(G[S], phi, t).
//
// FewNegSSSP never undershoots dist(S, .), so once any potential yields
// exact distances the min is settled. Each potential is tried with 1, 2, 4,
// ... layers up to t and stops at the first certified result; only when no
// potential certifies does the min over full-budget results decide. The
// value under phi depends only on which edges phi makes negative, so equal
// patterns are run once.
std::vector<Weight> cluster_potential(const Subgraph& sub, const std::vector<Potential>& previous,
                                      std::size_t t, TaskLog& log, const NonnegativeOracle& oracle) {
  const Graph& h = sub.graph;
  const std::size_t k = h.num_vertices();
  if (h.num_edges() == 0) return std::vector<Weight>(k, 0);

  std::vector<Potential> local(previous.size(), Potential(k));
  std::vector<std::vector<std::uint8_t>> pattern(previous.size(), std::vector<std::uint8_t>(h.num_edges()));
  std::vector<std::size_t> negatives(previous.size(), 0);
  for (std::size_t p = 0; p < previous.size(); ++p) {
    for (Vertex v = 0; v < k; ++v) local[p][v] = previous[p][sub.to_parent[v]];
    for (EdgeId id = 0; id < h.num_edges(); ++id) {
      pattern[p][id] = reweight(h.edge(id), local[p]) < 0;
      negatives[p] += pattern[p][id];
    }
  }

  std::vector<std::size_t> order;
  for (std::size_t p = 0; p < previous.size(); ++p) {
    const bool seen = std::any_of(order.begin(), order.end(), [&](std::size_t q) { return pattern[q] == pattern[p]; });
    if (!seen) order.push_back(p);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return negatives[a] < negatives[b]; });

  std::vector<Weight> out(k, kInfinity);
  for (std::size_t p : order) {
    const std::size_t cap = std::min(t, negatives[p]);
    DistLabels d;
    for (std::size_t layers = std::min<std::size_t>(1, cap);; layers = std::min(2 * layers, cap)) {
      d = few_neg_sssp(h, local[p], layers, &log, oracle);
      if (certifies_distances(h, d)) return d;
      if (layers == cap) break;
    }
    for (Vertex v = 0; v < k; ++v) out[v] = std::min(out[v], d[v]);
  }
  return out;
}

std::uint64_t call_size(const OracleCall& call) { return call.n + call.m; }

}  // namespace

RestrictedParams compute_params(std::size_t n, std::size_t c_whp, std::size_t c_ldd) {
  if (n == 0) throw std::invalid_argument("compute_params: n must be >= 1");
  RestrictedParams p;
  p.c_whp = c_whp;
  p.c_ldd = c_ldd;
  const std::size_t log_n = ceil_log2(n);
  p.levels = std::max<std::size_t>(1, ceil_log2(2 * static_cast<std::uint64_t>(n) * n));
  p.repetitions = std::max<std::size_t>(1, (2 + c_whp) * log_n);
  p.quality = c_ldd * log_n * log_n;
  p.budget = std::max<std::size_t>(2, 4 * p.quality + 1);
  return p;
}

std::vector<EdgeId> validate_potential(const Graph& g, const Potential& phi) {
  if (phi.size() != g.num_vertices()) throw std::invalid_argument("potential must cover every vertex");
  std::vector<EdgeId> bad;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (reweight(g.edge(id), phi) < 0) bad.push_back(id);
  }
  return bad;
}

RestrictedRun restricted_sssp(const Graph& g, std::uint64_t seed, const RestrictedOptions& options) {
  const std::size_t n = g.num_vertices();
  RestrictedRun run;
  if (n == 0) return run;
  if (options.check_input) {
    const RestrictedVerdict verdict = validate_restricted(g);
    if (!verdict.ok) throw RestrictedInputError("restricted_sssp: input is not restricted: " + verdict.reason);
  }
  const NonnegativeOracle& oracle = options.oracle ? *options.oracle : default_oracle();
  run.params = compute_params(n, options.c_whp, options.c_ldd);
  const RestrictedParams& params = run.params;
  const auto bound = static_cast<Weight>(n) * static_cast<Weight>(n);

  const Graph nonneg = nonneg_projection(g);
  std::vector<Potential> previous{Potential(n, 0)};
  Potential last;

  for (std::size_t level = 1; level <= params.levels; ++level) {
    const std::size_t reps = level == params.levels ? 1 : params.repetitions;
    std::vector<Potential> current;
    std::vector<std::pair<Clustering, std::size_t>> seen_clusterings;  // clustering -> index in `current`

    for (std::size_t rep = 1; rep <= reps; ++rep) {
      LddParams ldd_params;
      ldd_params.d = Weight{1} << std::min<std::size_t>(level, 62);
      ldd_params.seed = split_seed(seed, "round", {level, rep});
      ldd_params.c_geo = options.c_geo;
      TaskLog ldd_log;
      const Clustering clustering = dir_ldd(nonneg, ldd_params, &ldd_log);
      run.counter.record_sequential(ldd_log);
      ++run.rounds;
      run.max_clusters = std::max(run.max_clusters, clustering.parts.size());

      if (level == params.levels && !clustering.cut_edges.empty()) {
        throw std::logic_error("restricted_sssp: top-level decomposition cut an edge");
      }

      auto reuse = std::find_if(seen_clusterings.begin(), seen_clusterings.end(),
                                [&](const auto& entry) { return entry.first == clustering; });
      if (reuse != seen_clusterings.end() && !options.observer) {
        last = current[reuse->second];
        continue;
      }

      const std::size_t k = clustering.parts.size();
      std::vector<std::vector<Weight>> cluster_phi(k);
      std::vector<TaskLog> logs(k);
      parallel_for(k, options.threads, [&](std::size_t i) {
        const Subgraph sub = induced_subgraph(g, clustering.parts[i]);
        cluster_phi[i] = cluster_potential(sub, previous, params.budget, logs[i], oracle);
      });

      // Disjointness audit: per potential, the cluster problems together are
      // no larger than G.
      std::size_t sum_n = 0, sum_m = 0;
      for (std::size_t i = 0; i < k; ++i) {
        sum_n += clustering.parts[i].size();
        for (Vertex v : clustering.parts[i]) {
          for (EdgeId id : g.out_edges(v)) sum_m += clustering.part_index[g.edge(id).to] == i;
        }
      }
      if (sum_n != n || sum_m > g.num_edges()) {
        throw std::logic_error("restricted_sssp: cluster sizes exceed the input size");
      }
      run.counter.record_stage(logs);

      Potential combined(n);
      for (std::size_t i = 0; i < k; ++i) {
        const auto shift = static_cast<Weight>(i + 1) * static_cast<Weight>(n);
        for (std::size_t j = 0; j < clustering.parts[i].size(); ++j) {
          combined[clustering.parts[i][j]] = cluster_phi[i][j] - shift;
        }
      }
      for (Weight value : combined) run.range_ok = run.range_ok && value >= -bound && value <= bound;
      if (!run.range_ok) {
        // Only a non-restricted input can push phi out of range.
        if (options.check_input) {
          throw std::logic_error("restricted_sssp: potential left [-n^2, n^2] at level " + std::to_string(level));
        }
        run.potential = std::move(combined);
        return run;
      }

      if (options.observer) {
        RoundTrace trace;
        trace.level = level;
        trace.repetition = rep;
        trace.clustering = &clustering;
        trace.cluster_potentials = &cluster_phi;
        trace.combined = &combined;
        options.observer(trace);
      }

      if (reuse == seen_clusterings.end()) seen_clusterings.emplace_back(clustering, current.size());
      last = combined;
      if (std::find(current.begin(), current.end(), combined) == current.end()) current.push_back(std::move(combined));
    }
    previous = std::move(current);
  }

  // Closed-form size bound over all oracle calls. A j-layer call on G[S] has
  // size at most (2j+2)(|S|+|E(S)|+1); the doubling schedule sums to at most
  // 6(t+1) layers' worth, and the clusters of one round add up to at most
  // 2(n+m+1).
  std::uint64_t total = 0;
  for (const LoggedCall& entry : run.counter.log()) {
    if (entry.call.kind != CallKind::kLdd) total += call_size(entry.call);
  }
  const std::uint64_t limit = static_cast<std::uint64_t>(params.levels) * params.repetitions * params.repetitions *
                              kOracleSizeFactor * (params.budget + 1) * (n + g.num_edges() + 1);
  if (total > limit) throw std::logic_error("restricted_sssp: oracle sizes exceed the closed-form bound");

  run.potential = std::move(last);
  return run;
}

}  // namespace negsssp
