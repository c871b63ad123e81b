#include "negsssp/ldd.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "negsssp/rng.hpp"

namespace negsssp {

namespace {

// Dijkstra over the vertices with alive[v] set, following edges forward
// (kOut) or backward (kIn), stopping past `cutoff`. Returns reached vertices
// in pop order; dist holds their distances and is reset by the caller.
class BoundedSearch {
 public:
  explicit BoundedSearch(std::size_t n) : dist_(n, kInfinity), settled_(n, 0) {}

  std::vector<Vertex> run(const Graph& g, Vertex center, BallDirection direction, Weight cutoff,
                          const std::vector<std::uint8_t>* alive, std::uint64_t& work) {
    reset();
    using Entry = std::pair<Distance, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    std::vector<Vertex> reached;
    touch(center, 0);
    heap.emplace(0, center);
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d != dist_[u] || d > cutoff) continue;
      if (settled_[u]) continue;
      settled_[u] = 1;
      reached.push_back(u);
      ++work;
      auto ids = direction == BallDirection::kOut ? g.out_edges(u) : g.in_edges(u);
      for (EdgeId id : ids) {
        const Edge& e = g.edge(id);
        const Vertex w = direction == BallDirection::kOut ? e.to : e.from;
        ++work;
        if (alive && !(*alive)[w]) continue;
        const Distance candidate = d + e.weight;
        if (candidate <= cutoff && candidate < dist_[w]) {
          touch(w, candidate);
          heap.emplace(candidate, w);
        }
      }
    }
    return reached;
  }

  Distance dist(Vertex v) const { return dist_[v]; }

 private:
  void touch(Vertex v, Distance d) {
    if (dist_[v] == kInfinity) touched_.push_back(v);
    dist_[v] = d;
  }
  void reset() {
    for (Vertex v : touched_) {
      dist_[v] = kInfinity;
      settled_[v] = 0;
    }
    touched_.clear();
  }

  std::vector<Distance> dist_;
  std::vector<std::uint8_t> settled_;
  std::vector<Vertex> touched_;
};

struct Region {
  std::vector<Vertex> vertices;  // ascending global ids
  std::uint64_t seed = 0;
  std::size_t depth = 0;
};

void require_nonnegative(const Graph& g) {
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (g.edge(id).weight < 0) {
      throw std::invalid_argument("dir_ldd: negative weight on edge " + std::to_string(id));
    }
  }
}

Clustering clustering_from_removed(const Graph& g, const std::vector<std::uint8_t>& removed) {
  SccOrder order = scc_condensation_topo(g, removed);
  Clustering out;
  out.parts = std::move(order.components);
  out.part_index = std::move(order.component_index);
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (out.part_index[e.from] > out.part_index[e.to]) out.cut_edges.push_back(id);
  }
  return out;
}

}  // namespace

std::size_t ceil_log2(std::uint64_t x) {
  std::size_t bits = 0;
  while (bits < 64 && (std::uint64_t{1} << bits) < x) ++bits;
  return bits;
}

std::vector<Vertex> grow_ball(const Graph& g, Vertex center, Weight radius, BallDirection direction) {
  require_nonnegative(g);
  BoundedSearch search(g.num_vertices());
  std::uint64_t work = 0;
  std::vector<Vertex> ball = search.run(g, center, direction, radius, nullptr, work);
  std::sort(ball.begin(), ball.end());
  return ball;
}

bool weak_diameter_check(const Graph& g, std::span<const Vertex> vertices, Weight d) {
  require_nonnegative(g);
  if (d < 0) return vertices.empty();
  BoundedSearch search(g.num_vertices());
  std::uint64_t work = 0;
  for (Vertex u : vertices) {
    search.run(g, u, BallDirection::kOut, d, nullptr, work);
    for (Vertex v : vertices) {
      if (search.dist(v) > d) return false;
    }
  }
  return true;
}

Clustering dir_ldd(const Graph& g, const LddParams& params, TaskLog* log) {
  require_nonnegative(g);
  if (params.d < 1) throw std::invalid_argument("dir_ldd: d must be >= 1");
  if (params.c_geo < 1.0) throw std::invalid_argument("dir_ldd: c_geo must be >= 1");

  const std::size_t n = g.num_vertices();
  const std::size_t log_n = std::max<std::size_t>(1, ceil_log2(n));
  const std::size_t max_depth = params.max_recursion.value_or(100 * log_n);
  std::uint64_t work = g.num_vertices() + g.num_edges();  // final SCC pass

  std::vector<std::uint8_t> removed(g.num_edges(), 0);
  const __int128 trivial_bound = static_cast<__int128>(n == 0 ? 0 : n - 1) * g.max_weight() + 1;

  if (static_cast<__int128>(params.d) < trivial_bound) {
    const double rate = std::min(1.0, params.c_geo * static_cast<double>(log_n) / static_cast<double>(params.d));
    const Weight cap = params.d / 2;
    std::vector<Region> stack;
    {
      Region root;
      root.vertices.resize(n);
      for (Vertex v = 0; v < n; ++v) root.vertices[v] = v;
      root.seed = split_seed(params.seed, "ldd");
      stack.push_back(std::move(root));
    }

    while (!stack.empty()) {
      Region region = std::move(stack.back());
      stack.pop_back();
      const std::size_t k = region.vertices.size();
      if (k <= 1) continue;

      const Subgraph sub = induced_subgraph(g, region.vertices);
      const Graph& local = sub.graph;
      work += local.num_vertices() + local.num_edges();

      const SccOrder scc = scc_condensation_topo(local);
      if (scc.components.size() > 1) {
        for (std::size_t c = 0; c < scc.components.size(); ++c) {
          if (scc.components[c].size() <= 1) continue;
          Region child;
          for (Vertex v : scc.components[c]) child.vertices.push_back(sub.to_parent[v]);
          child.seed = split_seed(region.seed, "scc", {c});
          child.depth = region.depth;
          stack.push_back(std::move(child));
        }
        continue;
      }

      // Strongly connected from here on. Radius test around the center:
      // dist(u, v) <= dist(u, c) + dist(c, v).
      BoundedSearch search(k);
      const Vertex center = 0;
      Distance out_radius = 0, in_radius = 0;
      for (Vertex v : search.run(local, center, BallDirection::kOut, kInfinity, nullptr, work)) {
        out_radius = std::max(out_radius, search.dist(v));
      }
      for (Vertex v : search.run(local, center, BallDirection::kIn, kInfinity, nullptr, work)) {
        in_radius = std::max(in_radius, search.dist(v));
      }
      if (static_cast<__int128>(out_radius) + in_radius <= params.d) continue;

      if (k <= 64) {
        bool small = true;
        for (Vertex u = 0; u < k && small; ++u) {
          const auto reached = search.run(local, u, BallDirection::kOut, params.d, nullptr, work);
          small = reached.size() == k;
        }
        if (small) continue;
      }

      if (region.depth >= max_depth) {
        throw LddError("dir_ldd: recursion depth cap " + std::to_string(max_depth) + " exceeded");
      }

      CounterRng rng(region.seed);
      std::vector<std::uint8_t> alive(k, 1);
      Vertex next_center = 0;
      std::size_t remaining = k;
      for (std::size_t piece = 0; remaining > 0; ++piece) {
        while (!alive[next_center]) ++next_center;
        BallDirection direction = rng.coin() ? BallDirection::kOut : BallDirection::kIn;
        Weight radius = std::min<Weight>(cap, rng.geometric(rate));
        std::vector<Vertex> ball = search.run(local, next_center, direction, radius, &alive, work);
        if (piece == 0 && ball.size() == k) {
          direction = direction == BallDirection::kOut ? BallDirection::kIn : BallDirection::kOut;
          radius = std::min<Weight>(cap, rng.geometric(rate));
          ball = search.run(local, next_center, direction, radius, &alive, work);
          // Both balls cover the region: diameter <= 2 * cap <= d.
          if (ball.size() == k) break;
        }

        std::vector<std::uint8_t> in_ball(k, 0);
        for (Vertex v : ball) in_ball[v] = 1;
        for (Vertex v : ball) {
          auto ids = direction == BallDirection::kOut ? local.out_edges(v) : local.in_edges(v);
          for (EdgeId id : ids) {
            const Edge& e = local.edge(id);
            const Vertex other = direction == BallDirection::kOut ? e.to : e.from;
            ++work;
            if (alive[other] && !in_ball[other]) removed[sub.edge_to_parent[id]] = 1;
          }
        }
        for (Vertex v : ball) alive[v] = 0;
        remaining -= ball.size();

        if (ball.size() > 1) {
          Region child;
          for (Vertex v : ball) child.vertices.push_back(sub.to_parent[v]);
          std::sort(child.vertices.begin(), child.vertices.end());
          child.seed = split_seed(region.seed, "ball", {piece});
          child.depth = region.depth + 1;
          stack.push_back(std::move(child));
        }
      }
    }
  }

  Clustering out = clustering_from_removed(g, removed);
  if (log) log->record({CallKind::kLdd, g.num_vertices(), g.num_edges(), work});
  return out;
}

void check_clustering(const Graph& g, const Clustering& c) {
  const std::size_t n = g.num_vertices();
  if (c.part_index.size() != n) throw std::logic_error("clustering: part_index size mismatch");
  std::vector<std::uint8_t> seen(n, 0);
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (c.parts[i].empty()) throw std::logic_error("clustering: empty part");
    for (Vertex v : c.parts[i]) {
      if (v >= n || seen[v]) throw std::logic_error("clustering: parts do not partition V");
      seen[v] = 1;
      if (c.part_index[v] != i) throw std::logic_error("clustering: part_index disagrees with parts");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw std::logic_error("clustering: parts do not cover V");
  }
  std::vector<EdgeId> cut;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (c.part_index[g.edge(id).from] > c.part_index[g.edge(id).to]) cut.push_back(id);
  }
  if (cut != c.cut_edges) throw std::logic_error("clustering: cut_edges does not match part order");
}

}  // namespace negsssp
