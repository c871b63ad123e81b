#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "negsssp/graph.hpp"
#include "oracles.hpp"

using namespace negsssp;

namespace {

// a -> b (-1), b -> c (4), c -> a (0); z isolated when n = 4.
Graph triangle(std::size_t n = 3) { return build_graph(n, {{0, 1, -1}, {1, 2, 4}, {2, 0, 0}}); }

std::vector<Weight> weights_of(const Graph& g) {
  std::vector<Weight> w;
  for (const Edge& e : g.edges()) w.push_back(e.weight);
  return w;
}

}  // namespace

TEST(BuildGraph, SingleVertexNoEdges) {
  const Graph g = build_graph(1, {});
  EXPECT_EQ(g.num_vertices(), 1u);
  EXPECT_EQ(g.num_edges(), 0u);
  EXPECT_TRUE(g.out_edges(0).empty());
}

TEST(BuildGraph, SingleEdgeAdjacency) {
  const Graph g = build_graph(2, {{0, 1, -1}});
  ASSERT_EQ(g.out_edges(0).size(), 1u);
  EXPECT_EQ(g.edge(g.out_edges(0)[0]), (Edge{0, 1, -1}));
  EXPECT_EQ(g.in_edges(1).size(), 1u);
  EXPECT_TRUE(g.out_edges(1).empty());
}

TEST(BuildGraph, EndpointOutOfRangeNamesEdge) {
  try {
    build_graph(2, {{0, 1, 3}, {0, 5, 1}});
    FAIL() << "expected GraphError";
  } catch (const GraphError& e) {
    EXPECT_EQ(e.edge(), 1u);
    EXPECT_NE(std::string(e.what()).find("endpoint out of range"), std::string::npos);
  }
}

TEST(BuildGraph, WeightCap) {
  EXPECT_NO_THROW(build_graph(2, {{0, 1, kMaxInputWeight}, {1, 0, -kMaxInputWeight}}));
  EXPECT_THROW(build_graph(2, {{0, 1, kMaxInputWeight + 1}}), GraphError);
  EXPECT_THROW(build_graph(2, {{0, 1, -kMaxInputWeight - 1}}), GraphError);
}

TEST(BuildGraph, NegativeSelfLoopIsRepresentable) {
  const Graph g = build_graph(1, {{0, 0, -3}});
  EXPECT_EQ(g.min_weight(), -3);
}

TEST(BuildGraph, AdjacencyFollowsEdgeOrder) {
  const Graph g = oracle::random_graph(12, 60, -5, 5, 7);
  std::vector<EdgeId> seen_out, seen_in;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    EXPECT_TRUE(std::is_sorted(g.out_edges(v).begin(), g.out_edges(v).end()));
    EXPECT_TRUE(std::is_sorted(g.in_edges(v).begin(), g.in_edges(v).end()));
    for (EdgeId id : g.out_edges(v)) {
      EXPECT_EQ(g.edge(id).from, v);
      seen_out.push_back(id);
    }
    for (EdgeId id : g.in_edges(v)) {
      EXPECT_EQ(g.edge(id).to, v);
      seen_in.push_back(id);
    }
  }
  std::sort(seen_out.begin(), seen_out.end());
  std::sort(seen_in.begin(), seen_in.end());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    EXPECT_EQ(seen_out[id], id);
    EXPECT_EQ(seen_in[id], id);
  }
}

TEST(ApplyPotential, ZeroPotentialIsIdentity) {
  const Graph g = oracle::random_graph(10, 30, -9, 9, 1);
  EXPECT_EQ(apply_potential(g, Potential(10, 0)), g);
}

TEST(ApplyPotential, TriangleWithDistancePotential) {
  const Graph g = triangle();
  // dist(V, .) from the Floyd-Warshall oracle is the potential.
  const auto phi = oracle::dist_from_all(g);
  EXPECT_EQ(phi, (Potential{0, -1, 0}));
  EXPECT_EQ(weights_of(apply_potential(g, phi)), (std::vector<Weight>{0, 3, 0}));
}

TEST(ApplyPotential, CycleWeightsAreInvariant) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 9;
    Potential phi(n);
    for (auto& p : phi) p = std::uniform_int_distribution<Weight>(-100, 100)(rng);
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n), static_cast<Weight>(trial - v)});
    const Graph g = build_graph(n, edges);
    const Graph h = apply_potential(g, phi);
    Weight before = 0, after = 0;
    for (EdgeId id = 0; id < n; ++id) {
      before += g.edge(id).weight;
      after += h.edge(id).weight;
    }
    EXPECT_EQ(before, after);
  }
}

TEST(ApplyPotential, InverseRestoresGraph) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_graph(8, 25, -20, 20, 100 + trial);
    Potential phi(8), neg(8);
    for (std::size_t v = 0; v < 8; ++v) {
      phi[v] = std::uniform_int_distribution<Weight>(-1000, 1000)(rng);
      neg[v] = -phi[v];
    }
    EXPECT_EQ(apply_potential(apply_potential(g, phi), neg), g);
  }
}

TEST(ApplyPotential, ShortestPathsPreserved) {
  // Under w_phi every u-v path shifts by phi(u) - phi(v), so minima move
  // together; checked by enumerating simple paths.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = oracle::random_no_negative_cycle(6, 14, 4, 5, 200 + trial);
    Potential phi(6);
    for (auto& p : phi) p = std::uniform_int_distribution<Weight>(-30, 30)(rng);
    const Graph h = apply_potential(g, phi);
    for (Vertex u = 0; u < 6; ++u) {
      for (Vertex v = 0; v < 6; ++v) {
        const auto a = oracle::min_simple_path(g, u, v);
        const auto b = oracle::min_simple_path(h, u, v);
        ASSERT_EQ(a.has_value(), b.has_value());
        if (a) {
          EXPECT_EQ(*b, *a + phi[u] - phi[v]);
        }
      }
    }
  }
}

TEST(ApplyPotential, OverflowThrows) {
  const Graph g = build_graph(2, {{0, 1, 1}});
  EXPECT_THROW(apply_potential(g, Potential{std::numeric_limits<Weight>::max(), 0}), std::overflow_error);
  EXPECT_THROW(apply_potential(g, Potential{0}), std::invalid_argument);
}

TEST(NonnegProjection, ClampsNegatives) {
  const Graph g = triangle();
  EXPECT_EQ(weights_of(nonneg_projection(g)), (std::vector<Weight>{0, 4, 0}));
}

TEST(NonnegProjection, FixedPointAndIdempotent) {
  const Graph nonneg = oracle::random_graph(9, 30, 0, 7, 2);
  EXPECT_EQ(nonneg_projection(nonneg), nonneg);
  const Graph g = oracle::random_graph(9, 30, -7, 7, 3);
  EXPECT_EQ(nonneg_projection(nonneg_projection(g)), nonneg_projection(g));
}

TEST(InducedSubgraph, WholeVertexSet) {
  const Graph g = oracle::random_graph(7, 20, -3, 3, 4);
  std::vector<Vertex> all{0, 1, 2, 3, 4, 5, 6};
  const Subgraph sub = induced_subgraph(g, all);
  EXPECT_EQ(sub.graph, g);
  EXPECT_EQ(sub.to_parent, all);
}

TEST(InducedSubgraph, SingleVertex) {
  const Graph g = triangle();
  const std::vector<Vertex> s{1};
  const Subgraph sub = induced_subgraph(g, s);
  EXPECT_EQ(sub.graph.num_vertices(), 1u);
  EXPECT_EQ(sub.graph.num_edges(), 0u);
}

TEST(InducedSubgraph, TriangleKeepsOneEdge) {
  const std::vector<Vertex> s{0, 1};
  const Subgraph sub = induced_subgraph(triangle(), s);
  ASSERT_EQ(sub.graph.num_edges(), 1u);
  EXPECT_EQ(sub.graph.edge(0), (Edge{0, 1, -1}));
  EXPECT_EQ(sub.edge_to_parent, (std::vector<EdgeId>{0}));
}

TEST(InducedSubgraph, MatchesEdgeEnumeration) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(10, 40, -5, 5, 300 + trial);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < 10; ++v) {
      if (rng() % 2) s.push_back(v);
    }
    std::shuffle(s.begin(), s.end(), rng);
    const Subgraph sub = induced_subgraph(g, s);
    EXPECT_EQ(sub.to_parent, s);
    std::vector<Edge> expected;
    for (const Edge& e : g.edges()) {
      const auto a = std::find(s.begin(), s.end(), e.from);
      const auto b = std::find(s.begin(), s.end(), e.to);
      if (a != s.end() && b != s.end()) {
        expected.push_back({static_cast<Vertex>(a - s.begin()), static_cast<Vertex>(b - s.begin()), e.weight});
      }
    }
    EXPECT_EQ(std::vector<Edge>(sub.graph.edges().begin(), sub.graph.edges().end()), expected);
    for (EdgeId id = 0; id < sub.graph.num_edges(); ++id) {
      EXPECT_EQ(g.edge(sub.edge_to_parent[id]).weight, sub.graph.edge(id).weight);
    }
  }
}

TEST(SccCondensation, ChainIsSingletonsInOrder) {
  const Graph g = build_graph(3, {{0, 1, 1}, {1, 2, 1}});
  const SccOrder order = scc_condensation_topo(g);
  EXPECT_EQ(order.components, (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
}

TEST(SccCondensation, TwoCycleIsOneComponent) {
  const SccOrder order = scc_condensation_topo(build_graph(2, {{0, 1, 1}, {1, 0, 1}}));
  EXPECT_EQ(order.components, (std::vector<std::vector<Vertex>>{{0, 1}}));
}

TEST(SccCondensation, CycleThenTail) {
  const SccOrder order = scc_condensation_topo(build_graph(3, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}}));
  EXPECT_EQ(order.components, (std::vector<std::vector<Vertex>>{{0, 1}, {2}}));
  EXPECT_EQ(order.component_index, (std::vector<std::size_t>{0, 0, 1}));
}

TEST(SccCondensation, MatchesMutualReachability) {
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(3 + trial % 20, 2 + trial, 0, 3, 400 + trial);
    const SccOrder order = scc_condensation_topo(g);
    auto components = order.components;
    std::sort(components.begin(), components.end());
    EXPECT_EQ(components, oracle::scc_classes(g));
    for (const Edge& e : g.edges()) {
      EXPECT_LE(order.component_index[e.from], order.component_index[e.to]);
    }
    for (std::size_t c = 0; c < order.components.size(); ++c) {
      for (Vertex v : order.components[c]) EXPECT_EQ(order.component_index[v], c);
    }
    EXPECT_EQ(scc_condensation_topo(g).components, order.components);
  }
}

TEST(SccCondensation, SkipMaskRemovesEdges) {
  const Graph g = build_graph(2, {{0, 1, 1}, {1, 0, 1}});
  const std::vector<std::uint8_t> skip{0, 1};
  EXPECT_EQ(scc_condensation_topo(g, skip).components, (std::vector<std::vector<Vertex>>{{0}, {1}}));
}
