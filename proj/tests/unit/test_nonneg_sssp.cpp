#include <gtest/gtest.h>

#include <random>

#include "negsssp/baselines.hpp"
#include "negsssp/nonneg_sssp.hpp"
#include "oracles.hpp"

using namespace negsssp;

namespace {

DistLabels dist_of(const Graph& g, std::vector<SourceOffset> sources, const NonnegativeOracle& o = default_oracle()) {
  return dijkstra_multi(g, sources, nullptr, o).dist;
}

void expect_tight(const Graph& g, const DistLabels& dist, const std::vector<std::optional<ParentLink>>& parent) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!parent[v]) continue;
    const Edge& e = g.edge(parent[v]->edge);
    EXPECT_EQ(e.to, v);
    EXPECT_EQ(e.from, parent[v]->parent);
    EXPECT_EQ(dist[v], dist[e.from] + e.weight);
  }
  for (const Edge& e : g.edges()) {
    if (is_finite(dist[e.from])) {
      EXPECT_LE(dist[e.to], dist[e.from] + e.weight);
    }
  }
}

}  // namespace

TEST(DijkstraMulti, Chain) {
  const Graph g = build_graph(3, {{0, 1, 2}, {1, 2, 3}});
  EXPECT_EQ(dist_of(g, {{0, 0}}), (DistLabels{0, 2, 5}));
}

TEST(DijkstraMulti, OffsetsActAsVirtualSource) {
  const Graph g = build_graph(3, {{0, 1, 2}, {1, 2, 3}});
  EXPECT_EQ(dist_of(g, {{0, 5}, {1, 0}}), (DistLabels{5, 0, 3}));
}

TEST(DijkstraMulti, UnreachableIsInfinite) {
  const Graph g = build_graph(3, {{0, 1, 2}});
  EXPECT_EQ(dist_of(g, {{0, 0}})[2], kInfinity);
}

TEST(DijkstraMulti, RejectsNegativeEdge) {
  const Graph g = build_graph(2, {{0, 1, -1}});
  try {
    dist_of(g, {{0, 0}});
    FAIL();
  } catch (const NegativeWeightError& e) {
    EXPECT_EQ(e.edge(), 0u);
    EXPECT_NE(std::string(e.what()).find("negative weight passed to nonnegative oracle"), std::string::npos);
  }
  EXPECT_THROW(dist_of(build_graph(2, {}), {{0, -1}}), std::invalid_argument);
}

TEST(DijkstraMulti, MatchesBellmanFordRandomized) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 64;
    const Graph g = oracle::random_graph(n, rng() % (4 * n + 1), 0, 20, 1000 + trial);
    std::vector<SourceOffset> sources;
    const std::size_t count = 1 + rng() % 3;
    for (std::size_t i = 0; i < count; ++i) {
      sources.push_back({static_cast<Vertex>(rng() % n), static_cast<Weight>(rng() % 10)});
    }
    const ShortestPathForest forest = dijkstra_multi(g, sources);
    const auto bf = bellman_ford(g, sources);
    ASSERT_TRUE(std::holds_alternative<BellmanFordResult>(bf));
    EXPECT_EQ(forest.dist, std::get<BellmanFordResult>(bf).dist);
    expect_tight(g, forest.dist, forest.parent);
  }
}

TEST(DijkstraMulti, RecordsOneCall) {
  const Graph g = build_graph(3, {{0, 1, 2}, {1, 2, 3}});
  TaskLog log;
  const std::vector<SourceOffset> sources{{0, 0}};
  const auto forest = dijkstra_multi(g, sources, &log);
  ASSERT_EQ(log.calls().size(), 1u);
  EXPECT_EQ(log.calls()[0].kind, CallKind::kDijkstra);
  EXPECT_EQ(log.calls()[0].n, 3u);
  EXPECT_EQ(log.calls()[0].m, 2u);
  EXPECT_EQ(log.calls()[0].work, forest.work);
  EXPECT_EQ(forest.work, 3u + 2u);  // three pops, two relaxations
}

TEST(DijkstraMulti, SwappedOracleAgrees) {
  const oracle::BellmanFordOracle bf;
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(20, 60, 0, 9, 50 + trial);
    EXPECT_EQ(dist_of(g, {{0, 0}, {7, 3}}, bf), dist_of(g, {{0, 0}, {7, 3}}));
  }
}

TEST(DijkstraMulti, TiesResolveDeterministically) {
  // Two equal-length routes into 3; the smaller id is settled first and
  // becomes the parent.
  const Graph g = build_graph(4, {{0, 2, 1}, {0, 1, 1}, {2, 3, 1}, {1, 3, 1}});
  const auto forest = dijkstra_multi(g, std::vector<SourceOffset>{{0, 0}});
  ASSERT_TRUE(forest.parent[3]);
  EXPECT_EQ(forest.parent[3]->parent, 1u);
}

TEST(BuildTree, PlainDijkstraWithZeroPotential) {
  const Graph g = build_graph(3, {{0, 1, 2}, {1, 2, 3}});
  const TreeResult tree = build_tree(g, Potential(3, 0), 0);
  EXPECT_EQ(tree.dist, (DistLabels{0, 2, 5}));
  EXPECT_EQ(tree.root, 0u);
  EXPECT_FALSE(tree.parent[0]);
}

TEST(BuildTree, TriangleOriginalDistances) {
  const Graph g = build_graph(3, {{0, 1, -1}, {1, 2, 4}, {2, 0, 0}});
  const TreeResult tree = build_tree(g, Potential{0, -1, 0}, 0);
  EXPECT_EQ(tree.dist, oracle::dist_from(g, 0));
  EXPECT_EQ(tree.dist, (DistLabels{0, -1, 3}));
  expect_tight(g, tree.dist, tree.parent);
}

TEST(BuildTree, UnreachableAbsent) {
  const Graph g = build_graph(4, {{0, 1, -1}, {1, 0, 2}, {2, 3, -5}});
  const TreeResult tree = build_tree(g, Potential{0, -1, 0, -5}, 0);
  EXPECT_EQ(tree.dist[2], kInfinity);
  EXPECT_EQ(tree.dist[3], kInfinity);
  EXPECT_FALSE(tree.parent[3]);
}

TEST(BuildTree, RejectsInvalidPotential) {
  const Graph g = build_graph(2, {{0, 1, -1}});
  try {
    build_tree(g, Potential{0, 0}, 0);
    FAIL();
  } catch (const NegativeWeightError& e) {
    EXPECT_EQ(e.edge(), 0u);
  }
}
