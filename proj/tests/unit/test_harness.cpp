#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "negsssp/baselines.hpp"
#include "negsssp/harness.hpp"
#include "oracles.hpp"

using namespace negsssp;

TEST(ParseGraph, Examples) {
  const ParsedGraph p = parse_graph("p sp 2 1\na 1 2 -1\n");
  EXPECT_EQ(p.graph, build_graph(2, {{0, 1, -1}}));
  EXPECT_FALSE(p.source);
  const ParsedGraph single = parse_graph("p sp 1 0\n");
  EXPECT_EQ(single.graph.num_vertices(), 1u);
  EXPECT_EQ(single.graph.num_edges(), 0u);
}

TEST(ParseGraph, CommentsSourceAndWhitespace) {
  const ParsedGraph p = parse_graph("c hello\n\np sp 3 2\ns 2\n  a 2 3  7\r\na 3 1 -4\n");
  ASSERT_TRUE(p.source);
  EXPECT_EQ(*p.source, 1u);
  EXPECT_EQ(p.graph, build_graph(3, {{1, 2, 7}, {2, 0, -4}}));
}

TEST(ParseGraph, ErrorsCarryLineNumbers) {
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"a 1 2 3\n", 1},
      {"p sp 2 1\na 1 3 0\n", 2},
      {"p sp 2 1\na 1 2 x\n", 2},
      {"p sp 2 2\na 1 2 1\n", 2},
      {"p sp 2 0\np sp 2 0\n", 2},
      {"p sp 2 0\nq\n", 2},
      {"p sp 2 1\n\na 1 2 2000000000000\n", 3},
      {"", 0},
      {"p sp 0 0\n", 1},
      {"p sp 2 0\ns 1\ns 2\n", 3},
  };
  for (const auto& [text, line] : cases) {
    try {
      parse_graph(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << text << " -> " << e.what();
    }
  }
}

TEST(WriteGraph, RoundTrip) {
  for (int trial = 0; trial < 30; ++trial) {
    GenSpec spec;
    spec.kind = static_cast<GenKind>(trial % 3);
    spec.n = 1 + trial;
    spec.m = 3 * trial;
    spec.seed = trial;
    const Graph g = gen_graph(spec);
    const std::optional<Vertex> source = trial % 2 ? std::optional<Vertex>(0) : std::nullopt;
    const ParsedGraph p = parse_graph(write_graph(g, source));
    EXPECT_EQ(p.graph, g);
    EXPECT_EQ(p.source, source);
  }
}

TEST(GenGraph, RestrictedPassesValidation) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenSpec spec;
    spec.kind = GenKind::kRestricted;
    spec.n = 2 + seed;
    spec.m = 5 * spec.n;
    spec.seed = seed;
    EXPECT_TRUE(validate_restricted(gen_graph(spec)).ok);
  }
}

TEST(GenGraph, GeneralHasNoNegativeCycleUnlessPlanted) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GenSpec spec;
    spec.n = 2 + seed % 30;
    spec.m = 4 * spec.n;
    spec.seed = seed;
    const Graph clean = gen_graph(spec);
    EXPECT_FALSE(oracle::has_negative_cycle(clean)) << seed;
    for (const Edge& e : clean.edges()) {
      EXPECT_GE(e.weight, spec.lo);
      EXPECT_LE(e.weight, spec.hi);
    }
    spec.plant_negative_cycle = true;
    const Graph planted = gen_graph(spec);
    EXPECT_TRUE(std::holds_alternative<NegativeCycle>(bellman_ford_all(planted))) << seed;
  }
}

TEST(GenGraph, NonnegAndEdgeless) {
  GenSpec spec;
  spec.kind = GenKind::kNonneg;
  spec.n = 10;
  spec.m = 40;
  spec.hi = 5;
  const Graph g = gen_graph(spec);
  for (const Edge& e : g.edges()) {
    EXPECT_GE(e.weight, 0);
    EXPECT_LE(e.weight, 5);
  }
  spec.m = 0;
  EXPECT_EQ(gen_graph(spec).num_edges(), 0u);
}

TEST(GenGraph, SeededAndRejectsBadSpecs) {
  GenSpec spec;
  spec.n = 30;
  spec.m = 90;
  spec.seed = 5;
  EXPECT_EQ(gen_graph(spec), gen_graph(spec));
  GenSpec other = spec;
  other.seed = 6;
  EXPECT_NE(gen_graph(spec), gen_graph(other));
  GenSpec bad = spec;
  bad.n = 0;
  EXPECT_THROW(gen_graph(bad), std::invalid_argument);
  bad = spec;
  bad.kind = GenKind::kNonneg;
  bad.plant_negative_cycle = true;
  EXPECT_THROW(gen_graph(bad), std::invalid_argument);
  EXPECT_EQ(parse_gen_kind("restricted"), GenKind::kRestricted);
  EXPECT_FALSE(parse_gen_kind("dense"));
}

TEST(Format, TextAndJson) {
  const Graph g = build_graph(3, {{0, 1, -3}, {1, 2, 2}});
  SsspResult r;
  TreeResult tree;
  tree.dist = {0, -3, kInfinity};
  tree.parent = {std::nullopt, ParentLink{0, 0}, std::nullopt};
  r.outcome = tree;
  EXPECT_EQ(format_result_text(r), "d 1 0\nd 2 -3\nd 3 inf\nt 2 1\n");
  EXPECT_EQ(format_result_json(r, 9),
            "{\"dist\":[0,-3,null],\"parent\":[null,1,null],\"cycle\":null,\"work\":0,\"span\":0,"
            "\"oracle_calls\":0,\"seed\":9}\n");
  SsspResult c;
  c.outcome = NegativeCycle{{0, 1, 0}, {0, 1}, -1};
  EXPECT_EQ(format_result_text(c), "cycle 1 2 1\n");
  const auto j = nlohmann::json::parse(format_result_json(c, 1));
  EXPECT_TRUE(j["dist"].is_null());
  EXPECT_EQ(j["cycle"], nlohmann::json::array({1, 2, 1}));
}

TEST(Format, Clustering) {
  const Graph g = build_graph(2, {{0, 1, 5}, {1, 0, 5}});
  const Clustering c{{{1}, {0}}, {1, 0}, {0}};
  EXPECT_EQ(format_clustering(g, c), "part 1: 2\npart 2: 1\ncut 1 2\n");
}

TEST(LoglogSlope, ExactPowerLaws) {
  EXPECT_NEAR(loglog_slope({1, 2, 4, 8}, {3, 6, 12, 24}), 1.0, 1e-12);
  EXPECT_NEAR(loglog_slope({1, 2, 4, 8}, {1, 4, 16, 64}), 2.0, 1e-12);
  EXPECT_EQ(loglog_slope({1}, {1}), 0.0);
}

TEST(Bench, SmallDoubling) {
  const BenchReport report = bench_doubling({64, 128}, 1);
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_GE(report.rows[1].work, report.rows[0].work);
  for (const BenchRow& row : report.rows) {
    EXPECT_LE(row.span, row.work);
    EXPECT_LE(row.oracle_calls, row.call_bound);
    EXPECT_LE(row.oracle_work, row.work_bound);
    EXPECT_TRUE(row.valid);
    EXPECT_EQ(row.m, 4 * row.n);
  }
  EXPECT_TRUE(report.bounds_ok);
  EXPECT_EQ(format_bench_csv(report, false), format_bench_csv(bench_doubling({64, 128}, 1), false));
  EXPECT_NE(format_bench_csv(report).find(",wall_time\n"), std::string::npos);
  EXPECT_THROW(bench_doubling({128, 64}, 1), std::invalid_argument);
}
