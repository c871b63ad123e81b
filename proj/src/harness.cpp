#include "negsssp/harness.hpp"

#include <chrono>
#include <charconv>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "negsssp/baselines.hpp"
#include "negsssp/restricted.hpp"
#include "negsssp/rng.hpp"

namespace negsssp {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line, const char* what) {
  T value{};
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size()) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(field) + "'", line);
  }
  return value;
}

Vertex parse_vertex(std::string_view field, std::size_t n, std::size_t line) {
  const auto id = parse_number<std::uint64_t>(field, line, "vertex");
  if (id < 1 || id > n) throw ParseError("vertex " + std::string(field) + " out of range 1.." + std::to_string(n), line);
  return static_cast<Vertex>(id - 1);
}

Graph gen_restricted(const GenSpec& spec, CounterRng& rng) {
  const auto n = static_cast<Weight>(spec.n);
  const Weight base_hi = std::max<Weight>(1, n / 2);
  std::vector<Weight> pi(spec.n);
  for (auto& p : pi) p = rng.uniform_int(0, n / 4);
  std::vector<Edge> edges(spec.m);
  for (auto& e : edges) {
    e.from = static_cast<Vertex>(rng.uniform_int(0, n - 1));
    e.to = static_cast<Vertex>(rng.uniform_int(0, n - 1));
    const Weight w0 = rng.uniform_int(1, base_hi);
    e.weight = std::min(n, std::max<Weight>(-1, w0 + pi[e.from] - pi[e.to]));
  }
  Graph g = build_graph(spec.n, std::move(edges));
  if (spec.n <= 1024) {
    const RestrictedVerdict verdict = validate_restricted(g);
    if (!verdict.ok) throw std::logic_error("gen_graph: restricted generator produced " + verdict.reason);
  }
  return g;
}

Graph gen_general(const GenSpec& spec, CounterRng& rng) {
  const auto n = static_cast<Weight>(spec.n);
  const Weight spread = spec.lo < 0 ? std::min(-spec.lo, spec.hi / 2) : 0;
  std::vector<Weight> pi(spec.n);
  for (auto& p : pi) p = rng.uniform_int(0, std::max<Weight>(0, spread));

  std::vector<Edge> edges;
  if (spec.plant_negative_cycle) {
    if (spec.lo >= 0) throw std::invalid_argument("gen_graph: planting a negative cycle needs lo < 0");
    const auto length = static_cast<std::size_t>(rng.uniform_int(1, std::min<Weight>(n, 8)));
    // Distinct vertices by partial Fisher-Yates.
    std::vector<Vertex> order(spec.n);
    for (Vertex v = 0; v < spec.n; ++v) order[v] = v;
    for (std::size_t i = 0; i < length; ++i) {
      std::swap(order[i], order[static_cast<std::size_t>(rng.uniform_int(static_cast<Weight>(i), n - 1))]);
    }
    Weight total = 0;
    for (std::size_t i = 0; i < length; ++i) {
      const Weight w = rng.uniform_int(spec.lo, 0);
      edges.push_back({order[i], order[(i + 1) % length], w});
      total += w;
    }
    if (total >= 0) edges.front().weight = spec.lo;
  }
  while (edges.size() < spec.m) {
    Edge e;
    e.from = static_cast<Vertex>(rng.uniform_int(0, n - 1));
    e.to = static_cast<Vertex>(rng.uniform_int(0, n - 1));
    e.weight = rng.uniform_int(0, spec.hi - spread) + pi[e.from] - pi[e.to];
    edges.push_back(e);
  }
  // Keep the planted cycle from always sitting at the front of the edge list.
  for (std::size_t i = edges.size(); i > 1; --i) {
    std::swap(edges[i - 1], edges[static_cast<std::size_t>(rng.uniform_int(0, static_cast<Weight>(i - 1)))]);
  }
  return build_graph(spec.n, std::move(edges));
}

Graph gen_nonneg(const GenSpec& spec, CounterRng& rng) {
  const auto n = static_cast<Weight>(spec.n);
  std::vector<Edge> edges(spec.m);
  for (auto& e : edges) {
    e.from = static_cast<Vertex>(rng.uniform_int(0, n - 1));
    e.to = static_cast<Vertex>(rng.uniform_int(0, n - 1));
    e.weight = rng.uniform_int(0, std::max<Weight>(0, spec.hi));
  }
  return build_graph(spec.n, std::move(edges));
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
  std::optional<std::size_t> n, m;
  std::optional<Vertex> source;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t cut = text.find('\n');
    const std::string_view line = text.substr(0, cut);
    text = cut == std::string_view::npos ? std::string_view{} : text.substr(cut + 1);
    ++line_no;

    const auto fields = split_fields(line);
    if (fields.empty() || fields[0] == "c") continue;
    if (fields[0] == "p") {
      if (n) throw ParseError("duplicate problem line", line_no);
      if (fields.size() != 4 || fields[1] != "sp") throw ParseError("expected 'p sp <n> <m>'", line_no);
      n = parse_number<std::size_t>(fields[2], line_no, "vertex count");
      m = parse_number<std::size_t>(fields[3], line_no, "edge count");
      if (*n == 0) throw ParseError("vertex count must be positive", line_no);
      if (*n > std::numeric_limits<Vertex>::max()) throw ParseError("vertex count too large", line_no);
      edges.reserve(std::min<std::size_t>(*m, 1 << 24));
      continue;
    }
    if (!n) throw ParseError("'" + std::string(fields[0]) + "' line before problem line", line_no);
    if (fields[0] == "a") {
      if (fields.size() != 4) throw ParseError("expected 'a <u> <v> <w>'", line_no);
      Edge e;
      e.from = parse_vertex(fields[1], *n, line_no);
      e.to = parse_vertex(fields[2], *n, line_no);
      e.weight = parse_number<Weight>(fields[3], line_no, "weight");
      if (e.weight > kMaxInputWeight || e.weight < -kMaxInputWeight) {
        throw ParseError("weight exceeds 2^40 in magnitude", line_no);
      }
      edges.push_back(e);
    } else if (fields[0] == "s") {
      if (fields.size() != 2) throw ParseError("expected 's <source>'", line_no);
      if (source) throw ParseError("duplicate source line", line_no);
      source = parse_vertex(fields[1], *n, line_no);
    } else {
      throw ParseError("unknown line type '" + std::string(fields[0]) + "'", line_no);
    }
  }
  if (!n) throw ParseError("missing problem line", line_no);
  if (edges.size() != *m) {
    throw ParseError("header declares " + std::to_string(*m) + " arcs, found " + std::to_string(edges.size()), line_no);
  }
  return {build_graph(*n, std::move(edges)), source};
}

std::string write_graph(const Graph& g, std::optional<Vertex> source) {
  std::ostringstream out;
  out << "p sp " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  if (source) out << "s " << *source + 1 << '\n';
  for (const Edge& e : g.edges()) out << "a " << e.from + 1 << ' ' << e.to + 1 << ' ' << e.weight << '\n';
  return out.str();
}

Graph gen_graph(const GenSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("gen_graph: n must be >= 1");
  if (spec.kind != GenKind::kGeneral && spec.plant_negative_cycle) {
    throw std::invalid_argument("gen_graph: only the general kind can plant a negative cycle");
  }
  if (spec.lo > spec.hi) throw std::invalid_argument("gen_graph: lo > hi");
  CounterRng rng(split_seed(spec.seed, "gen", {static_cast<std::uint64_t>(spec.kind), spec.n, spec.m}));
  switch (spec.kind) {
    case GenKind::kRestricted: return gen_restricted(spec, rng);
    case GenKind::kGeneral: return gen_general(spec, rng);
    case GenKind::kNonneg: return gen_nonneg(spec, rng);
  }
  throw std::invalid_argument("gen_graph: unknown kind");
}

std::optional<GenKind> parse_gen_kind(std::string_view name) {
  if (name == "restricted") return GenKind::kRestricted;
  if (name == "general") return GenKind::kGeneral;
  if (name == "nonneg") return GenKind::kNonneg;
  return std::nullopt;
}

std::string format_result_text(const SsspResult& result) {
  std::ostringstream out;
  if (const auto* cycle = std::get_if<NegativeCycle>(&result.outcome)) {
    out << "cycle";
    for (Vertex v : cycle->vertices) out << ' ' << v + 1;
    out << '\n';
    return out.str();
  }
  const auto& tree = std::get<TreeResult>(result.outcome);
  for (Vertex v = 0; v < tree.dist.size(); ++v) {
    out << "d " << v + 1 << ' ';
    if (is_finite(tree.dist[v])) out << tree.dist[v];
    else out << "inf";
    out << '\n';
  }
  for (Vertex v = 0; v < tree.parent.size(); ++v) {
    if (tree.parent[v]) out << "t " << v + 1 << ' ' << tree.parent[v]->parent + 1 << '\n';
  }
  return out.str();
}

std::string format_result_json(const SsspResult& result, std::uint64_t seed) {
  // ordered_json keeps keys in a vector; references into it do not survive
  // later insertions, so arrays are built first.
  nlohmann::ordered_json j;
  if (const auto* cycle = std::get_if<NegativeCycle>(&result.outcome)) {
    nlohmann::ordered_json c = nlohmann::ordered_json::array();
    for (Vertex v : cycle->vertices) c.push_back(v + 1);
    j["dist"] = nullptr;
    j["parent"] = nullptr;
    j["cycle"] = std::move(c);
  } else {
    const auto& tree = std::get<TreeResult>(result.outcome);
    nlohmann::ordered_json dist = nlohmann::ordered_json::array();
    nlohmann::ordered_json parent = nlohmann::ordered_json::array();
    for (Vertex v = 0; v < tree.dist.size(); ++v) {
      if (is_finite(tree.dist[v])) dist.push_back(tree.dist[v]);
      else dist.push_back(nullptr);
      if (tree.parent[v]) parent.push_back(tree.parent[v]->parent + 1);
      else parent.push_back(nullptr);
    }
    j["dist"] = std::move(dist);
    j["parent"] = std::move(parent);
    j["cycle"] = nullptr;
  }
  j["work"] = result.stats.counter.work();
  j["span"] = result.stats.counter.span();
  j["oracle_calls"] = result.stats.counter.oracle_calls();
  j["seed"] = seed;
  return j.dump() + "\n";
}

std::string format_clustering(const Graph& g, const Clustering& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    out << "part " << i + 1 << ':';
    for (Vertex v : c.parts[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (EdgeId id : c.cut_edges) out << "cut " << g.edge(id).from + 1 << ' ' << g.edge(id).to + 1 << '\n';
  return out.str();
}

std::uint64_t work_bound(const RestrictedParams& p, std::size_t n, std::size_t m) {
  return static_cast<std::uint64_t>(p.levels) * p.repetitions * p.repetitions * (p.budget + 1) * (n + m + 1) *
         kWorkBoundFactor;
}

std::uint64_t oracle_call_bound(const RestrictedParams& p, std::size_t max_clusters) {
  const std::uint64_t rounds = static_cast<std::uint64_t>(p.levels) * p.repetitions;
  return rounds * (p.repetitions + 1) * max_clusters + rounds;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return 0;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxx == 0 ? 0 : sxy / sxx;
}

BenchReport bench_doubling(const std::vector<std::size_t>& sizes, std::size_t seeds, std::uint64_t base_seed) {
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] < sizes[i - 1]) throw std::invalid_argument("bench_doubling: sizes must be ascending");
  }
  BenchReport report;
  std::vector<double> ms, works, oracle_works;
  for (std::size_t n : sizes) {
    for (std::size_t s = 0; s < seeds; ++s) {
      BenchRow row;
      row.n = n;
      row.m = 4 * n;
      row.seed = base_seed + s;
      GenSpec spec;
      spec.kind = GenKind::kRestricted;
      spec.n = n;
      spec.m = row.m;
      spec.seed = row.seed;
      const Graph g = gen_graph(spec);

      RestrictedOptions options;
      options.check_input = false;
      const auto start = std::chrono::steady_clock::now();
      const RestrictedRun run = restricted_sssp(g, row.seed, options);
      row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

      row.work = run.counter.work();
      for (const LoggedCall& entry : run.counter.log()) {
        if (entry.call.kind != CallKind::kLdd) row.oracle_work += entry.call.work;
      }
      row.span = run.counter.span();
      row.oracle_calls = run.counter.oracle_calls();
      row.stages = run.counter.stages();
      row.work_bound = work_bound(run.params, n, row.m);
      row.call_bound = oracle_call_bound(run.params, run.max_clusters);
      row.valid = validate_potential(g, run.potential).empty();
      report.bounds_ok = report.bounds_ok && row.oracle_work <= row.work_bound && row.oracle_calls <= row.call_bound &&
                         row.span <= row.work;
      ms.push_back(static_cast<double>(row.m));
      works.push_back(static_cast<double>(std::max<std::uint64_t>(1, row.work)));
      oracle_works.push_back(static_cast<double>(std::max<std::uint64_t>(1, row.oracle_work)));
      report.rows.push_back(row);
    }
  }
  report.slope = loglog_slope(ms, oracle_works);
  report.total_slope = loglog_slope(ms, works);
  return report;
}

std::string format_bench_csv(const BenchReport& report, bool wall_time) {
  std::ostringstream out;
  out << "n,m,seed,work,oracle_work,span,oracle_calls,stages,work_bound,call_bound,valid";
  out << (wall_time ? ",wall_time\n" : "\n");
  for (const BenchRow& r : report.rows) {
    out << r.n << ',' << r.m << ',' << r.seed << ',' << r.work << ',' << r.oracle_work << ',' << r.span << ',' << r.oracle_calls << ','
        << r.stages << ',' << r.work_bound << ',' << r.call_bound << ',' << (r.valid ? 1 : 0);
    if (wall_time) out << ',' << r.wall_time;
    out << '\n';
  }
  return out.str();
}

}  // namespace negsssp
