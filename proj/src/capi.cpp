#include "negsssp/negsssp.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "negsssp/baselines.hpp"
#include "negsssp/harness.hpp"
#include "negsssp/ldd.hpp"
#include "negsssp/pipeline.hpp"

struct nsp_graph {
  negsssp::Graph graph;
  std::optional<negsssp::Vertex> source;
};

struct nsp_result {
  negsssp::SsspResult result;
  std::uint64_t seed = 0;
};

namespace {

thread_local std::string last_error;

nsp_status fail(nsp_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Maps exceptions escaping `body` onto status codes.
template <typename Body>
nsp_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const negsssp::ParseError& e) {
    return fail(NSP_ERR_PARSE, e.what());
  } catch (const std::overflow_error& e) {
    return fail(NSP_ERR_OVERFLOW, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(NSP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(NSP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NSP_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const negsssp::TreeResult* tree_of(const nsp_result* r) {
  return r ? std::get_if<negsssp::TreeResult>(&r->result.outcome) : nullptr;
}

const negsssp::NegativeCycle* cycle_of(const nsp_result* r) {
  return r ? std::get_if<negsssp::NegativeCycle>(&r->result.outcome) : nullptr;
}

}  // namespace

extern "C" {

const char* nsp_last_error(void) { return last_error.c_str(); }

const char* nsp_status_string(nsp_status status) {
  switch (status) {
    case NSP_OK: return "ok";
    case NSP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NSP_ERR_PARSE: return "parse error";
    case NSP_ERR_IO: return "i/o error";
    case NSP_ERR_OVERFLOW: return "arithmetic overflow";
    case NSP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void nsp_string_free(char* s) { std::free(s); }

nsp_status nsp_graph_create(size_t n, size_t m, const uint32_t* from, const uint32_t* to, const int64_t* weight,
                            nsp_graph** out) {
  return guarded([&] {
    if (!out || (m > 0 && (!from || !to || !weight))) return fail(NSP_ERR_INVALID_ARGUMENT, "null argument");
    std::vector<negsssp::Edge> edges(m);
    for (size_t i = 0; i < m; ++i) edges[i] = {from[i], to[i], weight[i]};
    *out = new nsp_graph{negsssp::build_graph(n, std::move(edges)), std::nullopt};
    return NSP_OK;
  });
}

nsp_status nsp_graph_parse(const char* text, nsp_graph** out) {
  return guarded([&] {
    if (!text || !out) return fail(NSP_ERR_INVALID_ARGUMENT, "null argument");
    negsssp::ParsedGraph parsed = negsssp::parse_graph(text);
    *out = new nsp_graph{std::move(parsed.graph), parsed.source};
    return NSP_OK;
  });
}

nsp_status nsp_graph_read_file(const char* path, nsp_graph** out) {
  return guarded([&] {
    if (!path || !out) return fail(NSP_ERR_INVALID_ARGUMENT, "null argument");
    std::ifstream in(path, std::ios::binary);
    if (!in) return fail(NSP_ERR_IO, std::string("cannot open ") + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    negsssp::ParsedGraph parsed = negsssp::parse_graph(buffer.str());
    *out = new nsp_graph{std::move(parsed.graph), parsed.source};
    return NSP_OK;
  });
}

nsp_status nsp_graph_write_file(const nsp_graph* g, const char* path) {
  return guarded([&] {
    if (!g || !path) return fail(NSP_ERR_INVALID_ARGUMENT, "null argument");
    std::ofstream file(path, std::ios::binary);
    if (!file) return fail(NSP_ERR_IO, std::string("cannot write ") + path);
    file << negsssp::write_graph(g->graph, g->source);
    if (!file.flush()) return fail(NSP_ERR_IO, std::string("write failed for ") + path);
    return NSP_OK;
  });
}

nsp_status nsp_graph_to_text(const nsp_graph* g, char** out) {
  return guarded([&] {
    if (!g || !out) return fail(NSP_ERR_INVALID_ARGUMENT, "null argument");
    *out = copy_string(negsssp::write_graph(g->graph, g->source));
    return NSP_OK;
  });
}

nsp_status nsp_generate(const nsp_gen_spec* spec, nsp_graph** out) {
  return guarded([&] {
    if (!spec || !out) return fail(NSP_ERR_INVALID_ARGUMENT, "null argument");
    negsssp::GenSpec s;
    switch (spec->kind) {
      case NSP_GEN_RESTRICTED: s.kind = negsssp::GenKind::kRestricted; break;
      case NSP_GEN_GENERAL: s.kind = negsssp::GenKind::kGeneral; break;
      case NSP_GEN_NONNEG: s.kind = negsssp::GenKind::kNonneg; break;
      default: return fail(NSP_ERR_INVALID_ARGUMENT, "unknown generator kind");
    }
    s.n = spec->n;
    s.m = spec->m;
    s.lo = spec->lo;
    s.hi = spec->hi;
    s.seed = spec->seed;
    s.plant_negative_cycle = spec->plant_negative_cycle != 0;
    *out = new nsp_graph{negsssp::gen_graph(s), std::nullopt};
    return NSP_OK;
  });
}

size_t nsp_graph_num_vertices(const nsp_graph* g) { return g ? g->graph.num_vertices() : 0; }
size_t nsp_graph_num_edges(const nsp_graph* g) { return g ? g->graph.num_edges() : 0; }

int nsp_graph_source(const nsp_graph* g, uint32_t* source) {
  if (!g || !g->source) return 0;
  if (source) *source = *g->source;
  return 1;
}

void nsp_graph_free(nsp_graph* g) { delete g; }

nsp_status nsp_solve(const nsp_graph* g, uint32_t source, uint64_t seed, nsp_result** out) {
  return guarded([&] {
    if (!g || !out) return fail(NSP_ERR_INVALID_ARGUMENT, "null argument");
    *out = new nsp_result{negsssp::solve_sssp(g->graph, source, seed), seed};
    return NSP_OK;
  });
}

int nsp_result_has_cycle(const nsp_result* r) { return cycle_of(r) != nullptr; }

int nsp_result_distance(const nsp_result* r, uint32_t v, int64_t* dist) {
  const auto* tree = tree_of(r);
  if (!tree || v >= tree->dist.size() || !negsssp::is_finite(tree->dist[v])) return 0;
  if (dist) *dist = tree->dist[v];
  return 1;
}

int nsp_result_parent(const nsp_result* r, uint32_t v, uint32_t* parent) {
  const auto* tree = tree_of(r);
  if (!tree || v >= tree->parent.size() || !tree->parent[v]) return 0;
  if (parent) *parent = tree->parent[v]->parent;
  return 1;
}

size_t nsp_result_cycle_length(const nsp_result* r) {
  const auto* cycle = cycle_of(r);
  return cycle ? cycle->vertices.size() : 0;
}

void nsp_result_cycle_vertices(const nsp_result* r, uint32_t* out) {
  const auto* cycle = cycle_of(r);
  if (!cycle || !out) return;
  std::copy(cycle->vertices.begin(), cycle->vertices.end(), out);
}

uint64_t nsp_result_work(const nsp_result* r) { return r ? r->result.stats.counter.work() : 0; }
uint64_t nsp_result_span(const nsp_result* r) { return r ? r->result.stats.counter.span() : 0; }
uint64_t nsp_result_oracle_calls(const nsp_result* r) { return r ? r->result.stats.counter.oracle_calls() : 0; }

nsp_status nsp_result_to_text(const nsp_result* r, char** out) {
  return guarded([&] {
    if (!r || !out) return fail(NSP_ERR_INVALID_ARGUMENT, "null argument");
    *out = copy_string(negsssp::format_result_text(r->result));
    return NSP_OK;
  });
}

nsp_status nsp_result_to_json(const nsp_result* r, char** out) {
  return guarded([&] {
    if (!r || !out) return fail(NSP_ERR_INVALID_ARGUMENT, "null argument");
    *out = copy_string(negsssp::format_result_json(r->result, r->seed));
    return NSP_OK;
  });
}

void nsp_result_free(nsp_result* r) { delete r; }

nsp_status nsp_ldd(const nsp_graph* g, int64_t d, uint64_t seed, char** out) {
  return guarded([&] {
    if (!g || !out) return fail(NSP_ERR_INVALID_ARGUMENT, "null argument");
    negsssp::LddParams params;
    params.d = d;
    params.seed = seed;
    const negsssp::Clustering c = negsssp::dir_ldd(g->graph, params);
    *out = copy_string(negsssp::format_clustering(g->graph, c));
    return NSP_OK;
  });
}

nsp_status nsp_validate(const nsp_graph* g, int restricted, int* ok, char** report) {
  return guarded([&] {
    if (!g || !ok || !report) return fail(NSP_ERR_INVALID_ARGUMENT, "null argument");
    std::ostringstream line;
    line << "n=" << g->graph.num_vertices() << " m=" << g->graph.num_edges()
         << " min_w=" << g->graph.min_weight() << " max_w=" << g->graph.max_weight();
    *ok = 1;
    if (restricted) {
      const negsssp::RestrictedVerdict verdict = negsssp::validate_restricted(g->graph);
      *ok = verdict.ok ? 1 : 0;
      line << (verdict.ok ? " restricted" : " not restricted: " + verdict.reason);
    }
    *report = copy_string(line.str());
    return NSP_OK;
  });
}

nsp_status nsp_bench(const size_t* sizes, size_t count, size_t seeds, uint64_t base_seed, int wall_time, char** csv,
                     char** summary, int* bounds_ok) {
  return guarded([&] {
    if ((!sizes && count) || !csv || !summary || !bounds_ok) return fail(NSP_ERR_INVALID_ARGUMENT, "null argument");
    const negsssp::BenchReport report =
        negsssp::bench_doubling(std::vector<std::size_t>(sizes, sizes + count), seeds, base_seed);
    std::ostringstream text;
    bool valid = true;
    for (const auto& row : report.rows) valid = valid && row.valid;
    text << "rows=" << report.rows.size() << " oracle_slope=" << report.slope << " total_slope=" << report.total_slope
         << " bounds=" << (report.bounds_ok ? "ok" : "violated") << " potentials=" << (valid ? "valid" : "invalid");
    *csv = copy_string(negsssp::format_bench_csv(report, wall_time != 0));
    *summary = copy_string(text.str());
    *bounds_ok = report.bounds_ok && valid ? 1 : 0;
    return NSP_OK;
  });
}

}  // extern "C"
