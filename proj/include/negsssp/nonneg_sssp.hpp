#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "negsssp/graph.hpp"
#include "negsssp/instrument.hpp"

namespace negsssp {

/// A virtual super-source with an edge of weight `offset` to `vertex`.
struct SourceOffset {
  Vertex vertex = 0;
  Weight offset = 0;
};

struct ParentLink {
  Vertex parent = 0;
  EdgeId edge = 0;
};

struct ShortestPathForest {
  DistLabels dist;
  std::vector<std::optional<ParentLink>> parent;
  std::uint64_t work = 0;  // pops + relaxations
};

struct TreeResult {
  DistLabels dist;
  std::vector<std::optional<ParentLink>> parent;
  Vertex root = 0;
};

class NegativeWeightError : public std::invalid_argument {
 public:
  NegativeWeightError(const std::string& what, EdgeId edge)
      : std::invalid_argument(what), edge_(edge) {}
  EdgeId edge() const { return edge_; }

 private:
  EdgeId edge_;
};

/// Nonnegative-weight multi-source SSSP. Implementations must return exact
/// distances min over sources (u, off) of off + dist(u, v), tight parent
/// edges, and report their work; anything satisfying that may be plugged in.
class NonnegativeOracle {
 public:
  virtual ~NonnegativeOracle() = default;
  virtual ShortestPathForest solve(const Graph& g, std::span<const SourceOffset> sources) const = 0;
};

/// Binary-heap Dijkstra; equal keys pop the smaller vertex id first.
class DijkstraOracle final : public NonnegativeOracle {
 public:
  ShortestPathForest solve(const Graph& g, std::span<const SourceOffset> sources) const override;
};

const NonnegativeOracle& default_oracle();

/// Runs `oracle` and records one call of `kind` into `log` when given.
/// Throws NegativeWeightError on a negative edge or negative offset.
ShortestPathForest dijkstra_multi(const Graph& g, std::span<const SourceOffset> sources,
                                  TaskLog* log = nullptr,
                                  const NonnegativeOracle& oracle = default_oracle(),
                                  CallKind kind = CallKind::kDijkstra);

/// Shortest-path tree from s under the original weights, computed on G_phi.
/// Requires w_phi >= 0 on every edge (NegativeWeightError otherwise).
TreeResult build_tree(const Graph& g, const Potential& phi, Vertex s, TaskLog* log = nullptr,
                      const NonnegativeOracle& oracle = default_oracle());

}  // namespace negsssp
