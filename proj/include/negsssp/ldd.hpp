#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "negsssp/graph.hpp"
#include "negsssp/instrument.hpp"

namespace negsssp {

/// Ordered partition (S_1, ..., S_k). An edge (u, v) is cut when
/// part_index(u) > part_index(v).
struct Clustering {
  std::vector<std::vector<Vertex>> parts;
  std::vector<std::size_t> part_index;
  std::vector<EdgeId> cut_edges;  // ascending

  friend bool operator==(const Clustering&, const Clustering&) = default;
};

struct LddParams {
  Weight d = 1;
  std::uint64_t seed = 0;
  double c_geo = 4.0;
  std::optional<std::size_t> max_recursion;  // carving depth cap; default 100 * ceil(log2 n)
};

class LddError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class BallDirection { kOut, kIn };

std::size_t ceil_log2(std::uint64_t x);

/// Vertices within `radius` of `center` (center -> v for kOut, v -> center
/// for kIn). Weights must be nonnegative.
std::vector<Vertex> grow_ball(const Graph& g, Vertex center, Weight radius, BallDirection direction);

/// True iff dist_G(u, v) <= d for all ordered pairs in `vertices`, measured
/// in the full graph.
bool weak_diameter_check(const Graph& g, std::span<const Vertex> vertices, Weight d);

/// Topologically sorted directed low-diameter decomposition of a graph with
/// nonnegative weights.
///
/// Recursive ball carving: each strongly connected region is split by a ball
/// around its lowest-id vertex (random direction, geometric radius with rate
/// c_geo * ceil(log2 n) / d, capped at d/2); edges leaving an out-ball or
/// entering an in-ball are removed. A region stops splitting once it is a
/// singleton or provably has diameter <= d. The parts are the SCCs of what
/// remains, in topological order.
///
/// When d >= (n-1) * max_w + 1 nothing is cut and the parts are the SCCs.
/// Deterministic for fixed (g, params). Throws LddError if the recursion
/// exceeds params.max_recursion.
Clustering dir_ldd(const Graph& g, const LddParams& params, TaskLog* log = nullptr);

/// Recomputes cut_edges from part_index and checks the partition; throws
/// std::logic_error on inconsistency.
void check_clustering(const Graph& g, const Clustering& c);

}  // namespace negsssp
