#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "negsssp/graph.hpp"
#include "negsssp/instrument.hpp"
#include "negsssp/ldd.hpp"
#include "negsssp/nonneg_sssp.hpp"

namespace negsssp {

struct RestrictedParams {
  std::size_t levels = 1;       // L = ceil(log2(2 n^2))
  std::size_t repetitions = 1;  // R = (2 + c_whp) ceil(log2 n), at least 1
  std::size_t quality = 0;      // Q(n) = c_ldd ceil(log2 n)^2
  std::size_t budget = 2;       // t = 4 Q(n) + 1, at least 2
  std::size_t c_whp = 1;
  std::size_t c_ldd = 1;
};

/// Constant c in the asserted bound: total oracle problem size
/// <= L R^2 (t+1) (n+m+1) c. Each run checks it.
inline constexpr std::uint64_t kOracleSizeFactor = 12;

RestrictedParams compute_params(std::size_t n, std::size_t c_whp = 1, std::size_t c_ldd = 1);

/// Per-round view for instrumentation: clustering of G>=0 at d = 2^level,
/// the cluster potentials phi^(i) (indexed like clustering.parts) and the
/// combined phi_{level,rep}.
struct RoundTrace {
  std::size_t level = 0;
  std::size_t repetition = 0;
  const Clustering* clustering = nullptr;
  const std::vector<std::vector<Weight>>* cluster_potentials = nullptr;
  const Potential* combined = nullptr;
};

using RoundObserver = std::function<void(const RoundTrace&)>;

struct RestrictedOptions {
  std::size_t c_whp = 1;
  std::size_t c_ldd = 1;
  double c_geo = 4.0;
  bool check_input = true;  // validate_restricted before running
  std::size_t threads = 1;  // cluster tasks run concurrently when > 1
  RoundObserver observer;
  const NonnegativeOracle* oracle = nullptr;  // default_oracle() when null
};

struct RestrictedRun {
  Potential potential;
  RestrictedParams params;
  WorkSpanCounter counter;
  std::size_t rounds = 0;       // (level, repetition) pairs executed
  std::size_t max_clusters = 0; // largest k over all clusterings
  bool range_ok = true;         // every phi_{l,r} within [-n^2, n^2]
};

class RestrictedInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bottom-up computation of a potential that, with high probability, makes
/// every edge of a restricted graph nonnegative.
///
/// Level l clusters G>=0 with d = 2^l; inside each cluster the new
/// potential is the pointwise minimum of FewNegSSSP over the previous
/// level's potentials, and cluster i is shifted by -i*n. The top level runs
/// once and its decomposition cuts nothing.
///
/// Success is not guaranteed; callers check the result with
/// validate_potential. Throws RestrictedInputError when check_input is set
/// and the graph is not restricted.
RestrictedRun restricted_sssp(const Graph& g, std::uint64_t seed, const RestrictedOptions& options = {});

/// Edges with w_phi(e) < 0, in edge order.
std::vector<EdgeId> validate_potential(const Graph& g, const Potential& phi);

}  // namespace negsssp
