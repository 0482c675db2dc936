#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cyclestab/graph.hpp"

namespace cyclestab::turan {

/// floor(k n / 2). Throws InvalidParameters unless n >= 2k + 2 and k >= 1.
std::int64_t turan_bound(Vertex n, Vertex k);

struct ForbiddenReport {
  bool has_star = false;  ///< S_{k+2} = K_{1,k+1}, i.e. max degree >= k + 1
  /// P_{2k+1}; nullopt when a component above the oracle cap could not be settled.
  std::optional<bool> has_path;
};

ForbiddenReport check_forbidden(const Graph& g, Vertex k);

/// {S_{k+2}, P_{2k+1}}-free graph with floor(kn/2) edges built from
/// near-regular circulants on parts of order in [k+1, 2k].
Graph build_turan_extremal(Vertex n, Vertex k);

struct VerifyOptions {
  /// Refuse when C(C(n,2), bound + 1) exceeds this.
  double subset_budget = 1e11;
  /// Node cap for the exhaustive census of graphs with max degree <= k.
  std::uint64_t census_budget = 60'000'000;
  std::uint64_t samples = 2000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct TuranReport {
  Vertex n = 0, k = 0;
  std::int64_t bound = 0;
  std::int64_t extremal_edges = 0;
  bool extremal_forbidden_free = false;
  /// Pruned search for a forbidden-free graph with bound + 1 edges; the
  /// handshake bound closes every branch.
  std::uint64_t search_nodes = 0;
  std::uint64_t search_counterexamples = 0;
  /// Seeded random graphs with bound + 1 edges, all expected to contain S or P.
  std::uint64_t samples = 0;
  std::uint64_t sample_violations = 0;
  /// Census over all labeled graphs with max degree <= k.
  bool census_complete = false;
  std::uint64_t census_graphs = 0;
  std::int64_t census_max_free_edges = -1;
  std::uint64_t census_extremal_graphs = 0;
  bool pass = false;

  std::string to_json() const;
};

/// Throws Error when the subset budget is exceeded.
TuranReport verify_turan(Vertex n, Vertex k, const VerifyOptions& opts = {});

/// True when every component has at most 2k vertices. Requires G to be
/// {S_{k+2}, P_{2k+1}}-free with floor(kn/2) edges and n >= 2k + 2.
bool components_bound_check(const Graph& g, Vertex k);

}  // namespace cyclestab::turan
