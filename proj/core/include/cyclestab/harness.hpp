#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclestab/graph.hpp"

namespace cyclestab::harness {

// Enumeration -----------------------------------------------------------------

/// Exhaustive labeled enumeration stops here (2^28 edge sets at n = 8).
inline constexpr Vertex kMaxEnumerationOrder = 8;

struct GraphFilter {
  bool connected = false;
  bool biconnected = false;
  /// All but at most one vertex of degree >= k.
  std::optional<Vertex> degree_k;
  /// Vertices below this id are left out of the degree condition.
  Vertex degree_exempt = 0;
};

/// Calls `visit(key, g)` for every labeled graph on n vertices passing the
/// filter, in ascending edge-set order. `key` is the edge set as an integer:
/// bit p is the p-th pair (u, v), u < v, in lexicographic order. Only keys
/// with key % shards == shard are visited. Throws PreconditionError for
/// n > kMaxEnumerationOrder.
void for_each_graph(Vertex n, const GraphFilter& filter,
                    const std::function<void(std::uint64_t, const Graph&)>& visit,
                    unsigned shard = 0, unsigned shards = 1);

/// Materialized form of for_each_graph.
std::vector<Graph> enumerate_graphs(Vertex n, const GraphFilter& filter = {});

/// Labeled graphs whose degrees are non-increasing from vertex `sorted_from`
/// on: one representative per isomorphism class of (G, 0, ..., sorted_from-1)
/// with the first vertices fixed. Same key and shard conventions.
void for_each_sorted_graph(Vertex n, Vertex sorted_from, const GraphFilter& filter,
                           const std::function<void(std::uint64_t, const Graph&)>& visit,
                           unsigned shard = 0, unsigned shards = 1);

/// 2-connected graph with all but at most one degree >= k, grown as a random
/// ear decomposition plus degree repair. Deterministic per seed. Requires
/// n >= 2k + 1 and k >= 2; throws Error after bounded retries.
Graph random_graph_under_preconditions(Vertex n, Vertex k, std::uint64_t seed);

/// Removes up to `count` random edges while keeping 2-connectivity and the
/// degree condition for k.
Graph delete_random_edges(const Graph& g, Vertex k, Vertex count, std::uint64_t seed);

// Reports ----------------------------------------------------------------------

struct Violation {
  std::uint64_t key = 0;  ///< edge-set key or sample index
  Vertex k = 0;
  std::string graph;      ///< edge-list text, replayable via the CLI
  std::string detail;
  bool injected = false;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  std::string campaign;
  std::map<std::string, std::string> parameters;
  std::uint64_t instances_checked = 0;
  std::vector<Violation> violations;
  /// Informational findings that are not failures (e.g. T0 instances outside
  /// the path-family catalog).
  std::vector<Violation> notes;
  std::map<std::string, std::uint64_t> counters;
  double wall_time = 0.0;
  std::uint64_t seed = 0;

  bool pass() const { return violations.empty(); }
  std::string to_json(bool include_wall_time = true) const;
};

struct CampaignConfig {
  Vertex n_min = 3;
  Vertex n_max = 7;
  Vertex k_min = 2;
  /// 0 means no upper limit.
  Vertex k_max = 0;
  /// Every k in [k_min, second-min degree] instead of only the second-min degree.
  bool all_k = false;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  /// Seeded random instances added to (or replacing) the exhaustive sweep.
  std::uint64_t samples = 0;
  Vertex sample_n_min = 4;
  Vertex sample_n_max = 12;
  /// Skip the exhaustive sweep and run samples only.
  bool samples_only = false;
  /// Flip the decided verdict on instances whose key hashes to 0 mod this
  /// period; 0 disables. Used to self-test violation detection.
  std::uint64_t fault_period = 0;
  /// Edge-deleted subgraphs per family member (fastexact).
  std::uint64_t per_family = 1000;
};

/// decide_exact verdict == (oracle c >= 2k + 2) on 2-connected graphs with
/// n >= 2k + 2; T0 evidence must validate. Exhaustive for n <= 7, degree-sorted
/// representatives at n = 8.
VerificationReport check_theorem_1_6(const CampaignConfig& cfg);

/// For (G, u = 0, v = 1) with the longest u-v path on <= k + 1 vertices and
/// the degree hypothesis: G - {u, v} = lK_{k-1} (u K_1) and u, v see every
/// vertex except w. Uses k in [k_min, k_max].
VerificationReport check_lemma_2_3(const CampaignConfig& cfg);

/// decide_path verdict == (oracle longest path >= min{n, 2k + 3}) on connected
/// graphs with the degree condition; T0 instances outside the catalog
/// go to `notes`. Uses k in [k_min, k_max].
VerificationReport check_theorem_3_3(const CampaignConfig& cfg);

/// solve_min_circumference verdict == (oracle c >= min{2 delta + 2, n}).
VerificationReport check_min_circumference(const CampaignConfig& cfg);

/// decide_fast == decide_exact on family members, edge-deleted members and
/// random instances for k in [k_min, k_max] (default 5..6).
VerificationReport check_fast_exact(const CampaignConfig& cfg);

/// Oracle circumference of built hosts equals max_cycle_bound for H, F, F1
/// and FV, and stays within it for the sporadic hosts.
VerificationReport check_family_bounds(const CampaignConfig& cfg);

/// Every emitted certificate validates; `samples` seeded mutations are all
/// rejected.
VerificationReport check_witness_soundness(const CampaignConfig& cfg);

/// Rate at which find_long_cycle finds a witness when the oracle says
/// c >= 2k + 2. Counters: "eligible", "found" (parts per million in "rate_ppm").
VerificationReport check_find_long_cycle(const CampaignConfig& cfg);

/// Runs a campaign by name: theorem16, lemma23, theorem33, mincirc,
/// fastexact, families, witness, longcycle.
VerificationReport run_campaign(const std::string& name, const CampaignConfig& cfg);

struct LemmaConclusion {
  bool holds = false;
  Vertex ell = 0;
  bool has_single = false;
  std::string detail;
};

/// Structural conclusion of the lemma for the given u, v and k.
LemmaConclusion lemma_2_3_conclusion(const Graph& g, Vertex u, Vertex v, Vertex k);

/// Re-runs the disagreement behind a theorem16 / theorem33 / mincirc
/// violation; true when it is genuine.
bool replay_violation(const std::string& campaign, const Violation& v);

}  // namespace cyclestab::harness
