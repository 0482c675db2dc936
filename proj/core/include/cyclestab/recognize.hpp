#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cyclestab/families.hpp"
#include "cyclestab/graph.hpp"

namespace cyclestab {

struct PreconditionReport {
  Vertex n = 0;
  std::size_t m = 0;
  Vertex k = 0;
  bool connected = false;
  bool biconnected = false;
  /// Largest k with all but at most one vertex of degree >= k (second-minimum
  /// degree); 0 for the empty graph, the single degree for n == 1.
  Vertex k_max = 0;
  /// The unique vertex of degree < k, when there is exactly one.
  std::optional<Vertex> exceptional_vertex;

  bool degree_condition() const { return k <= k_max; }
};

/// Never throws; callers decide whether the report is acceptable.
PreconditionReport check_preconditions(const Graph& g, Vertex k);

/// Throws PreconditionError naming the first failed hypothesis among:
/// 2-connected, k >= k_min, degree condition, n >= n_min.
void require_cycle_domain(const PreconditionReport& r, Vertex k_min, Vertex n_min);

/// Vertices of degree exactly k in increasing id order, at most `limit` of them.
std::vector<Vertex> degree_seeds(const Graph& g, Vertex k, std::size_t limit = SIZE_MAX);

struct RecognizeOptions {
  /// Cap on degree-k seed vertices; every seed is tried when absent.
  std::optional<std::size_t> seed_limit;
};

/// First embedding of `g` into the cycle catalog valid for (n, k), in the
/// order H, F1, F, then the k = 3 / k = 4 sporadics. Requires g 2-connected,
/// the degree condition for k, k >= 2 and n >= 2k + 1.
std::optional<Embedding> recognize(const Graph& g, Vertex k, const RecognizeOptions& opts = {},
                                   std::uint64_t* work = nullptr);

/// K̄_k + K̄_s ⊆ G ⊆ K_k + K̄_s with s >= k + 1.
struct OreWitness {
  std::vector<Vertex> dominating;   ///< D, |D| = k
  std::vector<Vertex> independent;  ///< I, |I| = s
};

/// Requires g 2-connected with minimum degree >= k >= 1.
std::optional<OreWitness> recognize_ore(const Graph& g, Vertex k);

// Individual matchers. Each returns an embedding that check_embedding accepts
// or nothing; `work` (nullable) accumulates elementary steps.
namespace match {

/// G ⊆ H(n, ell, |A|) with A as given.
std::optional<Embedding> h_family(const Graph& g, std::span<const Vertex> a, Vertex ell,
                                  std::uint64_t* work = nullptr);
/// G ⊆ F1(t, k) with apexes {u, v}.
std::optional<Embedding> f1_pair(const Graph& g, Vertex u, Vertex v, Vertex k,
                                 std::uint64_t* work = nullptr);
/// G ⊆ F(s, t, k) with x = a and z = c; y is located.
std::optional<Embedding> f_pair(const Graph& g, Vertex a, Vertex c, Vertex k,
                                std::uint64_t* work = nullptr);
std::optional<Embedding> k2m_pair(const Graph& g, Vertex u, Vertex v);
std::optional<Embedding> k2sm_pair(const Graph& g, Vertex u, Vertex v);
std::optional<Embedding> k3m_triple(const Graph& g, Vertex u, Vertex v, Vertex w);

/// Path families.
std::optional<Embedding> k1tk_center(const Graph& g, Vertex c, Vertex k);
std::optional<Embedding> jc_center(const Graph& g, Vertex c, Vertex k);
std::optional<Embedding> k1m_center(const Graph& g, Vertex c);
std::optional<Embedding> k1sm_center(const Graph& g, Vertex c);
std::optional<Embedding> k2m_path_pair(const Graph& g, Vertex u, Vertex v);

}  // namespace match

}  // namespace cyclestab
