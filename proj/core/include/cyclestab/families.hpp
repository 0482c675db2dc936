#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyclestab/graph.hpp"

namespace cyclestab {

/// H(n, ell, a): |A| = a, |B| = n - ell + a, |C| = ell - 2a. A u C is a clique,
/// A-B is complete, B is independent and there are no B-C edges.
struct HFamily {
  Vertex n = 0, ell = 0, a = 0;
  friend bool operator==(const HFamily&, const HFamily&) = default;
};

/// Apex triangle x, y, z; s-side sK_{k-1} u K_1 attached to x and z;
/// t-side tK_{k-1} attached to y and z.
struct FFamily {
  Vertex s = 0, t = 0, k = 0;
  friend bool operator==(const FFamily&, const FFamily&) = default;
};

/// K_2 + (tK_{k-1} u K_k u K_1).
struct F1Family {
  Vertex t = 0, k = 0;
  friend bool operator==(const F1Family&, const F1Family&) = default;
};

/// K_2 + (tK_{k-1} u K_k).
struct FVFamily {
  Vertex t = 0, k = 0;
  friend bool operator==(const FVFamily&, const FVFamily&) = default;
};

/// K_2 + M_t (k = 3).
struct K2Matching {
  Vertex t = 0;
  friend bool operator==(const K2Matching&, const K2Matching&) = default;
};

/// K_2 + (S_s u M_t) (k = 3).
struct K2StarMatching {
  Vertex s = 0, t = 0;
  friend bool operator==(const K2StarMatching&, const K2StarMatching&) = default;
};

/// K_3 + M_t (k = 4).
struct K3Matching {
  Vertex t = 0;
  friend bool operator==(const K3Matching&, const K3Matching&) = default;
};

/// Path family K_1 + (tK_k u K_{k+1} u K_1).
struct K1Cliques {
  Vertex t = 0, k = 0;
  friend bool operator==(const K1Cliques&, const K1Cliques&) = default;
};

/// Path family: the centers of K_1 + sK_k and K_1 + (tK_k u K_1) joined by an edge.
struct JoinedCenters {
  Vertex s = 0, t = 0, k = 0;
  friend bool operator==(const JoinedCenters&, const JoinedCenters&) = default;
};

/// Path family K_1 + M_t (k = 2).
struct K1Matching {
  Vertex t = 0;
  friend bool operator==(const K1Matching&, const K1Matching&) = default;
};

/// Path family K_1 + (S_s u M_t) (k = 2).
struct K1StarMatching {
  Vertex s = 0, t = 0;
  friend bool operator==(const K1StarMatching&, const K1StarMatching&) = default;
};

using FamilySpec = std::variant<HFamily, FFamily, F1Family, FVFamily, K2Matching,
                                K2StarMatching, K3Matching, K1Cliques, JoinedCenters,
                                K1Matching, K1StarMatching>;

/// Short tag used in JSON and on the command line: H, F, F1, FV, K2M, K2SM,
/// K3M, K1TK, JC, K1M, K1SM.
std::string family_name(const FamilySpec& spec);

/// Human-readable form, e.g. `H{8,8,3}`.
std::string describe(const FamilySpec& spec);

/// Throws InvalidParameters naming the failed invariant.
void validate(const FamilySpec& spec);

/// Number of vertices of the host graph.
Vertex host_order(const FamilySpec& spec);

bool is_path_family(const FamilySpec& spec);

// Roles --------------------------------------------------------------------

enum class RoleKind : std::uint8_t {
  A, B, C,                 // H
  ApexX, ApexY, ApexZ,     // F
  S, SSingle, T,           // F sides (S/T carry clique j and index i)
  ApexU, ApexV,            // F1, FV
  Cl, Big, Single,         // F1, FV, K1TK, JC single
  Apex,                    // numbered apex (sporadics and path families)
  M, StarCenter, StarLeaf,
};

struct Role {
  RoleKind kind = RoleKind::A;
  Vertex j = 0;
  Vertex i = 0;

  friend bool operator==(const Role&, const Role&) = default;
  friend auto operator<=>(const Role&, const Role&) = default;
};

std::string format_role(const Role& role);

/// Throws ParseError on text outside the role grammar.
Role parse_role(std::string_view text);

/// Whether `role` names a slot of the host built from `spec`.
bool role_in_host(const FamilySpec& spec, const Role& role);

/// Adjacency between two distinct well-formed slots of the host.
bool host_adjacent(const FamilySpec& spec, const Role& r1, const Role& r2);

struct LabeledGraph {
  Graph graph;
  std::vector<Role> roles;  ///< role of every vertex, in canonical order
};

/// Builds the host graph. Vertex numbering follows the role order: for H the A
/// roles, then B, then C; for F the apexes x y z, s-cliques, s/single,
/// t-cliques; for F1/FV apexes u v, cl cliques, big, single; sporadic and path
/// families list apexes first, then star (center, leaves), then matching or
/// cliques.
LabeledGraph build_family(const FamilySpec& spec);

/// e(H(n, ell, a)) = C(ell - a, 2) + a (n - ell + a). Throws for non-H specs.
std::int64_t family_edge_count(const FamilySpec& spec);

/// Proven upper bound on the circumference of the host. H: ell - 1; F, F1, FV:
/// 2k + 1; K2M, K2SM: 7; K3M: 9. For path families this is the bound on the
/// number of vertices of a longest path (see max_path_order_bound). `k` must
/// agree with the spec when the spec fixes it.
Vertex max_cycle_bound(const FamilySpec& spec, Vertex k);

/// Upper bound on the vertex count of a longest path in the host.
Vertex max_path_order_bound(const FamilySpec& spec);

// Embeddings ----------------------------------------------------------------

struct Embedding {
  FamilySpec spec;
  std::vector<Role> roles;  ///< roles[v] is the slot of vertex v
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

struct EmbeddingCheck {
  bool ok = false;
  std::string diagnostic;  ///< first failure, empty when ok
  explicit operator bool() const { return ok; }
};

/// Validates spec, role well-formedness, injectivity and that every edge of
/// `g` lands on a host edge. Uses only `host_adjacent` and `role_in_host`.
EmbeddingCheck check_embedding(const Graph& g, const Embedding& emb);

}  // namespace cyclestab
