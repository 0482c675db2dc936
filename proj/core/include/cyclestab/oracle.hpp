#pragma once

#include <optional>
#include <vector>

#include "cyclestab/graph.hpp"
#include "cyclestab/witness.hpp"

namespace cyclestab::oracle {

inline constexpr Vertex kDefaultCap = 20;
/// Vertex sets are single 64-bit words.
inline constexpr Vertex kHardLimit = 64;

struct Options {
  Vertex cap = kDefaultCap;
};

struct CycleResult {
  Vertex length = 0;                   ///< c(G); 0 when acyclic
  std::optional<CycleWitness> witness;  ///< present when length >= 3
};

struct PathResult {
  Vertex order = 0;  ///< vertex count; 0 only for the empty graph or no u-v path
  std::vector<Vertex> path;
};

/// All functions throw CapExceeded when n > min(cap, 64).
CycleResult circumference(const Graph& g, const Options& opts = {});

/// Early exit on the first cycle of length >= L. Requires L >= 3.
std::optional<CycleWitness> has_cycle_at_least(const Graph& g, Vertex L, const Options& opts = {});

PathResult longest_path_order(const Graph& g, const Options& opts = {});

/// Early exit on the first path on >= L vertices.
std::optional<std::vector<Vertex>> has_path_at_least(const Graph& g, Vertex L,
                                                     const Options& opts = {});

/// Longest u-v path; order 0 when u and v are disconnected. Throws
/// PreconditionError for u == v or ids out of range.
PathResult longest_uv_path_order(const Graph& g, Vertex u, Vertex v, const Options& opts = {});

}  // namespace cyclestab::oracle
