#pragma once

#include <optional>

#include "cyclestab/decide.hpp"
#include "cyclestab/families.hpp"
#include "cyclestab/graph.hpp"

namespace cyclestab {

/// K_1 + G with the apex as vertex n.
Graph apex(const Graph& g);

/// Threshold min{n, 2k + 3} vertices. Requires G connected, k >= 1 and all
/// but at most one vertex of degree >= k. For n = 2k + 2 graphs above the
/// oracle cap that none of the certificate routes settle, throws CapExceeded.
Decision decide_path(const Graph& g, Vertex k, const DecideOptions& opts = {});

/// Embedding into H{2k+2,2k+1,k} (n = 2k + 2), H{n,2k+2,k} (n >= 2k + 3),
/// K1TK, JC, K1M / K1SM (k = 2) or the k = 3 matching family. None for
/// n <= 2k + 1. Same preconditions as decide_path.
std::optional<Embedding> recognize_path_family(const Graph& g, Vertex k);

}  // namespace cyclestab
