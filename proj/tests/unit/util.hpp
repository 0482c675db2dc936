#pragma once

#include <vector>

#include "cyclestab/graph.hpp"

namespace cyclestab::testing {

inline Graph make(Vertex n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

}  // namespace cyclestab::testing
