#pragma once

#include "cyclestab/graph.hpp"

namespace cyclestab::graphs {

Graph empty(Vertex n);
Graph complete(Vertex n);
Graph cycle(Vertex n);
Graph path(Vertex n);
Graph complete_bipartite(Vertex a, Vertex b);

/// S_s = K_{1,s-1}, the star on s vertices (center is vertex 0).
Graph star(Vertex s);

/// M_t: floor(t/2) disjoint edges plus one isolated vertex when t is odd.
Graph matching(Vertex t);

Graph petersen();

/// Circulant graph on n vertices joining i and i +- d for each offset d.
Graph circulant(Vertex n, std::span<const Vertex> offsets);

}  // namespace cyclestab::graphs
