#include "cyclestab/graphs.hpp"

#include <algorithm>
#include <set>

#include "cyclestab/error.hpp"

namespace cyclestab::graphs {

Graph empty(Vertex n) { return Graph(n); }

Graph complete(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

Graph cycle(Vertex n) {
  if (n < 3) throw InvalidParameters("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph::from_edges(n, edges);
}

Graph path(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(Vertex a, Vertex b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.push_back({u, a + v});
  }
  return Graph::from_edges(a + b, edges);
}

Graph star(Vertex s) {
  if (s < 1) throw InvalidParameters("star needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < s; ++v) edges.push_back({0, v});
  return Graph::from_edges(s, edges);
}

Graph matching(Vertex t) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < t; v += 2) edges.push_back({v, v + 1});
  return Graph::from_edges(t, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph::from_edges(10, edges);
}

Graph circulant(Vertex n, std::span<const Vertex> offsets) {
  std::set<std::pair<Vertex, Vertex>> edges;
  for (Vertex d : offsets) {
    if (d <= 0 || d >= n) throw InvalidParameters("circulant offset out of range");
    for (Vertex v = 0; v < n; ++v) {
      const Vertex w = (v + d) % n;
      edges.insert(std::minmax(v, w));
    }
  }
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph::from_edges(n, list);
}

}  // namespace cyclestab::graphs
