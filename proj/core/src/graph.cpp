#include "cyclestab/graph.hpp"

#include <algorithm>
#include <numeric>

#include "cyclestab/error.hpp"

namespace cyclestab {

Graph::Graph(Vertex n) : Graph(from_edges(n, {})) {}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  if (n < 0 || n > kMaxOrder) {
    throw Error("graph order " + std::to_string(n) + " outside [0, 2^24]");
  }
  Graph g;
  g.n_ = n;
  std::vector<std::size_t> deg(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error("edge #" + std::to_string(i) + " (" + std::to_string(e.u) + ", " +
                  std::to_string(e.v) + "): vertex id out of range");
    }
    if (e.u == e.v) {
      throw Error("edge #" + std::to_string(i) + ": self-loop at " + std::to_string(e.u));
    }
    ++deg[e.u + 1];
    ++deg[e.v + 1];
  }
  std::partial_sum(deg.begin(), deg.end(), deg.begin());
  g.offsets_ = deg;
  g.adj_.assign(2 * edges.size(), 0);
  std::vector<std::size_t> fill(deg.begin(), deg.end() - 1);
  for (const Edge& e : edges) {
    g.adj_[fill[e.u]++] = e.v;
    g.adj_[fill[e.v]++] = e.u;
  }
  for (Vertex v = 0; v < n; ++v) {
    auto first = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw Error("duplicate edge " + std::to_string(std::min(v, *dup)) + " " +
                  std::to_string(std::max(v, *dup)));
    }
  }
  if (n < kBitsetOrderLimit && n > 0) {
    g.words_ = (static_cast<std::size_t>(n) + 63) / 64;
    g.bits_.assign(g.words_ * static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.neighbors(v)) {
        g.bits_[g.words_ * v + (w >> 6)] |= std::uint64_t{1} << (w & 63);
      }
    }
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!bits_.empty()) {
    return (bits_[words_ * u + (v >> 6)] >> (v & 63)) & 1U;
  }
  auto nb = neighbors(degree(u) <= degree(v) ? u : v);
  return std::binary_search(nb.begin(), nb.end(), degree(u) <= degree(v) ? v : u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

DegreeProfile degree_profile(const Graph& g) {
  if (g.order() < 1) throw PreconditionError("degree profile of the empty graph");
  DegreeProfile p;
  p.degrees.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) p.degrees[v] = g.degree(v);
  auto lowest = std::min_element(p.degrees.begin(), p.degrees.end());
  p.min_degree = *lowest;
  if (g.order() > 1) {
    Vertex second = -1;
    for (auto it = p.degrees.begin(); it != p.degrees.end(); ++it) {
      if (it == lowest) continue;
      if (second < 0 || *it < second) second = *it;
    }
    p.second_min_degree = second;
  }
  return p;
}

BiconnectivityReport biconnectivity(const Graph& g) {
  const Vertex n = g.order();
  BiconnectivityReport report;
  std::vector<Vertex> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<Vertex> stack;
  Vertex time = 0;
  Vertex roots = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    ++roots;
    Vertex root_children = 0;
    disc[root] = low[root] = time++;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      auto nb = g.neighbors(v);
      if (next[v] < nb.size()) {
        const Vertex w = nb[next[v]++];
        if (disc[w] < 0) {
          parent[w] = v;
          disc[w] = low[w] = time++;
          stack.push_back(w);
          if (v == root) ++root_children;
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        const Vertex p = parent[v];
        if (p >= 0) {
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) is_cut[p] = 1;
        }
      }
    }
    if (root_children > 1) is_cut[root] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) report.articulation_points.push_back(v);
  }
  report.connected = n > 0 && roots == 1;
  report.biconnected = n >= 3 && report.connected && report.articulation_points.empty();
  return report;
}

bool is_biconnected(const Graph& g) { return biconnectivity(g).biconnected; }

std::vector<Vertex> component_labels(const Graph& g, Vertex* count) {
  const Vertex n = g.order();
  std::vector<Vertex> label(n, -1);
  std::vector<Vertex> queue;
  Vertex next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (label[w] < 0) {
          label[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

bool is_connected(const Graph& g) {
  Vertex count = 0;
  component_labels(g, &count);
  return count == 1;
}

Graph join(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const Vertex off = a.order();
  for (const Edge& e : b.edges()) edges.push_back({e.u + off, e.v + off});
  for (Vertex u = 0; u < a.order(); ++u) {
    for (Vertex v = 0; v < b.order(); ++v) edges.push_back({u, v + off});
  }
  return Graph::from_edges(a.order() + b.order(), edges);
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::vector<Edge> edges;
  Vertex off = 0;
  for (const Graph& part : parts) {
    for (const Edge& e : part.edges()) edges.push_back({e.u + off, e.v + off});
    off += part.order();
  }
  return Graph::from_edges(off, edges);
}

Graph copies(const Graph& g, int count) {
  std::vector<Graph> parts(static_cast<std::size_t>(std::max(count, 0)), g);
  return disjoint_union(parts);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(g.order(), edges);
}

InducedSubgraph induced(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.old_to_new.assign(g.order(), -1);
  for (Vertex v : vertices) {
    if (v < 0 || v >= g.order()) {
      throw Error("induced: vertex " + std::to_string(v) + " out of range");
    }
    out.old_to_new[v] = 0;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (out.old_to_new[v] >= 0) {
      out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (Vertex nu = 0; nu < static_cast<Vertex>(out.new_to_old.size()); ++nu) {
    for (Vertex w : g.neighbors(out.new_to_old[nu])) {
      const Vertex nw = out.old_to_new[w];
      if (nw > nu) edges.push_back({nu, nw});
    }
  }
  out.graph = Graph::from_edges(static_cast<Vertex>(out.new_to_old.size()), edges);
  return out;
}

Graph with_apex(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  for (Vertex v = 0; v < g.order(); ++v) edges.push_back({v, g.order()});
  return Graph::from_edges(g.order() + 1, edges);
}

Graph with_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges = g.edges();
  edges.push_back(e);
  return Graph::from_edges(g.order(), edges);
}

Graph without_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges = g.edges();
  const Edge key{std::min(e.u, e.v), std::max(e.u, e.v)};
  std::erase(edges, key);
  return Graph::from_edges(g.order(), edges);
}

}  // namespace cyclestab
