#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "cyclestab/error.hpp"
#include "cyclestab/harness.hpp"
#include "cyclestab/recognize.hpp"

namespace cyclestab::harness {
namespace {

using Mask = std::uint32_t;
using Rows = std::array<Mask, kMaxEnumerationOrder>;

Mask reach(const Rows& adj, int from, Mask allowed) {
  Mask seen = Mask{1} << from, frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & allowed & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool connected(const Rows& adj, Mask allowed) {
  if (!allowed) return true;
  return reach(adj, std::countr_zero(allowed), allowed) == allowed;
}

bool passes(const Rows& adj, int n, const GraphFilter& f) {
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  if (f.degree_k) {
    int low = 0;
    for (int v = f.degree_exempt; v < n; ++v) low += std::popcount(adj[v]) < *f.degree_k;
    if (low > 1) return false;
  }
  if (f.biconnected) {
    if (n < 3) return false;
    for (int v = 0; v < n; ++v) {
      if (std::popcount(adj[v]) < 2) return false;
    }
    if (!connected(adj, all)) return false;
    for (int v = 0; v < n; ++v) {
      if (!connected(adj, all & ~(Mask{1} << v))) return false;
    }
    return true;
  }
  if (f.connected) return n > 0 && connected(adj, all);
  return true;
}

Graph to_graph(const Rows& adj, int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (Mask m = adj[u] & ~((Mask{2} << u) - 1); m; m &= m - 1) {
      edges.push_back({u, static_cast<Vertex>(std::countr_zero(m))});
    }
  }
  return Graph::from_edges(n, edges);
}

int pair_index(int n, int u, int v) { return u * (2 * n - u - 1) / 2 + (v - u - 1); }

void check_order(Vertex n) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw PreconditionError("exhaustive enumeration supports 0 <= n <= " +
                            std::to_string(kMaxEnumerationOrder));
  }
}

}  // namespace

void for_each_graph(Vertex n, const GraphFilter& filter,
                    const std::function<void(std::uint64_t, const Graph&)>& visit, unsigned shard,
                    unsigned shards) {
  check_order(n);
  if (shards == 0) shards = 1;
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t key = shard; key < total; key += shards) {
    Rows adj{};
    for (std::uint64_t m = key; m; m &= m - 1) {
      const auto [u, v] = pairs[std::countr_zero(m)];
      adj[u] |= Mask{1} << v;
      adj[v] |= Mask{1} << u;
    }
    if (passes(adj, n, filter)) visit(key, to_graph(adj, n));
  }
}

std::vector<Graph> enumerate_graphs(Vertex n, const GraphFilter& filter) {
  std::vector<Graph> out;
  for_each_graph(n, filter, [&](std::uint64_t, const Graph& g) { out.push_back(g); });
  return out;
}

void for_each_sorted_graph(Vertex n, Vertex sorted_from, const GraphFilter& filter,
                           const std::function<void(std::uint64_t, const Graph&)>& visit,
                           unsigned shard, unsigned shards) {
  check_order(n);
  if (shards == 0) shards = 1;
  const int min_deg = filter.biconnected ? 2 : 0;
  Rows adj{};
  auto rec = [&](auto&& self, int u, std::uint64_t key, int low) -> void {
    if (u == n) {
      if (key % shards == shard && passes(adj, n, filter)) visit(key, to_graph(adj, n));
      return;
    }
    const int later = n - u - 1;
    for (Mask choice = 0; choice < (Mask{1} << later); ++choice) {
      const Mask row = choice << (u + 1);
      const int deg = std::popcount(adj[u] | row);
      if (deg < min_deg) continue;
      if (u > sorted_from && deg > std::popcount(adj[u - 1])) continue;
      const bool counted = filter.degree_k && u >= filter.degree_exempt;
      const int now_low = low + (counted && deg < *filter.degree_k ? 1 : 0);
      if (now_low > 1) continue;
      std::uint64_t k2 = key;
      for (Mask m = row; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        adj[v] |= Mask{1} << u;
        k2 |= std::uint64_t{1} << pair_index(n, u, v);
      }
      adj[u] |= row;
      self(self, u + 1, k2, now_low);
      adj[u] &= ~row;
      for (Mask m = row; m; m &= m - 1) adj[std::countr_zero(m)] &= ~(Mask{1} << u);
    }
  };
  rec(rec, 0, 0, 0);
}

Graph random_graph_under_preconditions(Vertex n, Vertex k, std::uint64_t seed) {
  if (k < 2 || n < 2 * k + 1) {
    throw InvalidParameters("random_graph_under_preconditions needs k >= 2 and n >= 2k + 1");
  }
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t m) { return static_cast<Vertex>(rng() % m); };
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (Vertex i = n - 1; i > 0; --i) std::swap(perm[i], perm[below(i + 1)]);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<Vertex> deg(n, 0);
    auto add = [&](Vertex a, Vertex b) {
      if (a == b || adj[a][b]) return;
      adj[a][b] = adj[b][a] = 1;
      ++deg[a];
      ++deg[b];
    };
    // Initial cycle, then ears with fresh internal vertices.
    const Vertex first = 3 + below(static_cast<std::uint64_t>(n - 2));
    for (Vertex i = 0; i < first; ++i) add(perm[i], perm[(i + 1) % first]);
    Vertex used = first;
    while (used < n) {
      const Vertex room = n - used;
      const Vertex len = 1 + below(static_cast<std::uint64_t>(std::min<Vertex>(room, std::max<Vertex>(1, n / 3))));
      const Vertex a = perm[below(used)];
      Vertex b = perm[below(used - 1)];
      if (b == a) b = perm[used - 1];
      Vertex prev = a;
      for (Vertex i = 0; i < len; ++i) {
        add(prev, perm[used + i]);
        prev = perm[used + i];
      }
      add(prev, b);
      used += len;
    }
    const Vertex chords = below(static_cast<std::uint64_t>(n / 4 + 1));
    for (Vertex c = 0; c < chords; ++c) add(below(n), below(n));
    // Degree repair; optionally leave one vertex below k.
    const Vertex exempt = below(2) ? below(n) : -1;
    std::vector<Vertex> order(perm);
    for (Vertex i = n - 1; i > 0; --i) std::swap(order[i], order[below(i + 1)]);
    for (Vertex v : order) {
      const Vertex need = v == exempt ? std::max<Vertex>(2, k - 1 - below(2)) : k;
      while (deg[v] < need) {
        std::vector<Vertex> low, any;
        for (Vertex w = 0; w < n; ++w) {
          if (w == v || adj[v][w]) continue;
          any.push_back(w);
          if (deg[w] < k && w != exempt) low.push_back(w);
        }
        const auto& pool = low.empty() ? any : low;
        if (pool.empty()) break;
        add(v, pool[below(pool.size())]);
      }
    }
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (adj[a][b]) edges.push_back({a, b});
      }
    }
    Graph g = Graph::from_edges(n, edges);
    const auto r = check_preconditions(g, k);
    if (r.biconnected && r.degree_condition()) return g;
  }
  throw Error("random_graph_under_preconditions: generation failed after retries");
}

Graph delete_random_edges(const Graph& g, Vertex k, Vertex count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto edges = g.edges();
  for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[rng() % i]);
  Graph cur = g;
  Vertex removed = 0;
  for (const Edge& e : edges) {
    if (removed >= count) break;
    Graph next = without_edge(cur, e);
    const auto r = check_preconditions(next, k);
    if (r.biconnected && r.degree_condition()) {
      cur = std::move(next);
      ++removed;
    }
  }
  return cur;
}

}  // namespace cyclestab::harness
