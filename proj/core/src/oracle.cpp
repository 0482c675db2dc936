#include "cyclestab/oracle.hpp"

#include <bit>
#include <cstdint>

#include "cyclestab/error.hpp"

namespace cyclestab::oracle {
namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

struct Masks {
  int n = 0;
  std::vector<Mask> adj;
};

Masks masks(const Graph& g, const Options& opts) {
  const Vertex cap = std::min(opts.cap, kHardLimit);
  if (g.order() > cap) {
    throw CapExceeded("oracle: n = " + std::to_string(g.order()) + " exceeds cap " +
                      std::to_string(cap));
  }
  Masks m;
  m.n = g.order();
  m.adj.assign(m.n, 0);
  for (Vertex v = 0; v < m.n; ++v) {
    for (Vertex w : g.neighbors(v)) m.adj[v] |= bit(w);
  }
  return m;
}

// Vertices of `avail` reachable from `from` through `avail`.
Mask reach(const Masks& m, int from, Mask avail) {
  Mask seen = 0;
  Mask frontier = m.adj[from] & avail;
  while (frontier) {
    seen |= frontier;
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= m.adj[std::countr_zero(f)];
    frontier = next & avail & ~seen;
  }
  return seen;
}

// Cycles whose smallest vertex is `start`. Records cycles longer than `best`
// and stops once one reaches `target`.
struct CycleSearch {
  const Masks& m;
  int start = 0;
  Mask allowed = 0;
  int target = 0;
  int best = 0;
  std::vector<Vertex> path, best_cycle;
  bool done = false;

  void dfs(int cur, Mask used) {
    const int len = static_cast<int>(path.size());
    if (len >= 3 && (m.adj[cur] & bit(start)) && len > best) {
      best = len;
      best_cycle = path;
      if (best >= target) {
        done = true;
        return;
      }
    }
    const Mask avail = allowed & ~used;
    const Mask r = reach(m, cur, avail);
    if (len + std::popcount(r) <= best) return;
    if (!(r & m.adj[start])) return;
    for (Mask c = m.adj[cur] & avail; c; c &= c - 1) {
      const int w = std::countr_zero(c);
      path.push_back(w);
      dfs(w, used | bit(w));
      path.pop_back();
      if (done) return;
    }
  }
};

// Longest cycle with length >= floor, stopping at target. Empty when none.
std::vector<Vertex> search_cycles(const Masks& m, int floor, int target) {
  int best = floor - 1;
  std::vector<Vertex> out;
  for (int s = 0; s < m.n; ++s) {
    const Mask allowed = ~Mask{0} << s & (m.n == 64 ? ~Mask{0} : bit(m.n) - 1);
    if (std::popcount(allowed) <= best) break;
    CycleSearch cs{m, s, allowed, target, best, {static_cast<Vertex>(s)}, {}, false};
    cs.dfs(s, bit(s));
    if (cs.best > best) {
      best = cs.best;
      out = cs.best_cycle;
      if (best >= target) break;
    }
  }
  return out;
}

struct PathSearch {
  const Masks& m;
  Mask all = 0;
  int target = 0;
  int end = -1;  // fixed terminal, or -1
  int best = 0;
  std::vector<Vertex> path, best_path;
  bool done = false;

  void dfs(int cur, Mask used) {
    const int len = static_cast<int>(path.size());
    const bool at_end = end < 0 || cur == end;
    if (at_end && len > best) {
      best = len;
      best_path = path;
      if (best >= target) {
        done = true;
        return;
      }
    }
    if (end >= 0 && cur == end) return;
    const Mask avail = all & ~used;
    const Mask r = reach(m, cur, avail);
    if (len + std::popcount(r) <= best) return;
    if (end >= 0 && !(r & bit(end))) return;
    for (Mask c = m.adj[cur] & avail; c; c &= c - 1) {
      const int w = std::countr_zero(c);
      path.push_back(w);
      dfs(w, used | bit(w));
      path.pop_back();
      if (done) return;
    }
  }
};

Mask full(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

std::vector<Vertex> search_paths(const Masks& m, int floor, int target) {
  PathSearch ps{m, full(m.n), target, -1, floor - 1, {}, {}, false};
  for (int s = 0; s < m.n && !ps.done; ++s) {
    ps.path.assign(1, s);
    ps.dfs(s, bit(s));
  }
  return ps.best_path;
}

}  // namespace

CycleResult circumference(const Graph& g, const Options& opts) {
  const Masks m = masks(g, opts);
  CycleResult out;
  auto cycle = search_cycles(m, 3, m.n);
  if (!cycle.empty()) {
    out.length = static_cast<Vertex>(cycle.size());
    out.witness = CycleWitness{std::move(cycle)};
  }
  return out;
}

std::optional<CycleWitness> has_cycle_at_least(const Graph& g, Vertex L, const Options& opts) {
  if (L < 3) throw PreconditionError("has_cycle_at_least: L must be >= 3");
  const Masks m = masks(g, opts);
  if (L > m.n) return std::nullopt;
  auto cycle = search_cycles(m, L, L);
  if (cycle.empty()) return std::nullopt;
  return CycleWitness{std::move(cycle)};
}

PathResult longest_path_order(const Graph& g, const Options& opts) {
  const Masks m = masks(g, opts);
  PathResult out;
  out.path = search_paths(m, 1, m.n);
  out.order = static_cast<Vertex>(out.path.size());
  return out;
}

std::optional<std::vector<Vertex>> has_path_at_least(const Graph& g, Vertex L,
                                                     const Options& opts) {
  const Masks m = masks(g, opts);
  if (L > m.n) return std::nullopt;
  auto path = search_paths(m, std::max<Vertex>(L, 1), std::max<Vertex>(L, 1));
  if (path.empty()) return std::nullopt;
  return path;
}

PathResult longest_uv_path_order(const Graph& g, Vertex u, Vertex v, const Options& opts) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw PreconditionError("longest_uv_path_order: vertex out of range");
  }
  if (u == v) throw PreconditionError("longest_uv_path_order: u == v");
  const Masks m = masks(g, opts);
  PathSearch ps{m, full(m.n), m.n, v, 0, {u}, {}, false};
  ps.dfs(u, bit(u));
  PathResult out;
  out.path = ps.best_path;
  out.order = static_cast<Vertex>(out.path.size());
  return out;
}

}  // namespace cyclestab::oracle
