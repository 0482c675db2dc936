#include "cyclestab/turan.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include <json.hpp>

#include "cyclestab/error.hpp"
#include "cyclestab/longcycle.hpp"
#include "cyclestab/oracle.hpp"

namespace cyclestab::turan {

std::int64_t turan_bound(Vertex n, Vertex k) {
  if (k < 1 || n < 2 * k + 2) {
    throw InvalidParameters("turan_bound needs k >= 1 and n >= 2k + 2 (got n = " +
                            std::to_string(n) + ", k = " + std::to_string(k) + ")");
  }
  return static_cast<std::int64_t>(k) * n / 2;
}

ForbiddenReport check_forbidden(const Graph& g, Vertex k) {
  ForbiddenReport r;
  for (Vertex v = 0; v < g.order(); ++v) r.has_star = r.has_star || g.degree(v) >= k + 1;
  Vertex count = 0;
  const auto label = component_labels(g, &count);
  std::vector<std::vector<Vertex>> comps(count);
  for (Vertex v = 0; v < g.order(); ++v) comps[label[v]].push_back(v);
  r.has_path = false;
  for (const auto& comp : comps) {
    if (static_cast<Vertex>(comp.size()) <= 2 * k) continue;
    const Graph h = induced(g, comp).graph;
    if (h.order() <= oracle::kDefaultCap) {
      if (oracle::has_path_at_least(h, 2 * k + 1)) {
        r.has_path = true;
        return r;
      }
      continue;
    }
    if (find_long_cycle(with_apex(h), 2 * k + 2)) {
      r.has_path = true;
      return r;
    }
    r.has_path.reset();
  }
  return r;
}

namespace {

std::vector<Vertex> partition(Vertex n, Vertex k) {
  std::vector<Vertex> parts;
  if (k == 1) {
    parts.assign(static_cast<std::size_t>(n / 2), 2);
    if (n % 2) parts.push_back(1);
    return parts;
  }
  // Split `total` into q near-equal parts of size `unit` * h with h <= cap.
  auto split = [&](Vertex total, Vertex unit, Vertex cap) {
    const Vertex units = total / unit;
    const Vertex q = (units + cap - 1) / cap;
    for (Vertex i = 0; i < q; ++i) parts.push_back(unit * (units / q + (i < units % q ? 1 : 0)));
  };
  if (k % 2 == 0) {
    split(n, 1, 2 * k);
  } else if (n % 2 == 0) {
    split(n, 2, k);
  } else {
    parts.push_back(k + 2);
    split(n - k - 2, 2, k);
  }
  return parts;
}

}  // namespace

Graph build_turan_extremal(Vertex n, Vertex k) {
  turan_bound(n, k);
  std::vector<Edge> edges;
  Vertex base = 0;
  for (Vertex p : partition(n, k)) {
    auto add = [&](Vertex a, Vertex b) {
      edges.push_back({base + std::min(a, b), base + std::max(a, b)});
    };
    if (p == 2 && k == 1) {
      add(0, 1);
    } else if (p > 1) {
      const Vertex half = k / 2;
      for (Vertex i = 0; i < p; ++i) {
        for (Vertex d = 1; d <= half; ++d) add(i, (i + d) % p);
      }
      if (k % 2 == 1) {
        if (p % 2 == 0) {
          for (Vertex i = 0; i < p / 2; ++i) add(i, i + p / 2);
        } else {
          const Vertex m = (p - 1) / 2;
          for (Vertex i = 0; i < m; ++i) add(i, i + m);
        }
      }
    }
    base += p;
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(n, edges);
}

namespace {

using Mask = std::uint32_t;

// Longest path check on a tiny graph given as adjacency masks.
bool has_path_masks(const std::vector<Mask>& adj, Mask comp, int want) {
  struct Dfs {
    const std::vector<Mask>& adj;
    int want;
    bool go(int v, Mask used, int len) {
      if (len >= want) return true;
      for (Mask c = adj[v] & ~used; c; c &= c - 1) {
        const int w = std::countr_zero(c);
        if (go(w, used | Mask{1} << w, len + 1)) return true;
      }
      return false;
    }
  } dfs{adj, want};
  for (Mask c = comp; c; c &= c - 1) {
    const int v = std::countr_zero(c);
    if (dfs.go(v, Mask{1} << v, 1)) return true;
  }
  return false;
}

struct Census {
  int n = 0, k = 0;
  std::uint64_t budget = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<Mask> adj;
  std::vector<int> deg;
  std::uint64_t nodes = 0, graphs = 0, extremal = 0;
  std::int64_t bound = 0, max_free = -1;
  bool aborted = false;

  bool forbidden_free() const {
    Mask seen = 0;
    for (int s = 0; s < n; ++s) {
      if (seen >> s & 1) continue;
      Mask comp = Mask{1} << s, frontier = comp;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        frontier = next & ~comp;
        comp |= next;
      }
      seen |= comp;
      if (std::popcount(comp) > 2 * k && has_path_masks(adj, comp, 2 * k + 1)) return false;
    }
    return true;
  }

  void run(std::size_t e, std::int64_t edges) {
    if (aborted) return;
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    if (e == pairs.size()) {
      ++graphs;
      if (forbidden_free()) {
        max_free = std::max(max_free, edges);
        if (edges == bound) ++extremal;
      }
      return;
    }
    run(e + 1, edges);
    const auto [u, v] = pairs[e];
    if (deg[u] < k && deg[v] < k) {
      ++deg[u];
      ++deg[v];
      adj[u] |= Mask{1} << v;
      adj[v] |= Mask{1} << u;
      run(e + 1, edges + 1);
      adj[u] &= ~(Mask{1} << v);
      adj[v] &= ~(Mask{1} << u);
      --deg[u];
      --deg[v];
    }
  }
};

Graph random_graph_with_edges(Vertex n, std::int64_t m, std::uint64_t seed) {
  std::vector<Edge> all;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
  }
  std::mt19937_64 rng(seed);
  for (std::int64_t i = 0; i < m; ++i) {
    const auto j = i + static_cast<std::int64_t>(rng() % (all.size() - i));
    std::swap(all[i], all[j]);
  }
  all.resize(static_cast<std::size_t>(m));
  std::sort(all.begin(), all.end());
  return Graph::from_edges(n, all);
}

double log_binomial(double a, double b) {
  return std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1);
}

}  // namespace

TuranReport verify_turan(Vertex n, Vertex k, const VerifyOptions& opts) {
  TuranReport r;
  r.n = n;
  r.k = k;
  r.bound = turan_bound(n, k);
  const double pairs = 0.5 * n * (n - 1);
  if (r.bound + 1 > pairs) throw InvalidParameters("bound + 1 exceeds the number of vertex pairs");
  if (log_binomial(pairs, static_cast<double>(r.bound + 1)) > std::log(opts.subset_budget)) {
    throw Error("verify_turan: edge-subset space exceeds the configured budget");
  }

  const Graph ext = build_turan_extremal(n, k);
  r.extremal_edges = static_cast<std::int64_t>(ext.size());
  const auto fr = check_forbidden(ext, k);
  r.extremal_forbidden_free = !fr.has_star && fr.has_path == false;

  // Pruned search for a counterexample with bound + 1 edges: degrees capped
  // at k, and a branch dies once current + floor(sum of spare degree / 2) is
  // below the target.
  {
    std::vector<std::pair<Vertex, Vertex>> all;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
    }
    std::vector<Vertex> deg(n, 0);
    const std::int64_t target = r.bound + 1;
    std::vector<Edge> chosen;
    std::int64_t spare = static_cast<std::int64_t>(k) * n;
    auto search = [&](auto&& self, std::size_t e) -> void {
      ++r.search_nodes;
      const auto have = static_cast<std::int64_t>(chosen.size());
      if (have + spare / 2 < target) return;
      if (have == target) {
        const auto rep = check_forbidden(Graph::from_edges(n, chosen), k);
        if (!rep.has_star && rep.has_path != true) ++r.search_counterexamples;
        return;
      }
      if (e == all.size()) return;
      const auto [u, v] = all[e];
      if (deg[u] < k && deg[v] < k) {
        ++deg[u];
        ++deg[v];
        spare -= 2;
        chosen.push_back({u, v});
        self(self, e + 1);
        chosen.pop_back();
        spare += 2;
        --deg[u];
        --deg[v];
      }
      self(self, e + 1);
    };
    search(search, 0);
  }

  // Seeded samples, sharded by index so any job count gives the same result.
  {
    const unsigned jobs = std::max(1u, opts.jobs);
    std::vector<std::uint64_t> bad(jobs, 0);
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back([&, j] {
        for (std::uint64_t i = j; i < opts.samples; i += jobs) {
          const Graph g = random_graph_with_edges(n, r.bound + 1, opts.seed * 0x9E3779B97F4A7C15ull + i);
          const auto rep = check_forbidden(g, k);
          if (!rep.has_star && rep.has_path != true) ++bad[j];
        }
      });
    }
    for (auto& t : pool) t.join();
    r.samples = opts.samples;
    r.sample_violations = std::accumulate(bad.begin(), bad.end(), std::uint64_t{0});
  }

  if (n <= 16) {
    Census c;
    c.n = n;
    c.k = k;
    c.budget = opts.census_budget;
    c.bound = r.bound;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) c.pairs.emplace_back(u, v);
    }
    c.adj.assign(n, 0);
    c.deg.assign(n, 0);
    c.run(0, 0);
    r.census_complete = !c.aborted;
    if (r.census_complete) {
      r.census_graphs = c.graphs;
      r.census_max_free_edges = c.max_free;
      r.census_extremal_graphs = c.extremal;
    }
  }

  r.pass = r.extremal_edges == r.bound && r.extremal_forbidden_free &&
           r.search_counterexamples == 0 && r.sample_violations == 0 &&
           (!r.census_complete || (r.census_max_free_edges == r.bound && r.census_extremal_graphs > 0));
  return r;
}

std::string TuranReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["k"] = k;
  j["bound"] = bound;
  j["extremal_edges"] = extremal_edges;
  j["extremal_forbidden_free"] = extremal_forbidden_free;
  j["search_nodes"] = search_nodes;
  j["search_counterexamples"] = search_counterexamples;
  j["samples"] = samples;
  j["sample_violations"] = sample_violations;
  j["census_complete"] = census_complete;
  if (census_complete) {
    j["census_graphs"] = census_graphs;
    j["census_max_free_edges"] = census_max_free_edges;
    j["census_extremal_graphs"] = census_extremal_graphs;
  }
  j["pass"] = pass;
  return j.dump(2);
}

bool components_bound_check(const Graph& g, Vertex k) {
  const Vertex n = g.order();
  if (static_cast<std::int64_t>(g.size()) != turan_bound(n, k)) {
    throw PreconditionError("components_bound_check: edge count is not floor(kn/2)");
  }
  const auto fr = check_forbidden(g, k);
  if (fr.has_star || fr.has_path != false) {
    throw PreconditionError("components_bound_check: graph is not {S_{k+2}, P_{2k+1}}-free");
  }
  Vertex count = 0;
  const auto label = component_labels(g, &count);
  std::vector<Vertex> size(count, 0);
  for (Vertex v = 0; v < n; ++v) ++size[label[v]];
  return std::all_of(size.begin(), size.end(), [&](Vertex s) { return s <= 2 * k; });
}

}  // namespace cyclestab::turan
