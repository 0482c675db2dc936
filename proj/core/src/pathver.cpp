#include "cyclestab/pathver.hpp"

#include <algorithm>
#include <set>

#include "cyclestab/error.hpp"
#include "cyclestab/oracle.hpp"
#include "cyclestab/recognize.hpp"

namespace cyclestab {

Graph apex(const Graph& g) { return with_apex(g); }

namespace {

void require_path_domain(const Graph& g, Vertex k) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  if (g.order() == 0 || !is_connected(g)) throw PreconditionError("graph is not connected");
  if (!check_preconditions(g, k).degree_condition()) {
    throw PreconditionError("degree condition fails: two or more vertices have degree < " +
                            std::to_string(k));
  }
}

Vertex path_threshold(Vertex n, Vertex k) { return std::min(n, 2 * k + 3); }

// Path of G read off a cycle of K_1 + G: open the cycle at the apex.
std::vector<Vertex> path_from_apex_cycle(const std::vector<Vertex>& cycle, Vertex apex_id) {
  auto it = std::find(cycle.begin(), cycle.end(), apex_id);
  if (it == cycle.end()) return cycle;
  std::vector<Vertex> out(it + 1, cycle.end());
  out.insert(out.end(), cycle.begin(), it);
  return out;
}

std::optional<std::vector<Vertex>> long_path(const Graph& g, Vertex order,
                                             const DecideOptions& opts, std::string& source) {
  if (order <= 1) {
    source = "trivial";
    return std::vector<Vertex>{0};
  }
  const Graph star = apex(g);
  if (auto c = find_long_cycle(star, order + 1, opts.search)) {
    source = "find_long_cycle";
    return path_from_apex_cycle(c->cycle, g.order());
  }
  if (g.order() <= std::min(opts.oracle.cap, oracle::kHardLimit)) {
    if (auto p = oracle::has_path_at_least(g, order, opts.oracle)) {
      source = "oracle";
      return p;
    }
  }
  return std::nullopt;
}

Vertex components_without(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(g.order(), 0);
  for (Vertex v : removed) gone[v] = 1;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack;
  Vertex count = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (gone[s] || seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!gone[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

// S with c(G - S) >= |S| + 2: cut vertices and neighborhoods of low-degree vertices.
std::optional<Separator> find_separator(const Graph& g, Vertex k) {
  for (Vertex a : biconnectivity(g).articulation_points) {
    const Vertex s[] = {a};
    if (components_without(g, s) >= 3) return Separator{{a}};
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > k) continue;
    const auto nb = g.neighbors(v);
    if (components_without(g, nb) >= static_cast<Vertex>(nb.size()) + 2) {
      return Separator{{nb.begin(), nb.end()}};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Embedding> recognize_path_family(const Graph& g, Vertex k) {
  require_path_domain(g, k);
  const Vertex n = g.order();
  if (n <= 2 * k + 1) return std::nullopt;
  const Vertex threshold = path_threshold(n, k);
  auto sound = [&](std::optional<Embedding> e) -> std::optional<Embedding> {
    if (e && max_path_order_bound(e->spec) < threshold) return e;
    return std::nullopt;
  };
  const auto seeds = degree_seeds(g, k);
  const Vertex ell = n == 2 * k + 2 ? 2 * k + 1 : 2 * k + 2;
  for (Vertex x : seeds) {
    if (auto e = sound(match::h_family(g, g.neighbors(x), ell))) return e;
  }
  std::set<Vertex> centers;
  for (Vertex x : seeds) centers.insert(g.neighbors(x).begin(), g.neighbors(x).end());
  for (Vertex c : centers) {
    if (auto e = sound(match::k1tk_center(g, c, k))) return e;
  }
  for (Vertex c : centers) {
    if (auto e = sound(match::jc_center(g, c, k))) return e;
  }
  if (k == 2) {
    for (Vertex c : centers) {
      if (auto e = sound(match::k1m_center(g, c))) return e;
      if (auto e = sound(match::k1sm_center(g, c))) return e;
    }
  }
  if (k == 3) {
    std::set<std::pair<Vertex, Vertex>> tried;
    for (Vertex x : seeds) {
      const auto nb = g.neighbors(x);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (!tried.emplace(nb[i], nb[j]).second) continue;
          if (auto e = sound(match::k2m_path_pair(g, nb[i], nb[j]))) return e;
        }
      }
    }
  }
  return std::nullopt;
}

Decision decide_path(const Graph& g, Vertex k, const DecideOptions& opts) {
  require_path_domain(g, k);
  const Vertex n = g.order();
  Decision d;
  d.problem = Problem::Path;
  d.n = n;
  d.k = k;
  d.threshold = path_threshold(n, k);
  d.mode = Mode::Exact;
  d.work = n + g.size();

  auto t1 = [&](std::optional<std::vector<Vertex>> path, std::string source) {
    d.verdict = Verdict::T1;
    if (path) {
      d.evidence = PathWitness{std::move(*path)};
      d.source = std::move(source);
    }
    return d;
  };
  auto t0 = [&](Evidence ev, std::string source) {
    d.verdict = Verdict::T0;
    d.evidence = std::move(ev);
    d.source = std::move(source);
    return d;
  };

  std::string source;
  if (n <= 2 * k + 1) {
    // K_1 + G is 2-connected with all but one degree >= k + 1 on <= 2(k + 1)
    // vertices, hence Hamiltonian.
    if (!opts.want_witness) return t1(std::nullopt, {});
    auto p = long_path(g, n, opts, source);
    return t1(std::move(p), source);
  }

  if (n == 2 * k + 2) {
    if (auto e = recognize_path_family(g, k)) return t0(std::move(*e), "recognizer");
    if (auto c = find_long_cycle(apex(g), n + 1, opts.search)) {
      return t1(path_from_apex_cycle(c->cycle, n), "find_long_cycle");
    }
    if (n <= std::min(opts.oracle.cap, oracle::kHardLimit)) {
      if (auto p = oracle::has_path_at_least(g, n, opts.oracle)) return t1(std::move(p), "oracle");
      if (auto s = find_separator(g, k)) return t0(std::move(*s), "separator");
      return t0(std::monostate{}, "oracle");
    }
    if (auto s = find_separator(g, k)) return t0(std::move(*s), "separator");
    throw CapExceeded("decide_path: n = 2k + 2 instance not settled within the oracle cap");
  }

  const Graph star = apex(g);
  Decision sub = decide_exact(star, k + 1, opts);
  d.work += sub.work;
  if (sub.verdict == Verdict::T1) {
    std::optional<std::vector<Vertex>> path;
    if (const auto* c = std::get_if<CycleWitness>(&sub.evidence)) {
      path = path_from_apex_cycle(c->cycle, n);
    }
    return t1(std::move(path), sub.source);
  }
  if (auto e = recognize_path_family(g, k)) return t0(std::move(*e), "recognizer");
  return t0(ApexEmbedding{std::get<Embedding>(sub.evidence)}, "apex-recognizer");
}

}  // namespace cyclestab
