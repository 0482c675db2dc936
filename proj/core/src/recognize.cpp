#include "cyclestab/recognize.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "cyclestab/error.hpp"

namespace cyclestab {

PreconditionReport check_preconditions(const Graph& g, Vertex k) {
  PreconditionReport r;
  r.n = g.order();
  r.m = g.size();
  r.k = k;
  const auto bc = biconnectivity(g);
  r.connected = bc.connected;
  r.biconnected = bc.biconnected;
  if (r.n == 0) return r;
  const auto profile = degree_profile(g);
  r.k_max = profile.second_min_degree.value_or(profile.min_degree);
  Vertex low = 0;
  for (Vertex v = 0; v < r.n; ++v) {
    if (g.degree(v) < k) {
      if (low++ == 0) r.exceptional_vertex = v;
    }
  }
  if (low != 1) r.exceptional_vertex.reset();
  return r;
}

void require_cycle_domain(const PreconditionReport& r, Vertex k_min, Vertex n_min) {
  if (!r.biconnected) throw PreconditionError("graph is not 2-connected");
  if (r.k < k_min) {
    throw PreconditionError("k = " + std::to_string(r.k) + " is below the minimum " +
                            std::to_string(k_min));
  }
  if (!r.degree_condition()) {
    throw PreconditionError("degree condition fails: two or more vertices have degree < " +
                            std::to_string(r.k) + " (k_max = " + std::to_string(r.k_max) + ")");
  }
  if (r.n < n_min) {
    throw PreconditionError("n = " + std::to_string(r.n) + " is below " + std::to_string(n_min));
  }
}

std::vector<Vertex> degree_seeds(const Graph& g, Vertex k, std::size_t limit) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order() && out.size() < limit; ++v) {
    if (g.degree(v) == k) out.push_back(v);
  }
  return out;
}

std::optional<Embedding> recognize(const Graph& g, Vertex k, const RecognizeOptions& opts,
                                   std::uint64_t* work) {
  require_cycle_domain(check_preconditions(g, k), 2, 2 * k + 1);
  const auto seeds = degree_seeds(g, k, opts.seed_limit.value_or(SIZE_MAX));
  if (work) *work += g.order();
  if (g.order() == 2 * k + 1) {
    for (Vertex x : seeds) {
      if (auto e = match::h_family(g, g.neighbors(x), 2 * k + 1, work)) return e;
    }
    return std::nullopt;
  }
  for (Vertex x : seeds) {
    if (auto e = match::h_family(g, g.neighbors(x), 2 * k + 2, work)) return e;
  }
  // F before F1: small F members also fit inside F1 hosts.
  std::set<std::pair<Vertex, Vertex>> tried;
  for (Vertex x : seeds) {
    const auto nb = g.neighbors(x);
    for (Vertex a : nb) {
      for (Vertex c : nb) {
        if (a == c || !tried.emplace(a, c).second) continue;
        if (auto e = match::f_pair(g, a, c, k, work)) return e;
      }
    }
  }
  tried.clear();
  for (Vertex x : seeds) {
    const auto nb = g.neighbors(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!tried.emplace(nb[i], nb[j]).second) continue;
        if (auto e = match::f1_pair(g, nb[i], nb[j], k, work)) return e;
      }
    }
  }
  if (k == 3) {
    tried.clear();
    for (Vertex x : seeds) {
      const auto nb = g.neighbors(x);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (!tried.emplace(nb[i], nb[j]).second) continue;
          if (auto e = match::k2m_pair(g, nb[i], nb[j])) return e;
        }
      }
    }
    tried.clear();
    for (Vertex x : seeds) {
      const auto nb = g.neighbors(x);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (!tried.emplace(nb[i], nb[j]).second) continue;
          if (auto e = match::k2sm_pair(g, nb[i], nb[j])) return e;
        }
      }
    }
  }
  if (k == 4) {
    std::set<std::array<Vertex, 3>> triples;
    for (Vertex x : seeds) {
      const auto nb = g.neighbors(x);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          for (std::size_t l = j + 1; l < nb.size(); ++l) {
            if (!triples.insert({nb[i], nb[j], nb[l]}).second) continue;
            if (auto e = match::k3m_triple(g, nb[i], nb[j], nb[l])) return e;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<OreWitness> recognize_ore(const Graph& g, Vertex k) {
  const auto r = check_preconditions(g, k);
  if (!r.biconnected) throw PreconditionError("graph is not 2-connected");
  if (k < 1) throw PreconditionError("k must be >= 1");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < k) {
      throw PreconditionError("vertex " + std::to_string(v) + " has degree below k");
    }
  }
  // Every vertex of I has neighborhood exactly D, while D-vertices have degree
  // >= s > k, so any degree-k vertex lies in I and pins D.
  const auto seeds = degree_seeds(g, k, 1);
  if (seeds.empty()) return std::nullopt;
  const auto d = g.neighbors(seeds.front());
  std::vector<char> in_d(g.order(), 0);
  for (Vertex v : d) in_d[v] = 1;
  OreWitness w;
  w.dominating.assign(d.begin(), d.end());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_d[v]) continue;
    if (g.degree(v) != k) return std::nullopt;
    for (Vertex x : g.neighbors(v)) {
      if (!in_d[x]) return std::nullopt;
    }
    w.independent.push_back(v);
  }
  if (static_cast<Vertex>(w.independent.size()) < k + 1) return std::nullopt;
  return w;
}

}  // namespace cyclestab
