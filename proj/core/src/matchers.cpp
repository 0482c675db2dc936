#include <algorithm>

#include "cyclestab/recognize.hpp"
#include "detail.hpp"

namespace cyclestab::match {
namespace {

struct Split {
  std::vector<Vertex> label;  // component index, -2 for removed vertices
  std::vector<std::vector<Vertex>> parts;
};

void charge(std::uint64_t* work, std::uint64_t steps) {
  if (work) *work += steps;
}

// Components of G - removed, ordered by smallest member, members ascending.
Split split_off(const Graph& g, std::span<const Vertex> removed, std::uint64_t* work) {
  const Vertex n = g.order();
  Split s;
  s.label.assign(n, -1);
  for (Vertex r : removed) s.label[r] = -2;
  std::uint64_t steps = n;
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (s.label[v] != -1) continue;
    const Vertex id = static_cast<Vertex>(s.parts.size());
    s.label[v] = id;
    queue.assign(1, v);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto nb = g.neighbors(queue[head]);
      steps += nb.size();
      for (Vertex w : nb) {
        if (s.label[w] == -1) {
          s.label[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    s.parts.push_back(queue);
  }
  charge(work, steps);
  return s;
}

// Components of part `id` with vertex b deleted.
std::vector<std::vector<Vertex>> split_part(const Graph& g, const Split& s, Vertex id, Vertex b,
                                            std::uint64_t* work) {
  std::vector<std::vector<Vertex>> pieces;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  seen[b] = 1;
  std::uint64_t steps = 0;
  std::vector<Vertex> queue;
  for (Vertex v : s.parts[id]) {
    if (seen[v]) continue;
    seen[v] = 1;
    queue.assign(1, v);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto nb = g.neighbors(queue[head]);
      steps += nb.size();
      for (Vertex w : nb) {
        if (!seen[w] && s.label[w] == id) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    pieces.push_back(queue);
  }
  charge(work, steps);
  return pieces;
}

// Smallest vertex b of part `id` whose deletion leaves pieces of order <= limit,
// or -1. One DFS computing subtree sizes and lowpoints.
Vertex cut_center(const Graph& g, const Split& s, Vertex id, Vertex limit, std::uint64_t* work) {
  const auto& part = s.parts[id];
  const Vertex size = static_cast<Vertex>(part.size());
  const Vertex n = g.order();
  std::vector<Vertex> disc(n, -1), low(n, 0), parent(n, -1), sub(n, 1), sep(n, 0), maxsep(n, 0);
  std::vector<std::size_t> next(n, 0);
  std::vector<Vertex> stack{part.front()};
  Vertex time = 0;
  disc[part.front()] = low[part.front()] = time++;
  std::uint64_t steps = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    const auto nb = g.neighbors(v);
    if (next[v] < nb.size()) {
      const Vertex w = nb[next[v]++];
      ++steps;
      if (s.label[w] != id) continue;
      if (disc[w] < 0) {
        parent[w] = v;
        disc[w] = low[w] = time++;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      stack.pop_back();
      const Vertex p = parent[v];
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        sub[p] += sub[v];
        if (low[v] >= disc[p]) {
          sep[p] += sub[v];
          maxsep[p] = std::max(maxsep[p], sub[v]);
        }
      }
    }
  }
  charge(work, steps);
  for (Vertex v : part) {
    if (std::max(maxsep[v], size - 1 - sep[v]) <= limit) return v;
  }
  return -1;
}

void assign_cliques(std::vector<Role>& roles, const std::vector<std::vector<Vertex>>& parts,
                    RoleKind kind, Vertex skip, Vertex& count) {
  count = 0;
  for (Vertex j = 0; j < static_cast<Vertex>(parts.size()); ++j) {
    if (j == skip) continue;
    for (Vertex i = 0; i < static_cast<Vertex>(parts[j].size()); ++i) {
      roles[parts[j][i]] = {kind, count, i};
    }
    ++count;
  }
}

// Shared two-sided core: x side keeps whole components of G - removed, the
// located vertex b takes the single oversized component. Used by F (with the
// third apex c) and JC (no shared apex).
struct TwoSided {
  Vertex b = -1;
  Vertex big = -1;
  std::vector<std::vector<Vertex>> pieces;
};

std::optional<TwoSided> two_sided(const Graph& g, const Split& s, Vertex a, Vertex limit,
                                  bool allow_search, std::uint64_t* work) {
  TwoSided out;
  for (Vertex j = 0; j < static_cast<Vertex>(s.parts.size()); ++j) {
    if (static_cast<Vertex>(s.parts[j].size()) > limit) {
      if (out.big >= 0) return std::nullopt;
      out.big = j;
    }
  }
  if (out.big < 0) return out;
  int touching = 0;
  for (Vertex w : g.neighbors(a)) {
    if (s.label[w] == out.big) {
      out.b = w;
      if (++touching > 1) return std::nullopt;
    }
  }
  charge(work, g.degree(a));
  if (touching == 0) {
    if (!allow_search) return std::nullopt;
    out.b = cut_center(g, s, out.big, limit, work);
    if (out.b < 0) return std::nullopt;
  }
  out.pieces = split_part(g, s, out.big, out.b, work);
  for (const auto& p : out.pieces) {
    if (static_cast<Vertex>(p.size()) > limit) return std::nullopt;
  }
  return out;
}

bool distinct_in_range(const Graph& g, std::initializer_list<Vertex> vs) {
  for (auto it = vs.begin(); it != vs.end(); ++it) {
    if (*it < 0 || *it >= g.order()) return false;
    for (auto jt = vs.begin(); jt != it; ++jt) {
      if (*jt == *it) return false;
    }
  }
  return true;
}

enum class Sporadic { K2M, K2SM, K3M, K1M, K1SM, K2MPath };

// Apexes dominate; the rest must be a matching, or a star plus a matching.
std::optional<Embedding> star_matching(const Graph& g, std::vector<Vertex> apexes,
                                       Sporadic kind) {
  std::sort(apexes.begin(), apexes.end());
  const Vertex n = g.order();
  std::vector<char> is_apex(n, 0);
  for (Vertex a : apexes) is_apex[a] = 1;
  std::vector<Vertex> deg(n, 0);
  Vertex center = -1;
  const bool star_ok = kind == Sporadic::K2SM || kind == Sporadic::K1SM;
  for (Vertex v = 0; v < n; ++v) {
    if (is_apex[v]) continue;
    for (Vertex w : g.neighbors(v)) deg[v] += is_apex[w] ? 0 : 1;
    if (deg[v] >= 2) {
      if (!star_ok || center >= 0) return std::nullopt;
      center = v;
    }
  }
  Embedding emb;
  emb.roles.assign(n, Role{});
  std::vector<char> done(n, 0);
  for (Vertex i = 0; i < static_cast<Vertex>(apexes.size()); ++i) {
    emb.roles[apexes[i]] = {RoleKind::Apex, 0, i};
    done[apexes[i]] = 1;
  }
  Vertex s = 1;
  if (center >= 0) {
    emb.roles[center] = {RoleKind::StarCenter, 0, 0};
    done[center] = 1;
    for (Vertex w : g.neighbors(center)) {
      if (is_apex[w]) continue;
      emb.roles[w] = {RoleKind::StarLeaf, 0, s - 1};
      done[w] = 1;
      ++s;
    }
  }
  Vertex t = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (done[v]) continue;
    done[v] = 1;
    emb.roles[v] = {RoleKind::M, 0, t};
    for (Vertex w : g.neighbors(v)) {
      if (!is_apex[w]) {
        emb.roles[w] = {RoleKind::M, 0, t + 1};
        done[w] = 1;
      }
    }
    t += 2;
  }
  switch (kind) {
    case Sporadic::K2M: emb.spec = K2Matching{std::max<Vertex>(t, 6)}; break;
    case Sporadic::K2MPath: emb.spec = K2Matching{std::max<Vertex>(t, 7)}; break;
    case Sporadic::K3M: emb.spec = K3Matching{std::max<Vertex>(t, 7)}; break;
    case Sporadic::K1M: emb.spec = K1Matching{std::max<Vertex>(t, 6)}; break;
    case Sporadic::K2SM: emb.spec = K2StarMatching{s, std::max<Vertex>(t, 6 - s)}; break;
    case Sporadic::K1SM: emb.spec = K1StarMatching{s, std::max<Vertex>(t, 6 - s)}; break;
  }
  return emb;
}

}  // namespace

std::optional<Embedding> h_family(const Graph& g, std::span<const Vertex> a, Vertex ell,
                                  std::uint64_t* work) {
  const Vertex n = g.order();
  const Vertex na = static_cast<Vertex>(a.size());
  if (na < 1 || ell < 2 * na || n < ell - na) return std::nullopt;
  const Vertex nc = ell - 2 * na;
  std::vector<char> in_a(n, 0);
  std::int64_t deg_sum = 0, inside = 0;
  for (Vertex v : a) {
    if (v < 0 || v >= n || in_a[v]) return std::nullopt;
    in_a[v] = 1;
    deg_sum += g.degree(v);
  }
  for (Vertex i = 0; i < na; ++i) {
    for (Vertex j = i + 1; j < na; ++j) inside += g.adjacent(a[i], a[j]) ? 1 : 0;
  }
  charge(work, static_cast<std::uint64_t>(na) * na);
  // Edges avoiding A must all lie inside C.
  const std::int64_t outside = static_cast<std::int64_t>(g.size()) - (deg_sum - inside);
  if (outside > std::int64_t{nc} * (nc - 1) / 2) return std::nullopt;
  std::vector<Vertex> w;
  std::uint64_t steps = n;
  for (Vertex v = 0; v < n; ++v) {
    if (in_a[v]) continue;
    const auto nb = g.neighbors(v);
    for (Vertex x : nb) {
      ++steps;
      if (!in_a[x]) {
        w.push_back(v);
        break;
      }
    }
    if (static_cast<Vertex>(w.size()) > nc) {
      charge(work, steps);
      return std::nullopt;
    }
  }
  charge(work, steps);
  Embedding emb;
  emb.spec = HFamily{n, ell, na};
  emb.roles.assign(n, Role{});
  std::vector<Vertex> sorted_a(a.begin(), a.end());
  std::sort(sorted_a.begin(), sorted_a.end());
  for (Vertex i = 0; i < na; ++i) emb.roles[sorted_a[i]] = {RoleKind::A, 0, i};
  std::vector<char> in_c(n, 0);
  for (Vertex v : w) in_c[v] = 1;
  Vertex filled = static_cast<Vertex>(w.size());
  for (Vertex v = 0; v < n && filled < nc; ++v) {
    if (!in_a[v] && !in_c[v]) {
      in_c[v] = 1;
      ++filled;
    }
  }
  Vertex ci = 0, bi = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (in_a[v]) continue;
    emb.roles[v] = in_c[v] ? Role{RoleKind::C, 0, ci++} : Role{RoleKind::B, 0, bi++};
  }
  return emb;
}

std::optional<Embedding> f1_pair(const Graph& g, Vertex u, Vertex v, Vertex k,
                                 std::uint64_t* work) {
  if (k < 2 || !distinct_in_range(g, {u, v})) return std::nullopt;
  if (u > v) std::swap(u, v);
  const Vertex removed[] = {u, v};
  const Split s = split_off(g, removed, work);
  Vertex big = -1;
  for (Vertex j = 0; j < static_cast<Vertex>(s.parts.size()); ++j) {
    const Vertex size = static_cast<Vertex>(s.parts[j].size());
    if (size > k) return std::nullopt;
    if (size == k) {
      if (big >= 0) return std::nullopt;
      big = j;
    }
  }
  Embedding emb;
  emb.roles.assign(g.order(), Role{});
  emb.roles[u] = {RoleKind::ApexU, 0, 0};
  emb.roles[v] = {RoleKind::ApexV, 0, 0};
  Vertex t = 0;
  assign_cliques(emb.roles, s.parts, RoleKind::Cl, big, t);
  if (big >= 0) {
    for (Vertex i = 0; i < static_cast<Vertex>(s.parts[big].size()); ++i) {
      emb.roles[s.parts[big][i]] = {RoleKind::Big, 0, i};
    }
  }
  emb.spec = F1Family{std::max<Vertex>(t, 1), k};
  return emb;
}

std::optional<Embedding> f_pair(const Graph& g, Vertex a, Vertex c, Vertex k,
                                std::uint64_t* work) {
  if (k < 2 || !distinct_in_range(g, {a, c})) return std::nullopt;
  const Vertex removed[] = {a, c};
  const Split s = split_off(g, removed, work);
  const auto core = two_sided(g, s, a, k - 1, true, work);
  if (!core) return std::nullopt;
  Embedding emb;
  emb.roles.assign(g.order(), Role{});
  emb.roles[a] = {RoleKind::ApexX, 0, 0};
  emb.roles[c] = {RoleKind::ApexZ, 0, 0};
  if (core->b >= 0) emb.roles[core->b] = {RoleKind::ApexY, 0, 0};
  Vertex sides = 0, pieces = 0;
  assign_cliques(emb.roles, s.parts, RoleKind::S, core->big, sides);
  assign_cliques(emb.roles, core->pieces, RoleKind::T, -1, pieces);
  emb.spec = FFamily{std::max<Vertex>(sides, 1), std::max<Vertex>(pieces, 1), k};
  return emb;
}

std::optional<Embedding> k2m_pair(const Graph& g, Vertex u, Vertex v) {
  if (!distinct_in_range(g, {u, v})) return std::nullopt;
  return star_matching(g, {u, v}, Sporadic::K2M);
}

std::optional<Embedding> k2sm_pair(const Graph& g, Vertex u, Vertex v) {
  if (!distinct_in_range(g, {u, v})) return std::nullopt;
  return star_matching(g, {u, v}, Sporadic::K2SM);
}

std::optional<Embedding> k3m_triple(const Graph& g, Vertex u, Vertex v, Vertex w) {
  if (!distinct_in_range(g, {u, v, w})) return std::nullopt;
  return star_matching(g, {u, v, w}, Sporadic::K3M);
}

std::optional<Embedding> k1tk_center(const Graph& g, Vertex c, Vertex k) {
  if (k < 1 || !distinct_in_range(g, {c})) return std::nullopt;
  const Vertex removed[] = {c};
  const Split s = split_off(g, removed, nullptr);
  Vertex big = -1;
  for (Vertex j = 0; j < static_cast<Vertex>(s.parts.size()); ++j) {
    const Vertex size = static_cast<Vertex>(s.parts[j].size());
    if (size > k + 1) return std::nullopt;
    if (size == k + 1) {
      if (big >= 0) return std::nullopt;
      big = j;
    }
  }
  Embedding emb;
  emb.roles.assign(g.order(), Role{});
  emb.roles[c] = {RoleKind::Apex, 0, 0};
  Vertex t = 0;
  assign_cliques(emb.roles, s.parts, RoleKind::Cl, big, t);
  if (big >= 0) {
    for (Vertex i = 0; i < static_cast<Vertex>(s.parts[big].size()); ++i) {
      emb.roles[s.parts[big][i]] = {RoleKind::Big, 0, i};
    }
  }
  emb.spec = K1Cliques{std::max<Vertex>(t, 1), k};
  return emb;
}

std::optional<Embedding> jc_center(const Graph& g, Vertex c, Vertex k) {
  if (k < 1 || !distinct_in_range(g, {c})) return std::nullopt;
  const Vertex removed[] = {c};
  const Split s = split_off(g, removed, nullptr);
  const auto core = two_sided(g, s, c, k, false, nullptr);
  if (!core) return std::nullopt;
  Embedding emb;
  emb.roles.assign(g.order(), Role{});
  emb.roles[c] = {RoleKind::Apex, 0, 0};
  if (core->b >= 0) emb.roles[core->b] = {RoleKind::Apex, 0, 1};
  Vertex sides = 0, pieces = 0;
  assign_cliques(emb.roles, s.parts, RoleKind::S, core->big, sides);
  assign_cliques(emb.roles, core->pieces, RoleKind::T, -1, pieces);
  emb.spec = JoinedCenters{std::max<Vertex>(sides, 1), std::max<Vertex>(pieces, 1), k};
  return emb;
}

std::optional<Embedding> k1m_center(const Graph& g, Vertex c) {
  if (!distinct_in_range(g, {c})) return std::nullopt;
  return star_matching(g, {c}, Sporadic::K1M);
}

std::optional<Embedding> k1sm_center(const Graph& g, Vertex c) {
  if (!distinct_in_range(g, {c})) return std::nullopt;
  return star_matching(g, {c}, Sporadic::K1SM);
}

std::optional<Embedding> k2m_path_pair(const Graph& g, Vertex u, Vertex v) {
  if (!distinct_in_range(g, {u, v})) return std::nullopt;
  return star_matching(g, {u, v}, Sporadic::K2MPath);
}

}  // namespace cyclestab::match
