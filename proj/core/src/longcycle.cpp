#include "cyclestab/longcycle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "cyclestab/error.hpp"
#include "detail.hpp"

namespace cyclestab {

bool is_valid_path(const Graph& g, std::span<const Vertex> path, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (path.empty()) return fail("empty path");
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v = path[i];
    if (v < 0 || v >= g.order()) return fail("vertex " + std::to_string(v) + " out of range");
    if (seen[v]) return fail("vertex " + std::to_string(v) + " repeated");
    seen[v] = 1;
    if (i > 0 && !g.adjacent(path[i - 1], v)) {
      return fail("no edge " + std::to_string(path[i - 1]) + " " + std::to_string(v));
    }
  }
  return true;
}

bool is_valid_cycle(const Graph& g, std::span<const Vertex> cycle, std::string* why) {
  if (cycle.size() < 3) {
    if (why) *why = "cycle has fewer than 3 vertices";
    return false;
  }
  if (!is_valid_path(g, cycle, why)) return false;
  if (!g.adjacent(cycle.back(), cycle.front())) {
    if (why) {
      *why = "no closing edge " + std::to_string(cycle.back()) + " " +
             std::to_string(cycle.front());
    }
    return false;
  }
  return true;
}

// PathState -----------------------------------------------------------------

PathState::PathState(const Graph& g, std::vector<Vertex> order)
    : g_(&g), order_(std::move(order)), pos_(static_cast<std::size_t>(g.order()), 0) {
  std::string why;
  if (!is_valid_path(g, order_, &why)) throw PreconditionError("not a path: " + why);
  reindex(0, size() - 1);
}

void PathState::reindex(Vertex from, Vertex to) {
  for (Vertex i = from; i <= to; ++i) pos_[order_[i]] = i + 1;
}

std::vector<Vertex> PathState::front_neighbors() const {
  std::vector<Vertex> out;
  for (Vertex w : g_->neighbors(front())) {
    if (pos_[w]) out.push_back(pos_[w]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> PathState::back_neighbors() const {
  std::vector<Vertex> out;
  for (Vertex w : g_->neighbors(back())) {
    if (pos_[w]) out.push_back(pos_[w]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> PathState::shifted_front() const {
  std::vector<Vertex> out;
  for (Vertex w : front_neighbors()) out.push_back(w - 1);
  return out;
}

std::vector<Vertex> PathState::shifted_back() const {
  std::vector<Vertex> out;
  for (Vertex w : back_neighbors()) out.push_back(w + 1);
  return out;
}

bool PathState::endpoints_disjoint() const {
  const auto nf = front_neighbors(), nb = back_neighbors();
  const auto sf = shifted_front(), sb = shifted_back();
  auto meets = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return !both.empty();
  };
  return !meets(sf, nb) && !meets(sb, nf);
}

Vertex PathState::rotate_front(Vertex j) {
  std::reverse(order_.begin(), order_.begin() + (j - 1));
  reindex(0, j - 2);
  return front();
}

Vertex PathState::rotate_back(Vertex i) {
  std::reverse(order_.begin() + i, order_.end());
  reindex(i, size() - 1);
  return back();
}

void PathState::push_back(Vertex v) {
  order_.push_back(v);
  pos_[v] = size();
}

void PathState::push_front(Vertex v) {
  order_.insert(order_.begin(), v);
  reindex(0, size() - 1);
}

PathState rotate(const PathState& state, Vertex pivot, End end) {
  const Graph& g = state.graph();
  if (pivot < 0 || pivot >= g.order() || !state.contains(pivot)) {
    throw PreconditionError("rotate: pivot " + std::to_string(pivot) + " is not on the path");
  }
  const Vertex idx = state.index_of(pivot);
  const Vertex m = state.size();
  PathState out = state;
  if (end == End::Back) {
    if (!g.adjacent(state.back(), pivot) || idx >= m - 1) {
      throw PreconditionError("rotate: invalid back pivot " + std::to_string(pivot));
    }
    out.rotate_back(idx);
  } else {
    if (!g.adjacent(state.front(), pivot) || idx <= 2) {
      throw PreconditionError("rotate: invalid front pivot " + std::to_string(pivot));
    }
    out.rotate_front(idx);
  }
  return out;
}

PathState rotate(const PathState& state, Vertex pivot) {
  const Graph& g = state.graph();
  if (pivot >= 0 && pivot < g.order() && state.contains(pivot) &&
      g.adjacent(state.back(), pivot) && state.index_of(pivot) < state.size() - 1) {
    return rotate(state, pivot, End::Back);
  }
  return rotate(state, pivot, End::Front);
}

CycleWitness close_crossing(const PathState& state, Vertex i, Vertex j) {
  const Graph& g = state.graph();
  const Vertex m = state.size();
  if (i < 1 || j > m || i >= j) {
    throw PreconditionError("close_crossing: need 1 <= i < j <= m");
  }
  if (!g.adjacent(state.at(i), state.back()) || !g.adjacent(state.at(j), state.front())) {
    throw PreconditionError("close_crossing: x_i must neighbor x_m and x_j must neighbor x_1");
  }
  CycleWitness out;
  if (i == 1 && j == m) {
    out.cycle = state.order();
  } else {
    for (Vertex w = 1; w <= i; ++w) out.cycle.push_back(state.at(w));
    for (Vertex w = m; w >= j; --w) out.cycle.push_back(state.at(w));
  }
  std::string why;
  if (!is_valid_cycle(g, out.cycle, &why)) {
    throw PreconditionError("close_crossing: " + why);
  }
  return out;
}

// Vines ------------------------------------------------------------------------

namespace {

// Ear with the largest t > frontier (ties: largest s) among attachments
// s in [lo, hi]: chords of P, or paths through a component of G - V(P) not yet
// used by the vine.
std::optional<Ear> best_ear(const Graph& g, const PathState& p, const std::vector<Vertex>& comp,
                            const std::vector<char>& used_comp, Vertex lo, Vertex hi,
                            Vertex frontier) {
  std::optional<Ear> best;
  auto better = [&](Vertex s, Vertex t) {
    return !best || t > best->t || (t == best->t && s > best->s);
  };
  for (Vertex s = lo; s <= hi; ++s) {
    const Vertex xs = p.at(s);
    for (Vertex w : g.neighbors(xs)) {
      const Vertex t = p.index_of(w);
      if (t > frontier && better(s, t)) best = Ear{s, t, {xs, w}};
    }
  }
  // Component attachments: highest index reached and the highest s in range.
  const Vertex n = g.order();
  Vertex ncomp = 0;
  for (Vertex v = 0; v < n; ++v) ncomp = std::max(ncomp, comp[v] + 1);
  std::vector<Vertex> top_t(ncomp, 0), top_s(ncomp, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (comp[v] < 0 || used_comp[comp[v]]) continue;
    for (Vertex w : g.neighbors(v)) {
      const Vertex idx = p.index_of(w);
      if (idx == 0) continue;
      top_t[comp[v]] = std::max(top_t[comp[v]], idx);
      if (idx >= lo && idx <= hi) top_s[comp[v]] = std::max(top_s[comp[v]], idx);
    }
  }
  for (Vertex c = 0; c < ncomp; ++c) {
    if (used_comp[c] || top_s[c] == 0 || top_t[c] <= frontier || !better(top_s[c], top_t[c])) {
      continue;
    }
    // BFS inside the component from N(x_s) to N(x_t).
    const Vertex xs = p.at(top_s[c]), xt = p.at(top_t[c]);
    std::vector<Vertex> parent(n, -2);
    std::vector<Vertex> queue;
    for (Vertex w : g.neighbors(xs)) {
      if (comp[w] == c) {
        parent[w] = -1;
        queue.push_back(w);
      }
    }
    Vertex hit = -1;
    for (std::size_t head = 0; head < queue.size() && hit < 0; ++head) {
      const Vertex v = queue[head];
      if (g.adjacent(v, xt)) {
        hit = v;
        break;
      }
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] == c && parent[w] == -2) {
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
    if (hit < 0) continue;
    std::vector<Vertex> inner;
    for (Vertex v = hit; v >= 0; v = parent[v]) inner.push_back(v);
    std::reverse(inner.begin(), inner.end());
    Ear e{top_s[c], top_t[c], {xs}};
    e.path.insert(e.path.end(), inner.begin(), inner.end());
    e.path.push_back(xt);
    best = e;
  }
  return best;
}

}  // namespace

Vine grow_vine(const Graph& g, const PathState& state, Vertex g_index, Vertex h_index) {
  if (g_index >= h_index) throw PreconditionError("vine not required: g >= h");
  if (g_index < 1 || h_index > state.size()) throw PreconditionError("vine: index out of range");
  const Vertex n = g.order();
  std::vector<Vertex> comp(n, -1);
  Vertex ncomp = 0;
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (state.contains(v) || comp[v] >= 0) continue;
    comp[v] = ncomp;
    queue.assign(1, v);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (!state.contains(w) && comp[w] < 0) {
          comp[w] = ncomp;
          queue.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  std::vector<char> used(ncomp, 0);
  Vine vine;
  vine.g = g_index;
  vine.h = h_index;
  Vertex lo = 1, hi = g_index - 1, frontier = g_index;
  while (true) {
    auto ear = best_ear(g, state, comp, used, lo, hi, frontier);
    if (!ear) throw Error("vine: no ear crosses index " + std::to_string(frontier));
    if (ear->path.size() > 2) used[comp[ear->path[1]]] = 1;
    vine.ears.push_back(*ear);
    if (ear->t > h_index) break;
    const std::size_t r = vine.ears.size();
    lo = r == 1 ? g_index : vine.ears[r - 2].t;
    hi = ear->t - 1;
    frontier = ear->t;
  }
  return vine;
}

CycleWitness vine_merge(const PathState& state, const Vine& vine) {
  const Graph& g = state.graph();
  const Vertex m = state.size();
  const auto& ears = vine.ears;
  if (ears.empty()) throw PreconditionError("vine_merge: empty vine");
  const Vertex r = static_cast<Vertex>(ears.size());
  const Vertex s1 = ears.front().s, tr = ears.back().t;
  Vertex i0 = 0, j0 = 0;
  for (Vertex w : state.front_neighbors()) {
    if (w > s1 && (i0 == 0 || w < i0)) i0 = w;
  }
  for (Vertex w : state.back_neighbors()) {
    if (w < tr) j0 = std::max(j0, w);
  }
  if (i0 == 0 || j0 == 0) throw PreconditionError("vine_merge: i_0 or j_0 does not exist");
  std::vector<Vertex> cyc;
  auto forward = [&](Vertex a, Vertex b) {
    for (Vertex w = a; w <= b; ++w) cyc.push_back(state.at(w));
  };
  auto backward = [&](Vertex a, Vertex b) {
    for (Vertex w = a; w >= b; --w) cyc.push_back(state.at(w));
  };
  auto inner = [&](const Ear& e, bool reversed) {
    const auto& p = e.path;
    if (!reversed) {
      for (std::size_t i = 1; i + 1 < p.size(); ++i) cyc.push_back(p[i]);
    } else {
      for (std::size_t i = p.size() - 2; i >= 1; --i) cyc.push_back(p[i]);
    }
  };
  // Odd ears run forward, even ears backward.
  forward(1, s1);
  inner(ears[0], false);
  Vertex at = ears[0].t;
  for (Vertex q = 2; q < r; q += 2) {
    forward(at, ears[q].s);
    inner(ears[q], false);
    at = ears[q].t;
  }
  Vertex last_even;  // 0-based index of the highest even ear
  if (r % 2 == 1) {
    forward(at, m);
    last_even = r - 2;
    Vertex from = j0;
    for (Vertex q = last_even; q >= 1; q -= 2) {
      backward(from, ears[q].t);
      inner(ears[q], true);
      from = ears[q].s;
    }
    backward(from, i0);
  } else {
    forward(at, j0);
    last_even = r - 1;
    Vertex from = m;
    for (Vertex q = last_even; q >= 1; q -= 2) {
      backward(from, ears[q].t);
      inner(ears[q], true);
      from = ears[q].s;
    }
    backward(from, i0);
  }
  std::string why;
  if (!is_valid_cycle(g, cyc, &why)) throw Error("vine_merge produced an invalid cycle: " + why);
  return CycleWitness{std::move(cyc)};
}

// Search -------------------------------------------------------------------

namespace {

class Searcher {
 public:
  Searcher(const Graph& g, Vertex L, std::uint64_t budget)
      : g_(g), L_(L), budget_(budget), seen_(g.order()) {}

  std::optional<CycleWitness> run() {
    const Vertex n = g_.order();
    if (n < 3 || L_ > n) return std::nullopt;
    std::vector<Vertex> starts(n);
    std::iota(starts.begin(), starts.end(), 0);
    std::stable_sort(starts.begin(), starts.end(),
                     [&](Vertex a, Vertex b) { return g_.degree(a) < g_.degree(b); });
    for (std::uint64_t attempt = 0; !done() && !broke(); ++attempt) {
      const std::uint64_t round = attempt / static_cast<std::uint64_t>(n);
      rng_.seed(round);
      if (round > 0 && attempt % n == 0) std::shuffle(starts.begin(), starts.end(), rng_);
      randomize_ = round > 0;
      attempt_from(starts[attempt % n]);
      if (round > 64) break;
    }
    if (best_ && best_->length() >= L_) return best_;
    return std::nullopt;
  }

 private:
  bool done() const { return best_ && best_->length() >= L_; }
  bool broke() const { return steps_ >= budget_; }

  void offer(std::vector<Vertex> cyc) {
    if (cyc.size() < 3 || (best_ && static_cast<Vertex>(cyc.size()) <= best_->length())) return;
    if (!is_valid_cycle(g_, cyc)) throw Error("find_long_cycle produced an invalid cycle");
    best_ = CycleWitness{std::move(cyc)};
  }

  // Warnsdorff-style choice: the free neighbor with fewest free neighbors.
  Vertex pick_extension(const PathState& p, Vertex end) {
    Vertex pick = -1;
    Vertex pick_score = 0;
    for (Vertex w : g_.neighbors(end)) {
      ++steps_;
      if (p.contains(w)) continue;
      Vertex score = 0;
      for (Vertex x : g_.neighbors(w)) score += p.contains(x) ? 0 : 1;
      steps_ += g_.degree(w);
      if (randomize_) score = score * 4 + static_cast<Vertex>(rng_() % 4);
      if (pick < 0 || score < pick_score) {
        pick = w;
        pick_score = score;
      }
    }
    return pick;
  }

  void extend(PathState& p) {
    for (Vertex w; (w = pick_extension(p, p.back())) >= 0;) p.push_back(w);
    for (Vertex w; (w = pick_extension(p, p.front())) >= 0;) p.push_front(w);
  }

  // Pósa closure at the current back endpoint: x_i ~ x_m with x_{i+1} ~ x_1.
  void close_at_back(const PathState& p) {
    const Vertex m = p.size();
    if (m < 3 || (best_ && best_->length() >= m)) return;
    for (Vertex w : g_.neighbors(p.back())) {
      ++steps_;
      const Vertex i = p.index_of(w);
      if (i == 0 || i >= m - 1) continue;
      if (i == 1 || g_.adjacent(p.at(i + 1), p.front())) {
        offer(close_crossing(p, i, i == 1 ? m : i + 1).cycle);
        return;
      }
    }
  }

  // Rotations of the back end with the front fixed; each endpoint visited once.
  bool rotate_to_extend(PathState& p, int depth) {
    const Vertex e = p.back();
    steps_ += g_.degree(e);
    for (Vertex w : g_.neighbors(e)) {
      if (!p.contains(w)) return true;
    }
    close_at_back(p);
    if (depth >= kMaxDepth || broke() || done()) return false;
    for (Vertex w : g_.neighbors(e)) {
      const Vertex i = p.index_of(w);
      if (i == 0 || i >= p.size() - 1) continue;
      const Vertex next = p.at(i + 1);
      if (seen_.test(next)) continue;
      seen_.set(next);
      steps_ += p.size() - i;
      p.rotate_back(i);
      if (rotate_to_extend(p, depth + 1)) return true;
      p.rotate_back(i);
    }
    return false;
  }

  bool rotate_either(PathState& p) {
    for (int side = 0; side < 2; ++side) {
      seen_.clear();
      seen_.set(p.back());
      if (rotate_to_extend(p, 0)) return true;
      reverse(p);
    }
    return false;
  }

  void reverse(PathState& p) {
    std::vector<Vertex> order(p.order().rbegin(), p.order().rend());
    steps_ += order.size();
    p = PathState(g_, std::move(order));
  }

  void grow(PathState& p) {
    while (!broke() && !done()) {
      extend(p);
      if (!rotate_either(p)) break;
    }
  }

  // Best cycles read off a maximal path: crossings, chords and the vine.
  void close(const PathState& p) {
    const Vertex m = p.size();
    if (m < 3) return;
    const auto f = p.front_neighbors(), b = p.back_neighbors();
    steps_ += f.size() + b.size();
    if (g_.adjacent(p.front(), p.back())) offer(p.order());
    Vertex best_len = 0, bi = 0, bj = 0;
    for (Vertex i : b) {
      auto it = std::upper_bound(f.begin(), f.end(), i);
      if (it == f.end() || i >= m) continue;
      const Vertex len = i + m - *it + 1;
      if (len > best_len && !(i == 1 && *it == m)) {
        best_len = len;
        bi = i;
        bj = *it;
      }
    }
    if (bi > 0 && (!best_ || best_len > best_->length())) offer(close_crossing(p, bi, bj).cycle);
    if (!f.empty() && f.back() >= 3) {
      offer(std::vector<Vertex>(p.order().begin(), p.order().begin() + f.back()));
    }
    if (!b.empty() && m - b.front() + 1 >= 3) {
      offer(std::vector<Vertex>(p.order().begin() + (b.front() - 1), p.order().end()));
    }
    if (!f.empty() && !b.empty() && f.back() < b.front() && f.size() >= 2) {
      try {
        const Vine vine = grow_vine(g_, p, f.back(), b.front());
        steps_ += static_cast<std::uint64_t>(g_.order()) * vine.ears.size();
        offer(vine_merge(p, vine).cycle);
      } catch (const Error&) {
        // No vine on this path; other closures stand.
      }
    }
  }

  // Splices paths through G - V(C) between consecutive cycle vertices.
  std::vector<Vertex> augment(std::vector<Vertex> cyc) {
    const Vertex n = g_.order();
    bool grew = true;
    while (grew && !broke()) {
      grew = false;
      std::vector<char> on(n, 0);
      for (Vertex v : cyc) on[v] = 1;
      for (std::size_t a = 0; a < cyc.size() && !grew; ++a) {
        const Vertex u = cyc[a], v = cyc[(a + 1) % cyc.size()];
        std::vector<Vertex> parent(n, -2), queue;
        for (Vertex w : g_.neighbors(u)) {
          if (!on[w]) {
            parent[w] = -1;
            queue.push_back(w);
          }
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
          const Vertex x = queue[head];
          steps_ += g_.degree(x);
          if (g_.adjacent(x, v)) {
            std::vector<Vertex> inner;
            for (Vertex y = x; y >= 0; y = parent[y]) inner.push_back(y);
            std::reverse(inner.begin(), inner.end());
            cyc.insert(cyc.begin() + static_cast<std::ptrdiff_t>(a + 1), inner.begin(),
                       inner.end());
            grew = true;
            break;
          }
          for (Vertex w : g_.neighbors(x)) {
            if (!on[w] && parent[w] == -2) {
              parent[w] = x;
              queue.push_back(w);
            }
          }
        }
      }
    }
    return cyc;
  }

  void attempt_from(Vertex start) {
    PathState p(g_, {start});
    grow(p);
    close(p);
    for (Vertex round = 0; round < g_.order() && !done() && !broke(); ++round) {
      if (!best_) return;
      auto cyc = augment(best_->cycle);
      offer(cyc);
      if (done()) return;
      // Open the cycle at a vertex with an outside neighbor to get a longer path.
      std::vector<char> on(g_.order(), 0);
      for (Vertex v : cyc) on[v] = 1;
      std::vector<Vertex> path;
      for (std::size_t a = 0; a < cyc.size() && path.empty(); ++a) {
        for (Vertex w : g_.neighbors(cyc[a])) {
          if (!on[w]) {
            path.push_back(w);
            for (std::size_t q = 0; q < cyc.size(); ++q) path.push_back(cyc[(a + q) % cyc.size()]);
            break;
          }
        }
      }
      if (path.empty()) return;
      const Vertex before = best_->length();
      PathState q(g_, std::move(path));
      grow(q);
      close(q);
      if (best_->length() <= before) return;
    }
  }

  static constexpr int kMaxDepth = 256;

  const Graph& g_;
  Vertex L_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::optional<CycleWitness> best_;
  detail::Marker seen_;
  std::mt19937_64 rng_;
  bool randomize_ = false;
};

}  // namespace

std::optional<CycleWitness> find_long_cycle(const Graph& g, Vertex L, const LongCycleOptions& opts) {
  if (L < 3) throw PreconditionError("find_long_cycle: L must be >= 3");
  return Searcher(g, L, opts.budget).run();
}

}  // namespace cyclestab
