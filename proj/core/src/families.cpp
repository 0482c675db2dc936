#include "cyclestab/families.hpp"

#include <algorithm>
#include <functional>

#include "cyclestab/error.hpp"
#include "detail.hpp"

namespace cyclestab {
namespace {

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

[[noreturn]] void bad(const std::string& what) { throw InvalidParameters(what); }

std::int64_t order64(const FamilySpec& spec) {
  return std::visit(
      detail::overloaded{
          [](const HFamily& f) -> std::int64_t { return f.n; },
          [](const FFamily& f) -> std::int64_t {
            return 3 + std::int64_t{f.s + f.t} * (f.k - 1) + 1;
          },
          [](const F1Family& f) -> std::int64_t {
            return 2 + std::int64_t{f.t} * (f.k - 1) + f.k + 1;
          },
          [](const FVFamily& f) -> std::int64_t {
            return 2 + std::int64_t{f.t} * (f.k - 1) + f.k;
          },
          [](const K2Matching& f) -> std::int64_t { return 2 + std::int64_t{f.t}; },
          [](const K2StarMatching& f) -> std::int64_t {
            return 2 + std::int64_t{f.s} + f.t;
          },
          [](const K3Matching& f) -> std::int64_t { return 3 + std::int64_t{f.t}; },
          [](const K1Cliques& f) -> std::int64_t {
            return 1 + std::int64_t{f.t} * f.k + f.k + 1 + 1;
          },
          [](const JoinedCenters& f) -> std::int64_t {
            return 2 + std::int64_t{f.s + f.t} * f.k + 1;
          },
          [](const K1Matching& f) -> std::int64_t { return 1 + std::int64_t{f.t}; },
          [](const K1StarMatching& f) -> std::int64_t {
            return 1 + std::int64_t{f.s} + f.t;
          },
      },
      spec);
}

// Accumulates edges of a host while vertices are handed out in role order.
struct Builder {
  std::vector<Edge> edges;
  std::vector<Role> roles;

  Vertex add(Role r) {
    roles.push_back(r);
    return static_cast<Vertex>(roles.size() - 1);
  }
  std::vector<Vertex> clique(RoleKind kind, Vertex j, Vertex size) {
    std::vector<Vertex> out;
    for (Vertex i = 0; i < size; ++i) out.push_back(add({kind, j, i}));
    for (std::size_t p = 0; p < out.size(); ++p) {
      for (std::size_t q = p + 1; q < out.size(); ++q) edges.push_back({out[p], out[q]});
    }
    return out;
  }
  void attach(std::span<const Vertex> apexes, std::span<const Vertex> members) {
    for (Vertex a : apexes) {
      for (Vertex v : members) edges.push_back({a, v});
    }
  }
  std::vector<Vertex> apexes(Vertex count) {
    std::vector<Vertex> out;
    for (Vertex i = 0; i < count; ++i) out.push_back(add({RoleKind::Apex, 0, i}));
    for (std::size_t p = 0; p < out.size(); ++p) {
      for (std::size_t q = p + 1; q < out.size(); ++q) edges.push_back({out[p], out[q]});
    }
    return out;
  }
  // Star then matching, both fully attached to `apex`.
  void star_matching(std::span<const Vertex> apex, Vertex s, Vertex t) {
    std::vector<Vertex> rest;
    if (s > 0) {
      const Vertex c = add({RoleKind::StarCenter, 0, 0});
      rest.push_back(c);
      for (Vertex i = 0; i + 1 < s; ++i) {
        const Vertex leaf = add({RoleKind::StarLeaf, 0, i});
        edges.push_back({c, leaf});
        rest.push_back(leaf);
      }
    }
    for (Vertex i = 0; i < t; ++i) {
      const Vertex v = add({RoleKind::M, 0, i});
      if (i % 2 == 1) edges.push_back({v - 1, v});
      rest.push_back(v);
    }
    attach(apex, rest);
  }
  LabeledGraph finish() {
    LabeledGraph out;
    out.graph = Graph::from_edges(static_cast<Vertex>(roles.size()), edges);
    out.roles = std::move(roles);
    return out;
  }
};

// Segment capacities: a longest path leaves |S| separator vertices and at most
// |S| + 1 runs, each inside one component of host - S.
Vertex segment_bound(Vertex separators, std::vector<Vertex> values, std::int64_t order) {
  std::sort(values.begin(), values.end(), std::greater<>());
  std::int64_t total = separators;
  for (std::size_t i = 0; i < values.size() && i < static_cast<std::size_t>(separators) + 1;
       ++i) {
    total += values[i];
  }
  return static_cast<Vertex>(std::min(total, order));
}

void push_star_matching(std::vector<Vertex>& values, Vertex s, Vertex t) {
  if (s > 0) {
    values.push_back(std::min<Vertex>(s, 3));
    for (Vertex i = 3; i < s; ++i) values.push_back(1);
  }
  for (Vertex i = 0; i + 1 < t; i += 2) values.push_back(2);
  if (t % 2 == 1) values.push_back(1);
}

}  // namespace

std::string family_name(const FamilySpec& spec) {
  static constexpr const char* names[] = {"H",   "F",    "F1",   "FV", "K2M", "K2SM",
                                          "K3M", "K1TK", "JC",   "K1M", "K1SM"};
  return names[spec.index()];
}

std::string describe(const FamilySpec& spec) {
  auto join_ints = [](std::initializer_list<Vertex> xs) {
    std::string out;
    for (Vertex x : xs) {
      if (!out.empty()) out += ',';
      out += std::to_string(x);
    }
    return out;
  };
  const std::string args = std::visit(
      detail::overloaded{
          [&](const HFamily& f) { return join_ints({f.n, f.ell, f.a}); },
          [&](const FFamily& f) { return join_ints({f.s, f.t, f.k}); },
          [&](const F1Family& f) { return join_ints({f.t, f.k}); },
          [&](const FVFamily& f) { return join_ints({f.t, f.k}); },
          [&](const K2Matching& f) { return join_ints({f.t}); },
          [&](const K2StarMatching& f) { return join_ints({f.s, f.t}); },
          [&](const K3Matching& f) { return join_ints({f.t}); },
          [&](const K1Cliques& f) { return join_ints({f.t, f.k}); },
          [&](const JoinedCenters& f) { return join_ints({f.s, f.t, f.k}); },
          [&](const K1Matching& f) { return join_ints({f.t}); },
          [&](const K1StarMatching& f) { return join_ints({f.s, f.t}); },
      },
      spec);
  return family_name(spec) + "{" + args + "}";
}

void validate(const FamilySpec& spec) {
  const std::string name = describe(spec);
  std::visit(detail::overloaded{
                 [&](const HFamily& f) {
                   if (f.a < 1) bad(name + ": a >= 1 required");
                   if (f.ell < 2 * f.a) bad(name + ": ell >= 2a required");
                   if (f.n < f.ell - f.a) bad(name + ": n >= ell - a required");
                 },
                 [&](const FFamily& f) {
                   if (f.s < 1 || f.t < 1) bad(name + ": s, t >= 1 required");
                   if (f.k < 2) bad(name + ": k >= 2 required");
                 },
                 [&](const F1Family& f) {
                   if (f.t < 1) bad(name + ": t >= 1 required");
                   if (f.k < 2) bad(name + ": k >= 2 required");
                 },
                 [&](const FVFamily& f) {
                   if (f.t < 1) bad(name + ": t >= 1 required");
                   if (f.k < 2) bad(name + ": k >= 2 required");
                 },
                 [&](const K2Matching& f) {
                   if (f.t < 6) bad(name + ": t >= 6 required");
                 },
                 [&](const K2StarMatching& f) {
                   if (f.s < 1 || f.t < 0) bad(name + ": s >= 1, t >= 0 required");
                   if (f.s + f.t < 6) bad(name + ": s + t >= 6 required");
                 },
                 [&](const K3Matching& f) {
                   if (f.t < 7) bad(name + ": t >= 7 required");
                 },
                 [&](const K1Cliques& f) {
                   if (f.t < 1) bad(name + ": t >= 1 required");
                   if (f.k < 1) bad(name + ": k >= 1 required");
                 },
                 [&](const JoinedCenters& f) {
                   if (f.s < 1 || f.t < 1) bad(name + ": s, t >= 1 required");
                   if (f.k < 1) bad(name + ": k >= 1 required");
                 },
                 [&](const K1Matching& f) {
                   if (f.t < 6) bad(name + ": t >= 6 required");
                 },
                 [&](const K1StarMatching& f) {
                   if (f.s < 1 || f.t < 0) bad(name + ": s >= 1, t >= 0 required");
                   if (f.s + f.t < 6) bad(name + ": s + t >= 6 required");
                 },
             },
             spec);
  if (order64(spec) > kMaxOrder) bad(name + ": host order exceeds 2^24");
}

Vertex host_order(const FamilySpec& spec) {
  validate(spec);
  return static_cast<Vertex>(order64(spec));
}

bool is_path_family(const FamilySpec& spec) {
  return std::holds_alternative<K1Cliques>(spec) || std::holds_alternative<JoinedCenters>(spec) ||
         std::holds_alternative<K1Matching>(spec) ||
         std::holds_alternative<K1StarMatching>(spec);
}

LabeledGraph build_family(const FamilySpec& spec) {
  validate(spec);
  Builder b;
  std::visit(
      detail::overloaded{
          [&](const HFamily& f) {
            const Vertex nb = f.n - f.ell + f.a;
            const Vertex nc = f.ell - 2 * f.a;
            std::vector<Vertex> a, bs, c;
            for (Vertex i = 0; i < f.a; ++i) a.push_back(b.add({RoleKind::A, 0, i}));
            for (Vertex i = 0; i < nb; ++i) bs.push_back(b.add({RoleKind::B, 0, i}));
            for (Vertex i = 0; i < nc; ++i) c.push_back(b.add({RoleKind::C, 0, i}));
            std::vector<Vertex> ac = a;
            ac.insert(ac.end(), c.begin(), c.end());
            for (std::size_t p = 0; p < ac.size(); ++p) {
              for (std::size_t q = p + 1; q < ac.size(); ++q) b.edges.push_back({ac[p], ac[q]});
            }
            b.attach(a, bs);
          },
          [&](const FFamily& f) {
            const Vertex x = b.add({RoleKind::ApexX, 0, 0});
            const Vertex y = b.add({RoleKind::ApexY, 0, 0});
            const Vertex z = b.add({RoleKind::ApexZ, 0, 0});
            b.edges.insert(b.edges.end(), {{x, y}, {x, z}, {y, z}});
            const Vertex xz[] = {x, z};
            const Vertex yz[] = {y, z};
            for (Vertex j = 0; j < f.s; ++j) b.attach(xz, b.clique(RoleKind::S, j, f.k - 1));
            const Vertex single = b.add({RoleKind::SSingle, 0, 0});
            b.attach(xz, std::span<const Vertex>(&single, 1));
            for (Vertex j = 0; j < f.t; ++j) b.attach(yz, b.clique(RoleKind::T, j, f.k - 1));
          },
          [&](const F1Family& f) {
            const Vertex uv[] = {b.add({RoleKind::ApexU, 0, 0}), b.add({RoleKind::ApexV, 0, 0})};
            b.edges.push_back({uv[0], uv[1]});
            for (Vertex j = 0; j < f.t; ++j) b.attach(uv, b.clique(RoleKind::Cl, j, f.k - 1));
            b.attach(uv, b.clique(RoleKind::Big, 0, f.k));
            const Vertex single = b.add({RoleKind::Single, 0, 0});
            b.attach(uv, std::span<const Vertex>(&single, 1));
          },
          [&](const FVFamily& f) {
            const Vertex uv[] = {b.add({RoleKind::ApexU, 0, 0}), b.add({RoleKind::ApexV, 0, 0})};
            b.edges.push_back({uv[0], uv[1]});
            for (Vertex j = 0; j < f.t; ++j) b.attach(uv, b.clique(RoleKind::Cl, j, f.k - 1));
            b.attach(uv, b.clique(RoleKind::Big, 0, f.k));
          },
          [&](const K2Matching& f) { b.star_matching(b.apexes(2), 0, f.t); },
          [&](const K2StarMatching& f) { b.star_matching(b.apexes(2), f.s, f.t); },
          [&](const K3Matching& f) { b.star_matching(b.apexes(3), 0, f.t); },
          [&](const K1Cliques& f) {
            const auto c = b.apexes(1);
            for (Vertex j = 0; j < f.t; ++j) b.attach(c, b.clique(RoleKind::Cl, j, f.k));
            b.attach(c, b.clique(RoleKind::Big, 0, f.k + 1));
            const Vertex single = b.add({RoleKind::Single, 0, 0});
            b.attach(c, std::span<const Vertex>(&single, 1));
          },
          [&](const JoinedCenters& f) {
            const auto c = b.apexes(2);
            const Vertex c0[] = {c[0]};
            const Vertex c1[] = {c[1]};
            for (Vertex j = 0; j < f.s; ++j) b.attach(c0, b.clique(RoleKind::S, j, f.k));
            for (Vertex j = 0; j < f.t; ++j) b.attach(c1, b.clique(RoleKind::T, j, f.k));
            const Vertex single = b.add({RoleKind::Single, 0, 0});
            b.attach(c1, std::span<const Vertex>(&single, 1));
          },
          [&](const K1Matching& f) { b.star_matching(b.apexes(1), 0, f.t); },
          [&](const K1StarMatching& f) { b.star_matching(b.apexes(1), f.s, f.t); },
      },
      spec);
  return b.finish();
}

std::int64_t family_edge_count(const FamilySpec& spec) {
  const auto* h = std::get_if<HFamily>(&spec);
  if (!h) throw InvalidParameters("family_edge_count: " + describe(spec) + " is not an H spec");
  validate(spec);
  return choose2(std::int64_t{h->ell} - h->a) + std::int64_t{h->a} * (h->n - h->ell + h->a);
}

Vertex max_cycle_bound(const FamilySpec& spec, Vertex k) {
  validate(spec);
  auto need_k = [&](Vertex expected) {
    if (k != expected) {
      throw InvalidParameters(describe(spec) + " is a host for k = " + std::to_string(expected) +
                              ", not k = " + std::to_string(k));
    }
  };
  return std::visit(detail::overloaded{
                        [&](const HFamily& f) { return f.ell - 1; },
                        [&](const FFamily& f) { need_k(f.k); return 2 * k + 1; },
                        [&](const F1Family& f) { need_k(f.k); return 2 * k + 1; },
                        [&](const FVFamily& f) { need_k(f.k); return 2 * k + 1; },
                        [&](const K2Matching&) { need_k(3); return 7; },
                        [&](const K2StarMatching&) { need_k(3); return 7; },
                        [&](const K3Matching&) { need_k(4); return 9; },
                        [&](const K1Cliques& f) { need_k(f.k); return max_path_order_bound(spec); },
                        [&](const JoinedCenters& f) {
                          need_k(f.k);
                          return max_path_order_bound(spec);
                        },
                        [&](const K1Matching&) { need_k(2); return max_path_order_bound(spec); },
                        [&](const K1StarMatching&) {
                          need_k(2);
                          return max_path_order_bound(spec);
                        },
                    },
                    spec);
}

Vertex max_path_order_bound(const FamilySpec& spec) {
  validate(spec);
  const std::int64_t order = order64(spec);
  std::vector<Vertex> values;
  return std::visit(
      detail::overloaded{
          [&](const HFamily& f) {
            values.push_back(f.ell - 2 * f.a);
            values.insert(values.end(), static_cast<std::size_t>(std::min(f.n - f.ell + f.a, f.a + 1)),
                          1);
            return segment_bound(f.a, values, order);
          },
          [&](const FFamily& f) {
            values.assign(static_cast<std::size_t>(std::min(f.s + f.t, 4)), f.k - 1);
            values.push_back(1);
            return segment_bound(3, values, order);
          },
          [&](const F1Family& f) {
            values.assign(static_cast<std::size_t>(std::min(f.t, 3)), f.k - 1);
            values.push_back(f.k);
            values.push_back(1);
            return segment_bound(2, values, order);
          },
          [&](const FVFamily& f) {
            values.assign(static_cast<std::size_t>(std::min(f.t, 3)), f.k - 1);
            values.push_back(f.k);
            return segment_bound(2, values, order);
          },
          [&](const K2Matching& f) {
            push_star_matching(values, 0, f.t);
            return segment_bound(2, values, order);
          },
          [&](const K2StarMatching& f) {
            push_star_matching(values, f.s, f.t);
            return segment_bound(2, values, order);
          },
          [&](const K3Matching& f) {
            push_star_matching(values, 0, f.t);
            return segment_bound(3, values, order);
          },
          [&](const K1Cliques& f) {
            values.assign(static_cast<std::size_t>(std::min(f.t, 2)), f.k);
            values.push_back(f.k + 1);
            values.push_back(1);
            return segment_bound(1, values, order);
          },
          // A path meets each center once and side cliques hang off a single
          // center, so at most one clique on each side plus both centers.
          [&](const JoinedCenters& f) {
            return static_cast<Vertex>(std::min<std::int64_t>(2 * f.k + 2, order));
          },
          [&](const K1Matching& f) {
            push_star_matching(values, 0, f.t);
            return segment_bound(1, values, order);
          },
          [&](const K1StarMatching& f) {
            push_star_matching(values, f.s, f.t);
            return segment_bound(1, values, order);
          },
      },
      spec);
}

}  // namespace cyclestab
