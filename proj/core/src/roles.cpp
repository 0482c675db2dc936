#include <algorithm>
#include <charconv>

#include "cyclestab/error.hpp"
#include "cyclestab/families.hpp"
#include "detail.hpp"

namespace cyclestab {
namespace {

bool in_range(Vertex x, Vertex hi) { return x >= 0 && x < hi; }

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t slash = s.find('/', start);
    parts.push_back(s.substr(start, slash - start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return parts;
}

Vertex parse_index(std::string_view s, std::string_view whole) {
  Vertex out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || out < 0) {
    throw ParseError(0, "bad role label `" + std::string(whole) + "`");
  }
  return out;
}

bool clique_slot(const Role& r, RoleKind kind, Vertex cliques, Vertex size) {
  return r.kind == kind && in_range(r.j, cliques) && in_range(r.i, size);
}

bool apex_slot(const Role& r, Vertex count) {
  return r.kind == RoleKind::Apex && r.j == 0 && in_range(r.i, count);
}

bool plain(const Role& r, RoleKind kind) { return r.kind == kind && r.j == 0 && r.i == 0; }

bool indexed(const Role& r, RoleKind kind, Vertex hi) {
  return r.kind == kind && r.j == 0 && in_range(r.i, hi);
}

bool star_matching_slot(const Role& r, Vertex s, Vertex t) {
  return (s > 0 && plain(r, RoleKind::StarCenter)) || indexed(r, RoleKind::StarLeaf, s - 1) ||
         indexed(r, RoleKind::M, t);
}

bool star_matching_adjacent(const Role& a, const Role& b) {
  if (a.kind == RoleKind::Apex || b.kind == RoleKind::Apex) return true;
  if (a.kind == RoleKind::M && b.kind == RoleKind::M) return a.i / 2 == b.i / 2;
  const bool center_leaf = (a.kind == RoleKind::StarCenter && b.kind == RoleKind::StarLeaf) ||
                           (a.kind == RoleKind::StarLeaf && b.kind == RoleKind::StarCenter);
  return center_leaf;
}

bool same_clique(const Role& a, const Role& b, RoleKind kind) {
  return a.kind == kind && b.kind == kind && a.j == b.j;
}

}  // namespace

std::string format_role(const Role& r) {
  const std::string i = std::to_string(r.i);
  const std::string ji = std::to_string(r.j) + "/" + i;
  switch (r.kind) {
    case RoleKind::A: return "A/" + i;
    case RoleKind::B: return "B/" + i;
    case RoleKind::C: return "C/" + i;
    case RoleKind::ApexX: return "apex/x";
    case RoleKind::ApexY: return "apex/y";
    case RoleKind::ApexZ: return "apex/z";
    case RoleKind::S: return "s/" + ji;
    case RoleKind::SSingle: return "s/single";
    case RoleKind::T: return "t/" + ji;
    case RoleKind::ApexU: return "apex/u";
    case RoleKind::ApexV: return "apex/v";
    case RoleKind::Cl: return "cl/" + ji;
    case RoleKind::Big: return "big/" + i;
    case RoleKind::Single: return "single";
    case RoleKind::Apex: return "apex/" + i;
    case RoleKind::M: return "m/" + i;
    case RoleKind::StarCenter: return "star/center";
    case RoleKind::StarLeaf: return "star/leaf/" + i;
  }
  return "?";
}

Role parse_role(std::string_view text) {
  const auto p = split(text);
  const auto fail = [&]() -> Role {
    throw ParseError(0, "bad role label `" + std::string(text) + "`");
  };
  auto idx = [&](std::size_t at) { return parse_index(p[at], text); };
  const std::string_view head = p[0];
  if (p.size() == 1) {
    if (head == "single") return {RoleKind::Single, 0, 0};
    return fail();
  }
  if (p.size() == 2) {
    const std::string_view tail = p[1];
    if (head == "A") return {RoleKind::A, 0, idx(1)};
    if (head == "B") return {RoleKind::B, 0, idx(1)};
    if (head == "C") return {RoleKind::C, 0, idx(1)};
    if (head == "big") return {RoleKind::Big, 0, idx(1)};
    if (head == "m") return {RoleKind::M, 0, idx(1)};
    if (head == "s" && tail == "single") return {RoleKind::SSingle, 0, 0};
    if (head == "star" && tail == "center") return {RoleKind::StarCenter, 0, 0};
    if (head == "apex") {
      if (tail == "x") return {RoleKind::ApexX, 0, 0};
      if (tail == "y") return {RoleKind::ApexY, 0, 0};
      if (tail == "z") return {RoleKind::ApexZ, 0, 0};
      if (tail == "u") return {RoleKind::ApexU, 0, 0};
      if (tail == "v") return {RoleKind::ApexV, 0, 0};
      return {RoleKind::Apex, 0, idx(1)};
    }
    return fail();
  }
  if (p.size() == 3) {
    if (head == "s") return {RoleKind::S, idx(1), idx(2)};
    if (head == "t") return {RoleKind::T, idx(1), idx(2)};
    if (head == "cl") return {RoleKind::Cl, idx(1), idx(2)};
    if (head == "star" && p[1] == "leaf") return {RoleKind::StarLeaf, 0, idx(2)};
  }
  return fail();
}

bool role_in_host(const FamilySpec& spec, const Role& r) {
  return std::visit(
      detail::overloaded{
          [&](const HFamily& f) {
            return indexed(r, RoleKind::A, f.a) || indexed(r, RoleKind::B, f.n - f.ell + f.a) ||
                   indexed(r, RoleKind::C, f.ell - 2 * f.a);
          },
          [&](const FFamily& f) {
            return plain(r, RoleKind::ApexX) || plain(r, RoleKind::ApexY) ||
                   plain(r, RoleKind::ApexZ) || clique_slot(r, RoleKind::S, f.s, f.k - 1) ||
                   plain(r, RoleKind::SSingle) || clique_slot(r, RoleKind::T, f.t, f.k - 1);
          },
          [&](const F1Family& f) {
            return plain(r, RoleKind::ApexU) || plain(r, RoleKind::ApexV) ||
                   clique_slot(r, RoleKind::Cl, f.t, f.k - 1) || indexed(r, RoleKind::Big, f.k) ||
                   plain(r, RoleKind::Single);
          },
          [&](const FVFamily& f) {
            return plain(r, RoleKind::ApexU) || plain(r, RoleKind::ApexV) ||
                   clique_slot(r, RoleKind::Cl, f.t, f.k - 1) || indexed(r, RoleKind::Big, f.k);
          },
          [&](const K2Matching& f) { return apex_slot(r, 2) || star_matching_slot(r, 0, f.t); },
          [&](const K2StarMatching& f) {
            return apex_slot(r, 2) || star_matching_slot(r, f.s, f.t);
          },
          [&](const K3Matching& f) { return apex_slot(r, 3) || star_matching_slot(r, 0, f.t); },
          [&](const K1Cliques& f) {
            return apex_slot(r, 1) || clique_slot(r, RoleKind::Cl, f.t, f.k) ||
                   indexed(r, RoleKind::Big, f.k + 1) || plain(r, RoleKind::Single);
          },
          [&](const JoinedCenters& f) {
            return apex_slot(r, 2) || clique_slot(r, RoleKind::S, f.s, f.k) ||
                   clique_slot(r, RoleKind::T, f.t, f.k) || plain(r, RoleKind::Single);
          },
          [&](const K1Matching& f) { return apex_slot(r, 1) || star_matching_slot(r, 0, f.t); },
          [&](const K1StarMatching& f) {
            return apex_slot(r, 1) || star_matching_slot(r, f.s, f.t);
          },
      },
      spec);
}

bool host_adjacent(const FamilySpec& spec, const Role& a, const Role& b) {
  if (a == b) return false;
  auto either = [&](RoleKind k) { return a.kind == k || b.kind == k; };
  auto both_in = [&](std::initializer_list<RoleKind> kinds) {
    auto has = [&](RoleKind k) { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); };
    return has(a.kind) && has(b.kind);
  };
  return std::visit(
      detail::overloaded{
          [&](const HFamily&) {
            if (either(RoleKind::A)) return true;
            return a.kind == RoleKind::C && b.kind == RoleKind::C;
          },
          [&](const FFamily&) {
            using K = RoleKind;
            if (both_in({K::ApexX, K::ApexY, K::ApexZ})) return true;
            if (either(K::ApexZ)) return true;
            if (either(K::ApexX)) return both_in({K::ApexX, K::S, K::SSingle});
            if (either(K::ApexY)) return both_in({K::ApexY, K::T});
            return same_clique(a, b, K::S) || same_clique(a, b, K::T);
          },
          [&](const F1Family&) {
            if (either(RoleKind::ApexU) || either(RoleKind::ApexV)) return true;
            return same_clique(a, b, RoleKind::Cl) || same_clique(a, b, RoleKind::Big);
          },
          [&](const FVFamily&) {
            if (either(RoleKind::ApexU) || either(RoleKind::ApexV)) return true;
            return same_clique(a, b, RoleKind::Cl) || same_clique(a, b, RoleKind::Big);
          },
          [&](const K2Matching&) { return star_matching_adjacent(a, b); },
          [&](const K2StarMatching&) { return star_matching_adjacent(a, b); },
          [&](const K3Matching&) { return star_matching_adjacent(a, b); },
          [&](const K1Cliques&) {
            if (either(RoleKind::Apex)) return true;
            return same_clique(a, b, RoleKind::Cl) || same_clique(a, b, RoleKind::Big);
          },
          [&](const JoinedCenters&) {
            using K = RoleKind;
            if (a.kind == K::Apex && b.kind == K::Apex) return true;
            const Role* center = a.kind == K::Apex ? &a : b.kind == K::Apex ? &b : nullptr;
            if (center) {
              const Role& other = center == &a ? b : a;
              if (center->i == 0) return other.kind == K::S;
              return other.kind == K::T || other.kind == K::Single;
            }
            return same_clique(a, b, K::S) || same_clique(a, b, K::T);
          },
          [&](const K1Matching&) { return star_matching_adjacent(a, b); },
          [&](const K1StarMatching&) { return star_matching_adjacent(a, b); },
      },
      spec);
}

EmbeddingCheck check_embedding(const Graph& g, const Embedding& emb) {
  EmbeddingCheck out;
  try {
    validate(emb.spec);
  } catch (const InvalidParameters& e) {
    out.diagnostic = e.what();
    return out;
  }
  if (emb.roles.size() != static_cast<std::size_t>(g.order())) {
    out.diagnostic = "role map covers " + std::to_string(emb.roles.size()) + " of " +
                     std::to_string(g.order()) + " vertices";
    return out;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!role_in_host(emb.spec, emb.roles[v])) {
      out.diagnostic = "vertex " + std::to_string(v) + ": role " + format_role(emb.roles[v]) +
                       " is not a slot of " + describe(emb.spec);
      return out;
    }
  }
  std::vector<std::pair<Role, Vertex>> sorted;
  sorted.reserve(emb.roles.size());
  for (Vertex v = 0; v < g.order(); ++v) sorted.emplace_back(emb.roles[v], v);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].first == sorted[i - 1].first) {
      out.diagnostic = "vertices " + std::to_string(sorted[i - 1].second) + " and " +
                       std::to_string(sorted[i].second) + " share role " +
                       format_role(sorted[i].first);
      return out;
    }
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && !host_adjacent(emb.spec, emb.roles[u], emb.roles[v])) {
        out.diagnostic = "edge " + std::to_string(u) + " " + std::to_string(v) + " maps to " +
                         format_role(emb.roles[u]) + " / " + format_role(emb.roles[v]) +
                         ", not an edge of " + describe(emb.spec);
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

}  // namespace cyclestab
