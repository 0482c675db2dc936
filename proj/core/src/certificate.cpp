#include "cyclestab/certificate.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

#include <json.hpp>

#include "cyclestab/error.hpp"
#include "detail.hpp"

namespace cyclestab {

using json = nlohmann::ordered_json;

namespace {

json family_json(const FamilySpec& spec) {
  json f;
  f["kind"] = family_name(spec);
  std::visit(detail::overloaded{
                 [&](const HFamily& h) { f["n"] = h.n; f["ell"] = h.ell; f["a"] = h.a; },
                 [&](const FFamily& x) { f["s"] = x.s; f["t"] = x.t; f["k"] = x.k; },
                 [&](const F1Family& x) { f["t"] = x.t; f["k"] = x.k; },
                 [&](const FVFamily& x) { f["t"] = x.t; f["k"] = x.k; },
                 [&](const K2Matching& x) { f["t"] = x.t; },
                 [&](const K2StarMatching& x) { f["s"] = x.s; f["t"] = x.t; },
                 [&](const K3Matching& x) { f["t"] = x.t; },
                 [&](const K1Cliques& x) { f["t"] = x.t; f["k"] = x.k; },
                 [&](const JoinedCenters& x) { f["s"] = x.s; f["t"] = x.t; f["k"] = x.k; },
                 [&](const K1Matching& x) { f["t"] = x.t; },
                 [&](const K1StarMatching& x) { f["s"] = x.s; f["t"] = x.t; },
             },
             spec);
  return f;
}

json embedding_json(const char* kind, const Embedding& emb) {
  json e;
  e["kind"] = kind;
  e["family"] = family_json(emb.spec);
  json roles = json::object();
  for (std::size_t v = 0; v < emb.roles.size(); ++v) {
    roles[std::to_string(v)] = format_role(emb.roles[v]);
  }
  e["roles"] = std::move(roles);
  return e;
}

json evidence_json(const Evidence& ev) {
  return std::visit(
      detail::overloaded{
          [](const std::monostate&) { return json{{"kind", "none"}}; },
          [](const CycleWitness& c) { return json{{"kind", "cycle"}, {"vertices", c.cycle}}; },
          [](const PathWitness& p) { return json{{"kind", "path"}, {"vertices", p.path}}; },
          [](const Embedding& e) { return embedding_json("embedding", e); },
          [](const ApexEmbedding& e) { return embedding_json("apex-embedding", e.embedding); },
          [](const Separator& s) { return json{{"kind", "separator"}, {"vertices", s.vertices}}; },
      },
      ev);
}

[[noreturn]] void bad(const std::string& what) { throw ParseError(0, "certificate: " + what); }

void only_keys(const json& j, std::initializer_list<const char*> keys, const char* where) {
  if (!j.is_object()) bad(std::string(where) + " must be an object");
  for (const auto& [key, _] : j.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; })) {
      bad("unexpected key '" + key + "' in " + where);
    }
  }
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key '") + key + "'");
  return *it;
}

Vertex int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("'") + key + "' must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < INT32_MIN || x > INT32_MAX) bad(std::string("'") + key + "' out of range");
  return static_cast<Vertex>(x);
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) bad(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<Vertex> vertex_list(const json& j) {
  const json& v = field(j, "vertices");
  if (!v.is_array()) bad("'vertices' must be an array");
  std::vector<Vertex> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) bad("vertex ids must be integers");
    const auto id = x.get<std::int64_t>();
    if (id < INT32_MIN || id > INT32_MAX) bad("vertex id out of range");
    out.push_back(static_cast<Vertex>(id));
  }
  return out;
}

FamilySpec parse_family(const json& f) {
  const std::string kind = string_field(f, "kind");
  auto v = [&](const char* key) { return int_field(f, key); };
  if (kind == "H") {
    only_keys(f, {"kind", "n", "ell", "a"}, "family");
    return HFamily{v("n"), v("ell"), v("a")};
  }
  if (kind == "F") {
    only_keys(f, {"kind", "s", "t", "k"}, "family");
    return FFamily{v("s"), v("t"), v("k")};
  }
  if (kind == "F1" || kind == "FV" || kind == "K1TK") {
    only_keys(f, {"kind", "t", "k"}, "family");
    if (kind == "F1") return F1Family{v("t"), v("k")};
    if (kind == "FV") return FVFamily{v("t"), v("k")};
    return K1Cliques{v("t"), v("k")};
  }
  if (kind == "K2M" || kind == "K3M" || kind == "K1M") {
    only_keys(f, {"kind", "t"}, "family");
    if (kind == "K2M") return K2Matching{v("t")};
    if (kind == "K3M") return K3Matching{v("t")};
    return K1Matching{v("t")};
  }
  if (kind == "K2SM" || kind == "K1SM") {
    only_keys(f, {"kind", "s", "t"}, "family");
    if (kind == "K2SM") return K2StarMatching{v("s"), v("t")};
    return K1StarMatching{v("s"), v("t")};
  }
  if (kind == "JC") {
    only_keys(f, {"kind", "s", "t", "k"}, "family");
    return JoinedCenters{v("s"), v("t"), v("k")};
  }
  bad("unknown family kind '" + kind + "'");
}

Embedding parse_embedding(const json& e) {
  only_keys(e, {"kind", "family", "roles"}, "evidence");
  Embedding emb;
  emb.spec = parse_family(field(e, "family"));
  const json& roles = field(e, "roles");
  if (!roles.is_object()) bad("'roles' must be an object");
  emb.roles.assign(roles.size(), Role{});
  for (const auto& [key, value] : roles.items()) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty() || v < 0 || v >= static_cast<long long>(roles.size()) ||
        std::to_string(v) != key) {
      bad("role key '" + key + "' is not a vertex id in range");
    }
    if (!value.is_string()) bad("roles must be strings");
    emb.roles[v] = parse_role(value.get<std::string>());
  }
  return emb;
}

Problem parse_problem(const std::string& s) {
  if (s == "cycle") return Problem::Cycle;
  if (s == "min-circumference") return Problem::MinCircumference;
  if (s == "path") return Problem::Path;
  bad("unknown problem '" + s + "'");
}

// Bound on c(host) for hosts whose parameters fix k; otherwise for k.
Vertex host_cycle_bound(const FamilySpec& spec, Vertex k) {
  const Vertex own = std::visit(detail::overloaded{
                                    [](const FFamily& f) { return f.k; },
                                    [](const F1Family& f) { return f.k; },
                                    [](const FVFamily& f) { return f.k; },
                                    [](const K2Matching&) { return Vertex{3}; },
                                    [](const K2StarMatching&) { return Vertex{3}; },
                                    [](const K3Matching&) { return Vertex{4}; },
                                    [&](const auto&) { return k; },
                                },
                                spec);
  return max_cycle_bound(spec, own);
}

Vertex components_without(const Graph& g, const std::vector<Vertex>& removed) {
  std::vector<char> gone(g.order(), 0);
  for (Vertex v : removed) gone[v] = 1;
  std::vector<char> seen(g.order(), 0);
  Vertex count = 0;
  std::vector<Vertex> stack;
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

CertificateCheck reject(std::string why) { return {false, false, std::move(why)}; }

}  // namespace

std::string certificate_json(const Decision& d, int indent) {
  json j;
  j["version"] = kCertificateVersion;
  j["problem"] = to_string(d.problem);
  j["k"] = d.k;
  j["n"] = d.n;
  j["threshold"] = d.threshold;
  j["verdict"] = to_string(d.verdict);
  j["mode"] = to_string(d.mode);
  j["evidence"] = evidence_json(d.evidence);
  if (!d.source.empty()) j["source"] = d.source;
  j["work"] = d.work;
  return j.dump(indent);
}

Decision parse_certificate(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("certificate: invalid JSON: ") + e.what());
  }
  only_keys(j, {"version", "problem", "k", "n", "threshold", "verdict", "mode", "evidence",
                "source", "work"},
            "certificate");
  if (int_field(j, "version") != kCertificateVersion) bad("unsupported version");
  Decision d;
  d.problem = j.contains("problem") ? parse_problem(string_field(j, "problem")) : Problem::Cycle;
  d.k = int_field(j, "k");
  d.n = int_field(j, "n");
  d.threshold = int_field(j, "threshold");
  const std::string verdict = string_field(j, "verdict");
  if (verdict != "T0" && verdict != "T1") bad("verdict must be T0 or T1");
  d.verdict = verdict == "T1" ? Verdict::T1 : Verdict::T0;
  const std::string mode = string_field(j, "mode");
  if (mode != "fast" && mode != "exact") bad("mode must be fast or exact");
  d.mode = mode == "fast" ? Mode::Fast : Mode::Exact;
  if (j.contains("source")) d.source = string_field(j, "source");
  if (j.contains("work")) {
    if (!j["work"].is_number_unsigned()) bad("'work' must be a non-negative integer");
    d.work = j["work"].get<std::uint64_t>();
  }
  const json& ev = field(j, "evidence");
  const std::string kind = string_field(ev, "kind");
  if (kind == "none") {
    only_keys(ev, {"kind"}, "evidence");
  } else if (kind == "cycle" || kind == "path" || kind == "separator") {
    only_keys(ev, {"kind", "vertices"}, "evidence");
    auto vs = vertex_list(ev);
    if (kind == "cycle") d.evidence = CycleWitness{std::move(vs)};
    else if (kind == "path") d.evidence = PathWitness{std::move(vs)};
    else d.evidence = Separator{std::move(vs)};
  } else if (kind == "embedding") {
    d.evidence = parse_embedding(ev);
  } else if (kind == "apex-embedding") {
    d.evidence = ApexEmbedding{parse_embedding(ev)};
  } else {
    bad("unknown evidence kind '" + kind + "'");
  }
  return d;
}

CertificateCheck check_certificate(const Graph& g, const Decision& d) {
  const Vertex n = g.order();
  if (d.n != n) return reject("n = " + std::to_string(d.n) + " but the graph has " + std::to_string(n));
  if (d.k < 1) return reject("k must be >= 1");
  Vertex expected = 0;
  switch (d.problem) {
    case Problem::Cycle:
      expected = 2 * d.k + 2;
      break;
    case Problem::MinCircumference:
      if (n == 0 || degree_profile(g).min_degree != d.k) return reject("k is not the minimum degree");
      expected = std::min(2 * d.k + 2, n);
      break;
    case Problem::Path:
      expected = std::min(n, 2 * d.k + 3);
      break;
  }
  if (d.threshold != expected) {
    return reject("threshold " + std::to_string(d.threshold) + " should be " +
                  std::to_string(expected));
  }
  const bool path_problem = d.problem == Problem::Path;
  const bool t1 = d.verdict == Verdict::T1;
  std::string why;
  return std::visit(
      detail::overloaded{
          [&](const std::monostate&) { return CertificateCheck{true, false, {}}; },
          [&](const CycleWitness& c) {
            if (!t1 || path_problem) return reject("cycle evidence does not fit the verdict");
            if (!is_valid_cycle(g, c.cycle, &why)) return reject("invalid cycle: " + why);
            if (c.length() < d.threshold) return reject("cycle shorter than the threshold");
            return CertificateCheck{true, true, {}};
          },
          [&](const PathWitness& p) {
            if (!t1 || !path_problem) return reject("path evidence does not fit the verdict");
            if (!is_valid_path(g, p.path, &why)) return reject("invalid path: " + why);
            if (static_cast<Vertex>(p.path.size()) < d.threshold) {
              return reject("path shorter than the threshold");
            }
            return CertificateCheck{true, true, {}};
          },
          [&](const Embedding& e) {
            if (t1) return reject("embedding evidence with verdict T1");
            if (!path_problem && is_path_family(e.spec)) return reject("path family for a cycle problem");
            const auto ok = check_embedding(g, e);
            if (!ok) return reject("embedding: " + ok.diagnostic);
            try {
              const Vertex bound = path_problem ? max_path_order_bound(e.spec)
                                                : host_cycle_bound(e.spec, d.k);
              if (bound >= d.threshold) return reject("host bound does not rule out the threshold");
            } catch (const Error& err) {
              return reject(std::string("host bound: ") + err.what());
            }
            return CertificateCheck{true, true, {}};
          },
          [&](const ApexEmbedding& a) {
            if (t1 || !path_problem) return reject("apex embedding only certifies T0 paths");
            if (is_path_family(a.embedding.spec)) return reject("apex host must be a cycle family");
            const auto ok = check_embedding(with_apex(g), a.embedding);
            if (!ok) return reject("apex embedding: " + ok.diagnostic);
            try {
              // A path on p vertices plus the apex closes a cycle on p + 1.
              if (host_cycle_bound(a.embedding.spec, d.k + 1) - 1 >= d.threshold) {
                return reject("host bound does not rule out the threshold");
              }
            } catch (const Error& err) {
              return reject(std::string("host bound: ") + err.what());
            }
            return CertificateCheck{true, true, {}};
          },
          [&](const Separator& s) {
            if (t1 || !path_problem) return reject("separator only certifies T0 paths");
            if (d.threshold != n) return reject("separator certifies only Hamilton paths");
            std::set<Vertex> distinct;
            for (Vertex v : s.vertices) {
              if (v < 0 || v >= n) return reject("separator vertex out of range");
              if (!distinct.insert(v).second) return reject("separator vertex repeated");
            }
            const Vertex comps = components_without(g, s.vertices);
            if (comps < static_cast<Vertex>(s.vertices.size()) + 2) {
              return reject("removing the separator leaves only " + std::to_string(comps) +
                            " components");
            }
            return CertificateCheck{true, true, {}};
          },
      },
      d.evidence);
}

CertificateCheck check_certificate_text(const Graph& g, std::string_view text) {
  try {
    return check_certificate(g, parse_certificate(text));
  } catch (const Error& e) {
    return reject(e.what());
  }
}

std::string mutate_certificate(const Graph& g, std::string_view text, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  json j = json::parse(text);
  json& ev = j.at("evidence");
  const std::string kind = ev.at("kind").get<std::string>();
  if (kind == "none") throw PreconditionError("mutate_certificate: no evidence to corrupt");
  enum Kind { Byte, FlipVerdict, Threshold, Order, BadProblem, DropKey, Duplicate, Truncate, Roles, Family, OutOfRange };
  std::vector<Kind> options{Byte, FlipVerdict, Threshold, Order, BadProblem, DropKey};
  const bool listy = kind == "cycle" || kind == "path" || kind == "separator";
  if (listy) {
    if (ev.at("vertices").size() >= 2) options.push_back(Duplicate);
    if (kind != "separator") options.push_back(Truncate);
    options.push_back(OutOfRange);
  } else {
    if (ev.at("roles").size() >= 2) options.push_back(Roles);
    options.push_back(Family);
  }
  auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
  switch (options[pick(options.size())]) {
    case Byte: {
      // Unescaped control characters are invalid anywhere in JSON.
      std::string s(text);
      std::vector<std::size_t> spots;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!std::isspace(static_cast<unsigned char>(s[i]))) spots.push_back(i);
      }
      s[spots[pick(spots.size())]] = static_cast<char>(1 + pick(8));
      return s;
    }
    case FlipVerdict:
      j["verdict"] = j["verdict"] == "T1" ? "T0" : "T1";
      break;
    case Threshold:
      j["threshold"] = j["threshold"].get<Vertex>() + 1 + static_cast<Vertex>(pick(3));
      break;
    case Order:
      j["n"] = g.order() + 1 + static_cast<Vertex>(pick(3));
      break;
    case BadProblem:
      j["problem"] = "circumference";
      break;
    case DropKey: {
      static const char* keys[] = {"version", "k", "n", "threshold", "verdict", "mode", "evidence"};
      j.erase(keys[pick(7)]);
      break;
    }
    case Duplicate: {
      auto& vs = ev["vertices"];
      const std::size_t a = pick(vs.size());
      std::size_t b = pick(vs.size() - 1);
      if (b >= a) ++b;
      vs[a] = vs[b];
      break;
    }
    case Truncate: {
      auto& vs = ev["vertices"];
      const auto keep = std::min<std::size_t>(vs.size() - 1, j["threshold"].get<std::size_t>() - 1);
      vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(keep), vs.end());
      break;
    }
    case OutOfRange: {
      auto& vs = ev["vertices"];
      vs[pick(vs.size())] = g.order() + static_cast<Vertex>(pick(5));
      break;
    }
    case Roles: {
      auto& roles = ev["roles"];
      const std::size_t a = pick(roles.size());
      std::size_t b = pick(roles.size() - 1);
      if (b >= a) ++b;
      roles[std::to_string(a)] = roles[std::to_string(b)];
      break;
    }
    case Family:
      ev["family"]["kind"] = "X" + ev["family"]["kind"].get<std::string>();
      break;
  }
  return j.dump(2);
}

}  // namespace cyclestab
