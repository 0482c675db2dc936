#include "cyclestab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <json.hpp>
#include <random>
#include <thread>

#include "cyclestab/certificate.hpp"
#include "cyclestab/decide.hpp"
#include "cyclestab/error.hpp"
#include "cyclestab/families.hpp"
#include "cyclestab/longcycle.hpp"
#include "cyclestab/oracle.hpp"
#include "cyclestab/pathver.hpp"
#include "cyclestab/recognize.hpp"

namespace cyclestab::harness {
namespace {

using json = nlohmann::ordered_json;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) { return mix(a ^ mix(b)); }

// Sample indices live above every enumeration key.
constexpr std::uint64_t kSampleBit = std::uint64_t{1} << 63;

struct Partial {
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
  std::vector<Violation> notes;
  std::map<std::string, std::uint64_t> counters;
};

bool injected_fault(const CampaignConfig& cfg, std::uint64_t key, Vertex n, Vertex k) {
  if (cfg.fault_period == 0) return false;
  const std::uint64_t h = mix(mix(key, cfg.seed), (std::uint64_t(n) << 32) | std::uint64_t(k));
  return h % cfg.fault_period == 0;
}

bool violation_less(const Violation& a, const Violation& b) {
  return std::tie(a.key, a.k, a.graph, a.detail, a.injected) <
         std::tie(b.key, b.k, b.graph, b.detail, b.injected);
}

using Body = std::function<void(unsigned shard, unsigned shards, Partial&)>;

void run_sharded(unsigned jobs, const Body& body, VerificationReport& report) {
  jobs = std::max(1u, jobs);
  std::vector<Partial> parts(jobs);
  if (jobs == 1) {
    body(0, 1, parts[0]);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back([&, j] {
        try {
          body(j, jobs, parts[j]);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  for (auto& p : parts) {
    report.instances_checked += p.checked;
    report.violations.insert(report.violations.end(), p.violations.begin(), p.violations.end());
    report.notes.insert(report.notes.end(), p.notes.begin(), p.notes.end());
    for (const auto& [name, value] : p.counters) report.counters[name] += value;
  }
  std::sort(report.violations.begin(), report.violations.end(), violation_less);
  std::sort(report.notes.begin(), report.notes.end(), violation_less);
}

VerificationReport start(const std::string& name, const CampaignConfig& cfg) {
  VerificationReport r;
  r.campaign = name;
  r.seed = cfg.seed;
  r.parameters = {{"n_min", std::to_string(cfg.n_min)},
                  {"n_max", std::to_string(cfg.n_max)},
                  {"k_min", std::to_string(cfg.k_min)},
                  {"k_max", std::to_string(cfg.k_max)},
                  {"all_k", cfg.all_k ? "true" : "false"},
                  {"samples", std::to_string(cfg.samples)},
                  {"sample_n_min", std::to_string(cfg.sample_n_min)},
                  {"sample_n_max", std::to_string(cfg.sample_n_max)},
                  {"samples_only", cfg.samples_only ? "true" : "false"},
                  {"fault_period", std::to_string(cfg.fault_period)}};
  return r;
}

class Timer {
 public:
  Timer() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

// Labeled sweep for n <= 7, degree-sorted representatives above.
void sweep(Vertex n, const GraphFilter& filter, Vertex sorted_from, unsigned shard, unsigned shards,
           const std::function<void(std::uint64_t, const Graph&)>& visit) {
  if (n <= 7) {
    for_each_graph(n, filter, visit, shard, shards);
  } else {
    for_each_sorted_graph(n, sorted_from, filter, visit, shard, shards);
  }
}

Violation make_violation(std::uint64_t key, Vertex k, const Graph& g, std::string detail,
                         bool injected = false) {
  return Violation{key, k, serialize_edge_list(g), std::move(detail), injected};
}

const char* verdict_name(bool t1) { return t1 ? "T1" : "T0"; }

std::string evidence_kind(const Evidence& ev) {
  return std::visit(
      [](const auto& e) -> std::string {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, std::monostate>) return "none";
        else if constexpr (std::is_same_v<E, CycleWitness>) return "cycle";
        else if constexpr (std::is_same_v<E, PathWitness>) return "path";
        else if constexpr (std::is_same_v<E, Embedding>) return "embedding";
        else if constexpr (std::is_same_v<E, ApexEmbedding>) return "apex-embedding";
        else return "separator";
      },
      ev);
}

DecideOptions verdict_only() {
  DecideOptions o;
  o.want_witness = false;
  return o;
}

// Shared verdict check: decided vs truth, then T0 evidence validation.
void judge(const Graph& g, const Decision& d, bool truth, std::uint64_t key,
           const CampaignConfig& cfg, const std::string& label, const std::string& oracle_text,
           Partial& out) {
  const bool injected = injected_fault(cfg, key, g.order(), d.k);
  bool got = d.verdict == Verdict::T1;
  if (injected) got = !got;
  ++out.checked;
  ++out.counters[truth ? "T1" : "T0"];
  if (got != truth) {
    out.violations.push_back(make_violation(
        key, d.k, g, label + " " + verdict_name(got) + " but oracle " + oracle_text, injected));
    return;
  }
  if (d.verdict == Verdict::T0) {
    const auto c = check_certificate(g, d);
    if (!c.ok) {
      out.violations.push_back(make_violation(key, d.k, g, "T0 evidence rejected: " + c.diagnostic));
    } else if (c.evidence_checked) {
      ++out.counters["T0_evidence_checked"];
    }
  }
}

void cycle_instance(const Graph& g, Vertex k, Vertex c, std::uint64_t key,
                    const CampaignConfig& cfg, Partial& out) {
  const Decision d = decide_exact(g, k, verdict_only());
  judge(g, d, c >= 2 * k + 2, key, cfg, "decide_exact", "c = " + std::to_string(c), out);
}

std::vector<Vertex> admissible_ks(const Graph& g, const CampaignConfig& cfg) {
  std::vector<Vertex> ks;
  const auto prof = degree_profile(g);
  if (!prof.second_min_degree) return ks;
  const Vertex top = *prof.second_min_degree;
  const Vertex lo = cfg.all_k ? std::max<Vertex>(2, cfg.k_min) : top;
  for (Vertex k = lo; k <= top; ++k) {
    if (k < std::max<Vertex>(2, cfg.k_min)) continue;
    if (cfg.k_max && k > cfg.k_max) continue;
    if (g.order() < 2 * k + 2) continue;
    ks.push_back(k);
  }
  return ks;
}

struct Sample {
  Vertex n = 0, k = 0;
  Graph g;
};

// n in [n_lo, n_hi] and k in [2, (n - extra) / 2], graph under the preconditions.
Sample draw(const CampaignConfig& cfg, std::uint64_t index, Vertex n_lo, Vertex n_hi, Vertex extra,
            Vertex k_lo = 2, Vertex k_hi = 0) {
  std::mt19937_64 rng(mix(cfg.seed, index));
  Sample s;
  s.n = n_lo + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n_hi - n_lo + 1));
  Vertex top = (s.n - extra) / 2;
  if (k_hi) top = std::min(top, k_hi);
  s.k = k_lo + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(top - k_lo + 1));
  s.g = random_graph_under_preconditions(s.n, s.k, rng());
  return s;
}

void require_range(Vertex lo, Vertex hi, const char* what) {
  if (lo > hi) throw InvalidParameters(std::string("empty range for ") + what);
}

}  // namespace

std::string VerificationReport::to_json(bool include_wall_time) const {
  json j;
  j["campaign"] = campaign;
  j["seed"] = seed;
  j["parameters"] = parameters;
  j["instances_checked"] = instances_checked;
  j["pass"] = pass();
  auto list = [](const std::vector<Violation>& vs) {
    json arr = json::array();
    for (const auto& v : vs) {
      arr.push_back({{"key", v.key},
                     {"k", v.k},
                     {"graph", v.graph},
                     {"detail", v.detail},
                     {"injected", v.injected}});
    }
    return arr;
  };
  j["violations"] = list(violations);
  j["notes"] = list(notes);
  j["counters"] = counters;
  if (include_wall_time) j["wall_time"] = wall_time;
  return j.dump(2);
}

// Cycle decision --------------------------------------------------------------

VerificationReport check_theorem_1_6(const CampaignConfig& cfg) {
  Timer timer;
  auto report = start("theorem16", cfg);
  if (cfg.n_max > kMaxEnumerationOrder && !cfg.samples_only) {
    throw InvalidParameters("theorem16: exhaustive sweep supports n <= 8");
  }
  run_sharded(cfg.jobs, [&](unsigned shard, unsigned shards, Partial& out) {
    if (!cfg.samples_only) {
      GraphFilter filter;
      filter.biconnected = true;
      for (Vertex n = std::max<Vertex>(cfg.n_min, 6); n <= cfg.n_max; ++n) {
        sweep(n, filter, 0, shard, shards, [&](std::uint64_t key, const Graph& g) {
          const auto ks = admissible_ks(g, cfg);
          if (ks.empty()) return;
          const Vertex c = oracle::circumference(g).length;
          for (Vertex k : ks) cycle_instance(g, k, c, key, cfg, out);
        });
      }
    }
    const Vertex lo = std::max<Vertex>(cfg.sample_n_min, 6);
    for (std::uint64_t i = shard; i < cfg.samples; i += shards) {
      require_range(lo, cfg.sample_n_max, "sample n");
      const Sample s = draw(cfg, i, lo, cfg.sample_n_max, 2);
      const Vertex c = oracle::circumference(s.g).length;
      cycle_instance(s.g, s.k, c, kSampleBit | i, cfg, out);
    }
  }, report);
  report.wall_time = timer.seconds();
  return report;
}

// u-v path lemma --------------------------------------------------------------

LemmaConclusion lemma_2_3_conclusion(const Graph& g, Vertex u, Vertex v, Vertex k) {
  const Vertex n = g.order();
  if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
    throw InvalidParameters("lemma_2_3_conclusion: u and v must be distinct vertices");
  }
  if (k < 3) throw InvalidParameters("lemma_2_3_conclusion: k must be >= 3");
  LemmaConclusion out;
  std::vector<Vertex> rest;
  std::optional<Vertex> w;
  for (Vertex x = 0; x < n; ++x) {
    if (x == u || x == v) continue;
    rest.push_back(x);
    if (g.degree(x) < k) {
      if (w) {
        out.detail = "degree hypothesis fails: two vertices besides u, v have degree < k";
        return out;
      }
      w = x;
    }
  }
  const auto sub = induced(g, rest);
  Vertex count = 0;
  const auto label = component_labels(sub.graph, &count);
  std::vector<Vertex> size(count, 0);
  std::vector<std::size_t> edges(count, 0);
  for (Vertex x = 0; x < sub.graph.order(); ++x) {
    ++size[label[x]];
    edges[label[x]] += sub.graph.degree(x);
  }
  Vertex singles = 0;
  for (Vertex c = 0; c < count; ++c) {
    const std::size_t s = static_cast<std::size_t>(size[c]);
    if (edges[c] != s * (s - 1)) {
      out.detail = "component of order " + std::to_string(s) + " is not complete";
      return out;
    }
    if (s == 1) {
      ++singles;
    } else if (size[c] == k - 1) {
      ++out.ell;
    } else {
      out.detail = "component of order " + std::to_string(s) + ", expected " +
                   std::to_string(k - 1) + " or 1";
      return out;
    }
  }
  if (singles > 1) {
    out.detail = std::to_string(singles) + " isolated vertices in G - {u, v}";
    return out;
  }
  out.has_single = singles == 1;
  for (Vertex x : rest) {
    if (w && x == *w) continue;
    if (!g.adjacent(u, x) || !g.adjacent(v, x)) {
      out.detail = "vertex " + std::to_string(x) + " is not adjacent to both u and v";
      return out;
    }
  }
  out.holds = true;
  return out;
}

VerificationReport check_lemma_2_3(const CampaignConfig& cfg) {
  Timer timer;
  auto report = start("lemma23", cfg);
  if (cfg.n_max > kMaxEnumerationOrder) throw InvalidParameters("lemma23: n <= 8");
  const Vertex k_lo = std::max<Vertex>(3, cfg.k_min);
  const Vertex k_hi = cfg.k_max ? cfg.k_max : 4;
  run_sharded(cfg.jobs, [&](unsigned shard, unsigned shards, Partial& out) {
    for (Vertex k = k_lo; k <= k_hi; ++k) {
      GraphFilter filter;
      filter.biconnected = true;
      filter.degree_k = k;
      filter.degree_exempt = 2;
      for (Vertex n = std::max<Vertex>(cfg.n_min, 3); n <= cfg.n_max; ++n) {
        for_each_sorted_graph(n, 2, filter, [&](std::uint64_t key, const Graph& g) {
          ++out.checked;
          const Vertex lp = oracle::longest_uv_path_order(g, 0, 1).order;
          if (lp > k + 1) return;
          ++out.counters["hypothesis_met"];
          const bool injected = injected_fault(cfg, key, n, k);
          auto c = lemma_2_3_conclusion(g, 0, 1, k);
          if (injected) {
            c.holds = !c.holds;
            if (c.detail.empty()) c.detail = "injected fault";
          }
          if (!c.holds) {
            out.violations.push_back(make_violation(key, k, g, c.detail, injected));
            return;
          }
          if (c.ell == 0) {
            ++out.counters["ell_zero"];
            out.notes.push_back(make_violation(key, k, g, "conclusion holds with l = 0"));
          }
        }, shard, shards);
      }
    }
  }, report);
  report.parameters["k_max"] = std::to_string(k_hi);
  report.wall_time = timer.seconds();
  return report;
}

// Path decision ---------------------------------------------------------------

VerificationReport check_theorem_3_3(const CampaignConfig& cfg) {
  Timer timer;
  auto report = start("theorem33", cfg);
  if (cfg.n_max > kMaxEnumerationOrder) throw InvalidParameters("theorem33: n <= 8");
  const Vertex k_lo = std::max<Vertex>(1, cfg.k_min);
  const Vertex k_hi = cfg.k_max ? cfg.k_max : 3;
  run_sharded(cfg.jobs, [&](unsigned shard, unsigned shards, Partial& out) {
    for (Vertex k = k_lo; k <= k_hi; ++k) {
      GraphFilter filter;
      filter.connected = true;
      filter.degree_k = k;
      for (Vertex n = std::max<Vertex>(cfg.n_min, 2); n <= cfg.n_max; ++n) {
        sweep(n, filter, 0, shard, shards, [&](std::uint64_t key, const Graph& g) {
          const Vertex lp = oracle::longest_path_order(g).order;
          const Vertex threshold = std::min<Vertex>(n, 2 * k + 3);
          const Decision d = decide_path(g, k, verdict_only());
          const std::size_t before = out.violations.size();
          judge(g, d, lp >= threshold, key, cfg, "decide_path",
                "longest path = " + std::to_string(lp), out);
          if (out.violations.size() != before || d.verdict != Verdict::T0) return;
          if (std::holds_alternative<Embedding>(d.evidence)) {
            ++out.counters["T0_matched"];
          } else {
            ++out.counters["T0_unmatched"];
            out.notes.push_back(make_violation(
                key, k, g, "T0 outside the path-family catalog; evidence " + evidence_kind(d.evidence)));
          }
        });
      }
    }
  }, report);
  report.parameters["k_max"] = std::to_string(k_hi);
  report.wall_time = timer.seconds();
  return report;
}

// Minimum-degree circumference ------------------------------------------------

namespace {

void min_circ_instance(const Graph& g, std::uint64_t key, const CampaignConfig& cfg, Partial& out) {
  const Vertex c = oracle::circumference(g).length;
  const Decision d = solve_min_circumference(g, verdict_only());
  const Vertex delta = degree_profile(g).min_degree;
  const Vertex target = std::min<Vertex>(2 * delta + 2, g.order());
  if (g.order() == 2 * delta + 1) ++out.counters["hamiltonicity_boundary"];
  judge(g, d, c >= target, key, cfg, "solve_min_circumference", "c = " + std::to_string(c), out);
}

}  // namespace

VerificationReport check_min_circumference(const CampaignConfig& cfg) {
  Timer timer;
  auto report = start("mincirc", cfg);
  if (cfg.n_max > kMaxEnumerationOrder && !cfg.samples_only) {
    throw InvalidParameters("mincirc: exhaustive sweep supports n <= 8");
  }
  run_sharded(cfg.jobs, [&](unsigned shard, unsigned shards, Partial& out) {
    if (!cfg.samples_only) {
      GraphFilter filter;
      filter.biconnected = true;
      for (Vertex n = std::max<Vertex>(cfg.n_min, 3); n <= cfg.n_max; ++n) {
        sweep(n, filter, 0, shard, shards,
              [&](std::uint64_t key, const Graph& g) { min_circ_instance(g, key, cfg, out); });
      }
    }
    const Vertex lo = std::max<Vertex>(cfg.sample_n_min, 5);
    for (std::uint64_t i = shard; i < cfg.samples; i += shards) {
      require_range(lo, cfg.sample_n_max, "sample n");
      const Sample s = draw(cfg, i, lo, cfg.sample_n_max, 1);
      min_circ_instance(s.g, kSampleBit | i, cfg, out);
    }
  }, report);
  report.wall_time = timer.seconds();
  return report;
}

// Fast vs exact ---------------------------------------------------------------

namespace {

std::vector<FamilySpec> fast_family_members(Vertex k) {
  std::vector<FamilySpec> specs;
  for (Vertex n = 2 * k + 2; n <= 2 * k + 12; ++n) specs.push_back(HFamily{n, 2 * k + 2, k});
  for (Vertex s = 1; s <= 3; ++s) {
    for (Vertex t = 1; t <= 3; ++t) specs.push_back(FFamily{s, t, k});
  }
  for (Vertex t = 1; t <= 3; ++t) {
    specs.push_back(F1Family{t, k});
    specs.push_back(FVFamily{t, k});
  }
  return specs;
}

bool admissible(const Graph& g, Vertex k) {
  const auto r = check_preconditions(g, k);
  return r.biconnected && r.degree_condition() && g.order() >= 2 * k + 2;
}

void fast_instance(const Graph& g, Vertex k, std::uint64_t key, const CampaignConfig& cfg,
                   const std::string& origin, Partial& out) {
  const Decision fast = decide_fast(g, k);
  const Decision exact = decide_exact(g, k, verdict_only());
  const bool injected = injected_fault(cfg, key, g.order(), k);
  bool fast_t1 = fast.verdict == Verdict::T1;
  if (injected) fast_t1 = !fast_t1;
  ++out.checked;
  ++out.counters[std::string("fast_") + verdict_name(fast_t1)];
  if (fast_t1 != (exact.verdict == Verdict::T1)) {
    out.violations.push_back(make_violation(key, k, g,
                                            origin + ": decide_fast " + verdict_name(fast_t1) +
                                                ", decide_exact " + to_string(exact.verdict),
                                            injected));
    return;
  }
  if (fast.verdict == Verdict::T0) {
    const auto c = check_certificate(g, fast);
    if (!c.ok) out.violations.push_back(make_violation(key, k, g, "fast T0 evidence: " + c.diagnostic));
  }
}

}  // namespace

VerificationReport check_fast_exact(const CampaignConfig& cfg) {
  Timer timer;
  auto report = start("fastexact", cfg);
  const Vertex k_lo = std::max<Vertex>(5, cfg.k_min);
  const Vertex k_hi = cfg.k_max ? cfg.k_max : 6;
  report.parameters["k_max"] = std::to_string(k_hi);
  report.parameters["per_family"] = std::to_string(cfg.per_family);
  // Family members get keys (k, member, copy); copy 0 is the member itself.
  std::vector<std::tuple<Vertex, std::size_t, FamilySpec>> members;
  for (Vertex k = k_lo; k <= k_hi; ++k) {
    const auto specs = fast_family_members(k);
    for (std::size_t i = 0; i < specs.size(); ++i) members.emplace_back(k, i, specs[i]);
  }
  run_sharded(cfg.jobs, [&](unsigned shard, unsigned shards, Partial& out) {
    if (!cfg.samples_only) {
      std::uint64_t slot = 0;
      for (const auto& [k, idx, spec] : members) {
        const Graph host = build_family(spec).graph;
        if (!admissible(host, k)) {
          if (slot++ % shards == shard) ++out.counters["members_skipped"];
          continue;
        }
        for (std::uint64_t copy = 0; copy <= cfg.per_family; ++copy) {
          if (slot++ % shards != shard) continue;
          const std::uint64_t key = (std::uint64_t(k) << 48) | (std::uint64_t(idx) << 32) | copy;
          if (copy == 0) {
            fast_instance(host, k, key, cfg, describe(spec), out);
            continue;
          }
          std::mt19937_64 rng(mix(cfg.seed, key));
          const Vertex count = 1 + static_cast<Vertex>(rng() % 6);
          const Graph sub = delete_random_edges(host, k, count, rng());
          fast_instance(sub, k, key, cfg, describe(spec) + " minus edges", out);
        }
      }
    }
    for (std::uint64_t i = shard; i < cfg.samples; i += shards) {
      std::mt19937_64 rng(mix(cfg.seed ^ 0xFA57, i));
      const Vertex k = k_lo + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(k_hi - k_lo + 1));
      const Vertex n_lo = 2 * k + 2;
      const Vertex n_hi = std::max<Vertex>(n_lo, std::min<Vertex>(cfg.sample_n_max, 30));
      const Vertex n = n_lo + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n_hi - n_lo + 1));
      const Graph g = random_graph_under_preconditions(n, k, rng());
      fast_instance(g, k, kSampleBit | i, cfg, "random", out);
    }
  }, report);
  report.wall_time = timer.seconds();
  return report;
}

// Family bounds ---------------------------------------------------------------

VerificationReport check_family_bounds(const CampaignConfig& cfg) {
  Timer timer;
  auto report = start("families", cfg);
  const Vertex order_cap = 16;
  struct Item {
    FamilySpec spec;
    Vertex k;
    bool exact;
  };
  std::vector<Item> items;
  auto add = [&](FamilySpec spec, Vertex k, bool exact) {
    try {
      validate(spec);
    } catch (const Error&) {
      return;
    }
    if (host_order(spec) <= order_cap) items.push_back({std::move(spec), k, exact});
  };
  const Vertex k_lo = std::max<Vertex>(2, cfg.k_min);
  const Vertex k_hi = cfg.k_max ? cfg.k_max : 6;
  for (Vertex k = k_lo; k <= k_hi; ++k) {
    for (Vertex n = 2 * k + 2; n <= order_cap; ++n) add(HFamily{n, 2 * k + 2, k}, k, true);
    add(HFamily{2 * k + 1, 2 * k + 1, k}, k, true);
    for (Vertex s = 1; s <= 3; ++s) {
      for (Vertex t = 1; t <= 3; ++t) add(FFamily{s, t, k}, k, true);
    }
    for (Vertex t = 1; t <= 3; ++t) {
      add(F1Family{t, k}, k, true);
      add(FVFamily{t, k}, k, true);
    }
  }
  for (Vertex t = 1; t <= order_cap; ++t) {
    if (k_lo <= 3 && 3 <= k_hi) add(K2Matching{t}, 3, false);
    if (k_lo <= 4 && 4 <= k_hi) add(K3Matching{t}, 4, false);
    for (Vertex s = 1; s <= 3; ++s) {
      if (k_lo <= 3 && 3 <= k_hi) add(K2StarMatching{s, t}, 3, false);
    }
  }
  report.parameters["k_max"] = std::to_string(k_hi);
  run_sharded(cfg.jobs, [&](unsigned shard, unsigned shards, Partial& out) {
    for (std::size_t i = shard; i < items.size(); i += shards) {
      const auto& item = items[i];
      const Graph g = build_family(item.spec).graph;
      const Vertex c = oracle::circumference(g).length;
      const Vertex bound = max_cycle_bound(item.spec, item.k);
      const bool injected = injected_fault(cfg, i, g.order(), item.k);
      const bool ok = (item.exact ? c == bound : c <= bound) != injected;
      ++out.checked;
      ++out.counters[item.exact ? "exact_checked" : "sporadic_checked"];
      if (!item.exact && c == bound) ++out.counters["sporadic_tight"];
      if (!ok) {
        out.violations.push_back(make_violation(
            i, item.k, g,
            describe(item.spec) + ": c = " + std::to_string(c) + ", bound " + std::to_string(bound),
            injected));
      }
    }
  }, report);
  report.wall_time = timer.seconds();
  return report;
}

// Witness soundness -----------------------------------------------------------

namespace {

struct CorpusEntry {
  Graph g;
  std::string text;
  bool has_evidence = false;
};

Graph random_connected_for_path(const CampaignConfig& cfg, std::uint64_t i, Vertex& k) {
  std::mt19937_64 rng(mix(cfg.seed ^ 0x9A7B, i));
  k = 2 + static_cast<Vertex>(rng() % 2);
  const Vertex n = 2 * k + 1 + static_cast<Vertex>(rng() % 8);
  return random_graph_under_preconditions(n, k, rng());
}

}  // namespace

VerificationReport check_witness_soundness(const CampaignConfig& cfg) {
  Timer timer;
  auto report = start("witness", cfg);
  std::vector<CorpusEntry> corpus;
  Partial emit;
  auto record = [&](const Graph& g, const Decision& d, std::uint64_t key) {
    const std::string text = certificate_json(d);
    const auto c = check_certificate_text(g, text);
    ++emit.checked;
    ++emit.counters["certificates"];
    ++emit.counters["evidence_" + evidence_kind(d.evidence)];
    if (c.evidence_checked) ++emit.counters["evidence_checked"];
    if (!c.ok) emit.violations.push_back(make_violation(key, d.k, g, "emitted certificate rejected: " + c.diagnostic));
    corpus.push_back({g, text, !std::holds_alternative<std::monostate>(d.evidence)});
  };
  const Vertex lo = std::max<Vertex>(cfg.sample_n_min, 6);
  const Vertex hi = std::max<Vertex>(lo, std::min<Vertex>(cfg.sample_n_max, 14));
  const std::uint64_t instances = 300;
  for (std::uint64_t i = 0; i < instances; ++i) {
    const Sample s = draw(cfg, i, lo, hi, 2);
    record(s.g, certify(s.g, s.k, true, ModeChoice::Exact), i);
    record(s.g, solve_min_circumference(s.g), i);
    Vertex pk = 0;
    const Graph pg = random_connected_for_path(cfg, i, pk);
    record(pg, decide_path(pg, pk), i);
  }
  std::uint64_t key = instances;
  for (Vertex k = 2; k <= 6; ++k) {
    std::vector<FamilySpec> specs = {HFamily{2 * k + 2, 2 * k + 2, k}, HFamily{2 * k + 5, 2 * k + 2, k},
                                     FFamily{1, 2, k}, FFamily{2, 1, k}, F1Family{2, k},
                                     FVFamily{2, k}};
    if (k >= 5) specs.push_back(HFamily{2 * k + 8, 2 * k + 2, k});
    for (const auto& spec : specs) {
      const Graph g = build_family(spec).graph;
      ++key;
      if (!admissible(g, k)) continue;
      record(g, certify(g, k, true, ModeChoice::Exact), key);
      if (k >= 5) record(g, certify(g, k, true, ModeChoice::Fast), key);
    }
    for (const FamilySpec& spec : {FamilySpec{K1Cliques{2, k}}, FamilySpec{JoinedCenters{1, 2, k}}}) {
      const Graph g = build_family(spec).graph;
      ++key;
      if (!is_connected(g) || !check_preconditions(g, k).degree_condition()) continue;
      record(g, decide_path(g, k), key);
    }
  }
  std::vector<std::size_t> fuzzable;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].has_evidence) fuzzable.push_back(i);
  }
  if (cfg.samples && fuzzable.empty()) throw Error("witness: no certificate with evidence to fuzz");
  report.parameters["corpus"] = std::to_string(corpus.size());
  run_sharded(cfg.jobs, [&](unsigned shard, unsigned shards, Partial& out) {
    if (shard == 0) out = emit;
    for (std::uint64_t i = shard; i < cfg.samples; i += shards) {
      const auto& entry = corpus[fuzzable[i % fuzzable.size()]];
      const std::string mutated = mutate_certificate(entry.g, entry.text, mix(cfg.seed, i));
      bool accepted = false;
      try {
        accepted = check_certificate_text(entry.g, mutated).ok;
      } catch (const Error&) {
        accepted = false;
      }
      const bool injected = injected_fault(cfg, kSampleBit | i, entry.g.order(), 0);
      if (injected) accepted = !accepted;
      ++out.checked;
      ++out.counters["mutations"];
      if (accepted) {
        out.violations.push_back(
            make_violation(kSampleBit | i, 0, entry.g, "mutated certificate accepted: " + mutated, injected));
      } else {
        ++out.counters["mutations_rejected"];
      }
    }
  }, report);
  report.wall_time = timer.seconds();
  return report;
}

// find_long_cycle completeness ------------------------------------------------

VerificationReport check_find_long_cycle(const CampaignConfig& cfg) {
  Timer timer;
  auto report = start("longcycle", cfg);
  const Vertex lo = std::max<Vertex>(cfg.sample_n_min, 6);
  const Vertex hi = std::min<Vertex>(cfg.sample_n_max, 12);
  require_range(lo, hi, "sample n");
  run_sharded(cfg.jobs, [&](unsigned shard, unsigned shards, Partial& out) {
    for (std::uint64_t i = shard; i < cfg.samples; i += shards) {
      const Sample s = draw(cfg, i, lo, hi, 2);
      const Vertex L = 2 * s.k + 2;
      ++out.checked;
      if (oracle::circumference(s.g).length < L) continue;
      ++out.counters["eligible"];
      const auto w = find_long_cycle(s.g, L);
      if (!w) continue;
      std::string why;
      if (!is_valid_cycle(s.g, w->cycle, &why) || w->length() < L) {
        out.violations.push_back(make_violation(kSampleBit | i, s.k, s.g, "invalid witness: " + why));
        continue;
      }
      ++out.counters["found"];
    }
  }, report);
  const auto eligible = report.counters["eligible"];
  report.counters["rate_ppm"] = eligible ? report.counters["found"] * 1'000'000 / eligible : 1'000'000;
  report.wall_time = timer.seconds();
  return report;
}

VerificationReport run_campaign(const std::string& name, const CampaignConfig& cfg) {
  if (name == "theorem16") return check_theorem_1_6(cfg);
  if (name == "lemma23") return check_lemma_2_3(cfg);
  if (name == "theorem33") return check_theorem_3_3(cfg);
  if (name == "mincirc") return check_min_circumference(cfg);
  if (name == "fastexact") return check_fast_exact(cfg);
  if (name == "families") return check_family_bounds(cfg);
  if (name == "witness") return check_witness_soundness(cfg);
  if (name == "longcycle") return check_find_long_cycle(cfg);
  throw InvalidParameters("unknown campaign '" + name + "'");
}

bool replay_violation(const std::string& campaign, const Violation& v) {
  const Graph g = parse_edge_list(v.graph);
  const Vertex k = v.k;
  if (campaign == "theorem16") {
    const Decision d = decide_exact(g, k, verdict_only());
    const bool truth = oracle::circumference(g).length >= 2 * k + 2;
    return (d.verdict == Verdict::T1) != truth ||
           (d.verdict == Verdict::T0 && !check_certificate(g, d).ok);
  }
  if (campaign == "theorem33") {
    const Decision d = decide_path(g, k, verdict_only());
    const bool truth = oracle::longest_path_order(g).order >= std::min<Vertex>(g.order(), 2 * k + 3);
    return (d.verdict == Verdict::T1) != truth ||
           (d.verdict == Verdict::T0 && !check_certificate(g, d).ok);
  }
  if (campaign == "mincirc") {
    const Decision d = solve_min_circumference(g, verdict_only());
    const Vertex delta = degree_profile(g).min_degree;
    const bool truth = oracle::circumference(g).length >= std::min<Vertex>(2 * delta + 2, g.order());
    return (d.verdict == Verdict::T1) != truth;
  }
  if (campaign == "lemma23") {
    return oracle::longest_uv_path_order(g, 0, 1).order <= k + 1 &&
           !lemma_2_3_conclusion(g, 0, 1, k).holds;
  }
  if (campaign == "fastexact") {
    return decide_fast(g, k).verdict != decide_exact(g, k, verdict_only()).verdict;
  }
  throw InvalidParameters("replay not supported for campaign '" + campaign + "'");
}

}  // namespace cyclestab::harness
