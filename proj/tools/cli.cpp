#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "cyclestab/certificate.hpp"
#include "cyclestab/decide.hpp"
#include "cyclestab/error.hpp"
#include "cyclestab/families.hpp"
#include "cyclestab/graphs.hpp"
#include "cyclestab/harness.hpp"
#include "cyclestab/oracle.hpp"
#include "cyclestab/pathver.hpp"
#include "cyclestab/turan.hpp"

namespace cyclestab::cli {
namespace {

using json = nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& path) { return parse_graph(slurp(path)); }

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path);
  file << text;
}

std::string evidence_summary(const Evidence& ev) {
  return std::visit(
      [](const auto& e) -> std::string {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, std::monostate>) {
          return "none";
        } else if constexpr (std::is_same_v<E, CycleWitness>) {
          return "cycle of length " + std::to_string(e.cycle.size());
        } else if constexpr (std::is_same_v<E, PathWitness>) {
          return "path on " + std::to_string(e.path.size()) + " vertices";
        } else if constexpr (std::is_same_v<E, Embedding>) {
          return "embedding into " + describe(e.spec);
        } else if constexpr (std::is_same_v<E, ApexEmbedding>) {
          return "apex graph embeds into " + describe(e.embedding.spec);
        } else {
          return "separator of size " + std::to_string(e.vertices.size());
        }
      },
      ev);
}

void print_decision(const Decision& d, bool as_json, std::ostream& out) {
  if (as_json) {
    out << certificate_json(d) << '\n';
    return;
  }
  out << "verdict: " << to_string(d.verdict) << '\n'
      << "problem: " << to_string(d.problem) << '\n'
      << "n: " << d.n << "  k: " << d.k << "  threshold: " << d.threshold << '\n'
      << "mode: " << to_string(d.mode) << '\n'
      << "evidence: " << evidence_summary(d.evidence);
  if (!d.source.empty()) out << " (" << d.source << ')';
  out << '\n';
}

int verdict_code(const Decision& d) { return d.verdict == Verdict::T1 ? kExitT1 : kExitT0; }

struct GenParams {
  std::string family;
  Vertex n = 0, ell = 0, a = 0, s = 0, t = 0, k = 0;
  std::uint64_t seed = 1;
};

Graph generate(const GenParams& p) {
  const std::string& f = p.family;
  auto need = [&](Vertex value, const char* name) {
    if (value <= 0) throw InvalidParameters("--family " + f + " needs --" + name);
  };
  if (f == "random") {
    need(p.n, "n");
    need(p.k, "k");
    return harness::random_graph_under_preconditions(p.n, p.k, p.seed);
  }
  if (f == "petersen") return graphs::petersen();
  if (f == "complete" || f == "cycle" || f == "path") {
    need(p.n, "n");
    if (f == "complete") return graphs::complete(p.n);
    return f == "cycle" ? graphs::cycle(p.n) : graphs::path(p.n);
  }

  FamilySpec spec;
  if (f == "H") {
    spec = HFamily{p.n, p.ell, p.a};
  } else if (f == "F") {
    spec = FFamily{p.s, p.t, p.k};
  } else if (f == "F1") {
    spec = F1Family{p.t, p.k};
  } else if (f == "FV") {
    spec = FVFamily{p.t, p.k};
  } else if (f == "K2M") {
    spec = K2Matching{p.t};
  } else if (f == "K2SM") {
    spec = K2StarMatching{p.s, p.t};
  } else if (f == "K3M") {
    spec = K3Matching{p.t};
  } else if (f == "K1TK") {
    spec = K1Cliques{p.t, p.k};
  } else if (f == "JC") {
    spec = JoinedCenters{p.s, p.t, p.k};
  } else if (f == "K1M") {
    spec = K1Matching{p.t};
  } else if (f == "K1SM") {
    spec = K1StarMatching{p.s, p.t};
  } else {
    throw InvalidParameters("unknown family '" + f + "'");
  }
  validate(spec);
  return build_family(spec).graph;
}

const std::vector<std::string> kCampaigns = {"theorem16", "lemma23",  "theorem33", "mincirc",
                                             "fastexact", "families", "witness",   "longcycle"};

std::uint64_t default_samples(const std::string& campaign) {
  if (campaign == "fastexact") return 10'000;
  if (campaign == "witness") return 1'000;
  if (campaign == "longcycle") return 2'000;
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified long-cycle decisions for near-minimum-degree graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cyclestab 0.1.0");

  // decide
  std::string input;
  Vertex k = 0;
  std::string mode = "auto";
  bool min_form = false, witness = false, as_json = false;
  auto* decide = app.add_subcommand("decide", "Does G have a cycle of length >= 2k + 2?");
  decide->add_option("--input,-i", input, "graph file (edge list or graph6; - for stdin)")->required();
  decide->add_option("--k", k, "degree parameter");
  decide->add_option("--mode", mode, "fast, exact or auto")
      ->check(CLI::IsMember({"fast", "exact", "auto"}));
  decide->add_flag("--min-form", min_form, "decide c(G) >= min{2 delta + 2, n}");
  decide->add_flag("--witness", witness, "attach a cycle witness on T1");
  decide->add_flag("--json", as_json, "print the certificate JSON");

  // path-decide
  auto* path_decide = app.add_subcommand("path-decide", "Does G have a path on min{n, 2k + 3} vertices?");
  path_decide->add_option("--input,-i", input, "graph file")->required();
  path_decide->add_option("--k", k, "degree parameter")->required();
  path_decide->add_flag("--witness", witness, "attach a path witness on T1");
  path_decide->add_flag("--json", as_json, "print the certificate JSON");

  // oracle
  bool circ = false, longest = false;
  std::vector<Vertex> uv;
  Vertex cap = oracle::kDefaultCap;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact circumference and longest paths (small graphs)");
  oracle_cmd->add_option("--input,-i", input, "graph file")->required();
  auto* o_circ = oracle_cmd->add_flag("--circumference", circ, "length of a longest cycle");
  auto* o_path = oracle_cmd->add_flag("--longest-path", longest, "vertices on a longest path");
  auto* o_uv = oracle_cmd->add_option("--uv", uv, "vertices on a longest u-v path")->expected(2);
  o_circ->excludes(o_path)->excludes(o_uv);
  o_path->excludes(o_uv);
  oracle_cmd->add_option("--cap", cap, "largest order accepted");
  oracle_cmd->add_flag("--json", as_json, "JSON output");

  // gen
  GenParams gp;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Write a family member or test graph as an edge list");
  gen->add_option("--family", gp.family,
                  "H F F1 FV K2M K2SM K3M K1TK JC K1M K1SM random petersen complete cycle path")
      ->required();
  gen->add_option("--n", gp.n);
  gen->add_option("--ell", gp.ell);
  gen->add_option("--a", gp.a);
  gen->add_option("--s", gp.s);
  gen->add_option("--t", gp.t);
  gen->add_option("--k", gp.k);
  gen->add_option("--seed", gp.seed);
  gen->add_option("--out,-o", out_path, "output file (default stdout)");

  // turan
  Vertex tn = 0, tk = 0;
  bool construct = false, verify_flag = false;
  turan::VerifyOptions topts;
  auto* turan_cmd = app.add_subcommand("turan", "Extremal {S_{k+2}, P_{2k+1}}-free graphs");
  turan_cmd->add_option("--n", tn)->required();
  turan_cmd->add_option("--k", tk)->required();
  auto* t_con = turan_cmd->add_flag("--construct", construct, "write the extremal graph");
  auto* t_ver = turan_cmd->add_flag("--verify", verify_flag, "verify the extremal number");
  t_con->excludes(t_ver);
  turan_cmd->add_option("--out,-o", out_path, "output file for --construct");
  turan_cmd->add_option("--samples", topts.samples);
  turan_cmd->add_option("--seed", topts.seed);
  turan_cmd->add_option("--jobs", topts.jobs);

  // verify
  std::string campaign;
  harness::CampaignConfig cfg;
  std::uint64_t samples = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->add_option("campaign", campaign, "campaign name")->required()->check(CLI::IsMember(kCampaigns));
  verify->add_option("--min-n", cfg.n_min);
  verify->add_option("--max-n", cfg.n_max);
  verify->add_option("--k-min", cfg.k_min);
  verify->add_option("--k-max", cfg.k_max);
  verify->add_flag("--all-k", cfg.all_k, "every admissible k, not only the second-min degree");
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--jobs", cfg.jobs)->check(CLI::Range(1u, 1024u));
  auto* v_samples = verify->add_option("--samples", samples, "seeded random instances");
  verify->add_option("--sample-min-n", cfg.sample_n_min);
  verify->add_option("--sample-max-n", cfg.sample_n_max);
  verify->add_flag("--samples-only", cfg.samples_only);
  verify->add_option("--per-family", cfg.per_family);
  verify->add_option("--fault-period", cfg.fault_period, "inject verdict flips (self-test)");
  verify->add_option("--out,-o", out_path, "report file (default stdout)");

  // check
  std::string cert_path;
  auto* check = app.add_subcommand("check", "Validate a certificate against a graph");
  check->add_option("--certificate,-c", cert_path)->required();
  check->add_option("--graph,-g", input)->required();
  check->add_flag("--json", as_json);

  // replay
  auto* replay = app.add_subcommand("replay", "Re-run a reported violation");
  replay->add_option("--campaign", campaign)->required();
  replay->add_option("--input,-i", input, "graph text from the report")->required();
  replay->add_option("--k", k)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*decide) {
      const Graph g = load_graph(input);
      const bool want = witness || as_json;
      Decision d;
      if (min_form) {
        DecideOptions o;
        o.want_witness = want;
        d = solve_min_circumference(g, o);
      } else {
        if (k <= 0) throw InvalidParameters("--k is required unless --min-form is given");
        const ModeChoice m = mode == "fast" ? ModeChoice::Fast
                             : mode == "exact" ? ModeChoice::Exact
                                               : ModeChoice::Auto;
        d = certify(g, k, want, m);
      }
      print_decision(d, as_json, out);
      return verdict_code(d);
    }
    if (*path_decide) {
      const Graph g = load_graph(input);
      DecideOptions o;
      o.want_witness = witness || as_json;
      const Decision d = decide_path(g, k, o);
      print_decision(d, as_json, out);
      return verdict_code(d);
    }
    if (*oracle_cmd) {
      const Graph g = load_graph(input);
      oracle::Options o;
      o.cap = cap;
      json j;
      if (!uv.empty()) {
        const auto r = oracle::longest_uv_path_order(g, uv[0], uv[1], o);
        j = {{"u", uv[0]}, {"v", uv[1]}, {"order", r.order}, {"path", r.path}};
        if (!as_json) out << "longest u-v path order: " << r.order << '\n';
      } else if (longest) {
        const auto r = oracle::longest_path_order(g, o);
        j = {{"longest_path_order", r.order}, {"path", r.path}};
        if (!as_json) out << "longest path order: " << r.order << '\n';
      } else {
        const auto r = oracle::circumference(g, o);
        j = {{"circumference", r.length}};
        if (r.witness) j["cycle"] = r.witness->cycle;
        if (!as_json) out << "circumference: " << r.length << '\n';
      }
      if (as_json) out << j.dump(2) << '\n';
      return kExitT1;
    }
    if (*gen) {
      emit(out_path, serialize_edge_list(generate(gp)), out);
      return kExitT1;
    }
    if (*turan_cmd) {
      if (verify_flag) {
        const auto r = turan::verify_turan(tn, tk, topts);
        out << r.to_json() << '\n';
        return r.pass ? kExitT1 : kExitT0;
      }
      emit(out_path, serialize_edge_list(turan::build_turan_extremal(tn, tk)), out);
      return kExitT1;
    }
    if (*verify) {
      cfg.samples = v_samples->count() ? samples : default_samples(campaign);
      const auto report = harness::run_campaign(campaign, cfg);
      emit(out_path, report.to_json() + "\n", out);
      if (!out_path.empty() && out_path != "-") {
        err << campaign << ": " << report.instances_checked << " instances, "
            << report.violations.size() << " violations\n";
      }
      return report.pass() ? kExitT1 : kExitT0;
    }
    if (*check) {
      const Graph g = load_graph(input);
      const auto r = check_certificate_text(g, slurp(cert_path));
      if (as_json) {
        out << json{{"ok", r.ok}, {"evidence_checked", r.evidence_checked}, {"diagnostic", r.diagnostic}}
                   .dump(2)
            << '\n';
      } else {
        out << (r.ok ? "valid" : "invalid: " + r.diagnostic) << '\n';
      }
      return r.ok ? kExitT1 : kExitT0;
    }
    if (*replay) {
      harness::Violation v;
      v.k = k;
      v.graph = serialize_edge_list(load_graph(input));
      const bool genuine = harness::replay_violation(campaign, v);
      out << (genuine ? "genuine disagreement" : "not reproduced") << '\n';
      return genuine ? kExitT0 : kExitT1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace cyclestab::cli
