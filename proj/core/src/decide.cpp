#include "cyclestab/decide.hpp"

#include <algorithm>

#include "cyclestab/certificate.hpp"
#include "cyclestab/error.hpp"

namespace cyclestab {

std::string to_string(Problem p) {
  switch (p) {
    case Problem::Cycle: return "cycle";
    case Problem::MinCircumference: return "min-circumference";
    case Problem::Path: return "path";
  }
  return "?";
}

std::string to_string(Verdict v) { return v == Verdict::T1 ? "T1" : "T0"; }
std::string to_string(Mode m) { return m == Mode::Fast ? "fast" : "exact"; }

void attach_cycle_witness(const Graph& g, Decision& d, const DecideOptions& opts) {
  if (d.verdict != Verdict::T1 || !std::holds_alternative<std::monostate>(d.evidence)) return;
  if (auto c = find_long_cycle(g, d.threshold, opts.search)) {
    d.evidence = std::move(*c);
    d.source = "find_long_cycle";
    return;
  }
  if (g.order() <= std::min(opts.oracle.cap, oracle::kHardLimit)) {
    if (auto c = oracle::has_cycle_at_least(g, d.threshold, opts.oracle)) {
      d.evidence = std::move(*c);
      d.source = "oracle";
    }
  }
}

namespace {

Decision base(const Graph& g, Vertex k, Problem p, Mode mode) {
  Decision d;
  d.problem = p;
  d.n = g.order();
  d.k = k;
  d.threshold = 2 * k + 2;
  d.mode = mode;
  return d;
}

Decision extremal(Decision d, Embedding emb) {
  d.verdict = Verdict::T0;
  d.evidence = std::move(emb);
  d.source = "recognizer";
  return d;
}

}  // namespace

Decision decide_exact(const Graph& g, Vertex k, const DecideOptions& opts) {
  require_cycle_domain(check_preconditions(g, k), 2, 2 * k + 2);
  Decision d = base(g, k, Problem::Cycle, Mode::Exact);
  d.work = g.order() + g.size();
  if (auto emb = recognize(g, k, {}, &d.work)) return extremal(std::move(d), std::move(*emb));
  d.verdict = Verdict::T1;
  if (opts.want_witness) attach_cycle_witness(g, d, opts);
  return d;
}

Decision decide_fast(const Graph& g, Vertex k) {
  if (k < 5) throw PreconditionError("decide_fast requires k >= 5");
  const Vertex n = g.order();
  Decision d = base(g, k, Problem::Cycle, Mode::Fast);
  d.verdict = Verdict::T1;
  require_cycle_domain(check_preconditions(g, k), 5, 2 * k + 2);
  d.work = n + g.size();
  if (static_cast<std::uint64_t>(g.size()) >= 2ull * k * static_cast<std::uint64_t>(n)) return d;

  // Step 2: every family member has at most k + 2 vertices of degree > k.
  Vertex x = -1, low = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > k) continue;
    ++low;
    if (g.degree(v) == k && x < 0) x = v;
  }
  d.work += n;
  if (low == 0 || x < 0) return d;

  // Step 3: branch on the high-degree neighbors of x.
  std::vector<Vertex> high;
  for (Vertex v : g.neighbors(x)) {
    if (g.degree(v) >= k + 2) high.push_back(v);
  }
  d.work += k;
  if (static_cast<Vertex>(high.size()) == k) {
    if (auto emb = match::h_family(g, g.neighbors(x), 2 * k + 2, &d.work)) {
      return extremal(std::move(d), std::move(*emb));
    }
  } else if (high.size() == 2) {
    if (auto emb = match::f1_pair(g, high[0], high[1], k, &d.work)) {
      return extremal(std::move(d), std::move(*emb));
    }
    for (int order = 0; order < 2; ++order) {
      if (auto emb = match::f_pair(g, high[order], high[1 - order], k, &d.work)) {
        return extremal(std::move(d), std::move(*emb));
      }
    }
  }
  RecognizeOptions ro;
  ro.seed_limit = static_cast<std::size_t>(k) + 4;
  if (auto emb = recognize(g, k, ro, &d.work)) return extremal(std::move(d), std::move(*emb));
  return d;
}

Decision solve_min_circumference(const Graph& g, const DecideOptions& opts) {
  if (!is_biconnected(g)) throw PreconditionError("graph is not 2-connected");
  const Vertex k = degree_profile(g).min_degree;
  if (k < 2) throw PreconditionError("minimum degree must be >= 2");
  const Vertex n = g.order();
  Decision d;
  if (n >= 2 * k + 2) {
    d = k >= 5 ? decide_fast(g, k) : decide_exact(g, k, opts);
    d.problem = Problem::MinCircumference;
    if (opts.want_witness) attach_cycle_witness(g, d, opts);
    return d;
  }
  d = base(g, k, Problem::MinCircumference, Mode::Exact);
  d.threshold = n;
  d.work = n + g.size();
  if (n == 2 * k + 1) {
    if (auto emb = recognize(g, k, {}, &d.work)) return extremal(std::move(d), std::move(*emb));
  }
  d.verdict = Verdict::T1;
  if (opts.want_witness) attach_cycle_witness(g, d, opts);
  return d;
}

Decision certify(const Graph& g, Vertex k, bool want_witness, ModeChoice mode) {
  const bool fast = mode == ModeChoice::Fast || (mode == ModeChoice::Auto && k >= 5);
  DecideOptions opts;
  opts.want_witness = want_witness;
  Decision d = fast ? decide_fast(g, k) : decide_exact(g, k, opts);
  if (want_witness) attach_cycle_witness(g, d, opts);
  const auto check = check_certificate(g, d);
  if (!check.ok) throw Error("certificate failed validation: " + check.diagnostic);
  return d;
}

}  // namespace cyclestab
