#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cyclestab/families.hpp"
#include "cyclestab/graph.hpp"
#include "cyclestab/longcycle.hpp"
#include "cyclestab/oracle.hpp"
#include "cyclestab/recognize.hpp"
#include "cyclestab/witness.hpp"

namespace cyclestab {

/// Which question a decision answers.
enum class Problem {
  Cycle,             ///< c(G) >= 2k + 2
  MinCircumference,  ///< c(G) >= min{2 delta + 2, n}, k = delta
  Path,              ///< G has a path on min{n, 2k + 3} vertices
};

enum class Verdict { T0, T1 };
enum class Mode { Fast, Exact };

struct PathWitness {
  std::vector<Vertex> path;
  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

/// Embedding of the apex graph K_1 + G (apex id n) into a cycle family; proves
/// that G has no path on (cycle bound of the host) vertices.
struct ApexEmbedding {
  Embedding embedding;
  friend bool operator==(const ApexEmbedding&, const ApexEmbedding&) = default;
};

/// Vertex set S whose removal leaves at least |S| + 2 components, which rules
/// out a Hamilton path.
struct Separator {
  std::vector<Vertex> vertices;
  friend bool operator==(const Separator&, const Separator&) = default;
};

using Evidence =
    std::variant<std::monostate, CycleWitness, PathWitness, Embedding, ApexEmbedding, Separator>;

struct Decision {
  Problem problem = Problem::Cycle;
  Vertex n = 0;
  Vertex k = 0;
  Vertex threshold = 0;
  Verdict verdict = Verdict::T1;
  Mode mode = Mode::Exact;
  Evidence evidence;
  std::uint64_t work = 0;
  /// "recognizer", "find_long_cycle", "oracle", "separator" or empty.
  std::string source;
};

std::string to_string(Problem p);
std::string to_string(Verdict v);
std::string to_string(Mode m);

struct DecideOptions {
  /// Search for a cycle witness on T1 (find_long_cycle, then the oracle).
  bool want_witness = true;
  LongCycleOptions search;
  oracle::Options oracle;
};

/// Threshold 2k + 2. T0 exactly when G embeds in a catalog family. Requires G
/// 2-connected, k >= 2, the degree condition and n >= 2k + 2.
Decision decide_exact(const Graph& g, Vertex k, const DecideOptions& opts = {});

/// Linear-time decision for k >= 5; never searches for a cycle witness.
Decision decide_fast(const Graph& g, Vertex k);

/// Threshold min{2 delta + 2, n} with k = delta(G) >= 2 on 2-connected G.
Decision solve_min_circumference(const Graph& g, const DecideOptions& opts = {});

enum class ModeChoice { Auto, Fast, Exact };

/// Decision with witness search and independent re-validation of the
/// evidence. Throws Error if the evidence fails validation.
Decision certify(const Graph& g, Vertex k, bool want_witness, ModeChoice mode = ModeChoice::Auto);

/// Fills in a cycle witness for a T1 decision when one can be found.
void attach_cycle_witness(const Graph& g, Decision& d, const DecideOptions& opts);

}  // namespace cyclestab
