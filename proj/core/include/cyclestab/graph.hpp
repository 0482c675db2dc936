#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyclestab {

/// Dense vertex identifier in [0, n).
using Vertex = std::int32_t;

inline constexpr Vertex kMaxOrder = Vertex{1} << 24;

/// Graphs below this order also carry a bitset adjacency matrix.
inline constexpr Vertex kBitsetOrderLimit = 512;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph.
///
/// Neighbors are kept as sorted CSR rows; small graphs additionally keep one
/// bitset row per vertex so `adjacent` is a single word test.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `n` vertices.
  explicit Graph(Vertex n);

  /// Throws `Error` on an out-of-range endpoint, a self-loop or a repeated edge.
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex order() const noexcept { return n_; }
  std::size_t size() const noexcept { return adj_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  Vertex degree(Vertex v) const {
    return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]);
  }
  bool adjacent(Vertex u, Vertex v) const;

  bool has_bitset() const noexcept { return !bits_.empty(); }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.adj_ == b.adj_;
  }

 private:
  Vertex n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct DegreeProfile {
  std::vector<Vertex> degrees;
  Vertex min_degree = 0;
  /// Minimum after deleting one lowest entry; absent when n == 1.
  std::optional<Vertex> second_min_degree;
};

/// Requires n >= 1.
DegreeProfile degree_profile(const Graph& g);

struct BiconnectivityReport {
  bool biconnected = false;
  bool connected = false;
  std::vector<Vertex> articulation_points;
};

/// 2-connected means n >= 3, connected and no articulation vertex.
BiconnectivityReport biconnectivity(const Graph& g);
bool is_biconnected(const Graph& g);
bool is_connected(const Graph& g);

/// Component label per vertex (labels 0.. in order of smallest member).
std::vector<Vertex> component_labels(const Graph& g, Vertex* count = nullptr);

Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(std::span<const Graph> parts);
Graph copies(const Graph& g, int count);
Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> new_to_old;
  std::vector<Vertex> old_to_new;  ///< -1 for vertices outside the set
};

/// Vertices are renumbered in increasing id order. Throws on out-of-range ids.
InducedSubgraph induced(const Graph& g, std::span<const Vertex> vertices);

/// Graph with one extra vertex (id n) adjacent to every vertex of `g`.
Graph with_apex(const Graph& g);

/// Copy of `g` plus (or minus) one edge.
Graph with_edge(const Graph& g, Edge e);
Graph without_edge(const Graph& g, Edge e);

// Text formats ------------------------------------------------------------

/// Edge-list format: `#` comments, header `n m`, then m lines `u v`.
Graph parse_edge_list(std::string_view text);

/// Canonical edge-list text (edges in lexicographic order, u < v).
std::string serialize_edge_list(const Graph& g);

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Dispatches on the first byte: digit or `#` means edge list, else graph6.
Graph parse_graph(std::string_view text);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace cyclestab
