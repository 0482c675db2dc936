#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclestab/graph.hpp"
#include "cyclestab/witness.hpp"

namespace cyclestab {

/// A path x_1 ... x_m in a fixed graph with O(1) position lookup. Indices in
/// the public API are 1-based to match x_1 ... x_m.
class PathState {
 public:
  /// Throws PreconditionError when `order` is not a path of `g`.
  PathState(const Graph& g, std::vector<Vertex> order);

  const Graph& graph() const { return *g_; }
  const std::vector<Vertex>& order() const { return order_; }
  Vertex size() const { return static_cast<Vertex>(order_.size()); }
  Vertex at(Vertex i) const { return order_[i - 1]; }
  Vertex front() const { return order_.front(); }
  Vertex back() const { return order_.back(); }
  /// 1-based position of v, 0 when v is off the path.
  Vertex index_of(Vertex v) const { return pos_[v]; }
  bool contains(Vertex v) const { return pos_[v] != 0; }

  /// Sorted 1-based indices of N_P(x_1) and N_P(x_m).
  std::vector<Vertex> front_neighbors() const;
  std::vector<Vertex> back_neighbors() const;
  /// N_P^-(x_1) = {w : x_{w+1} in N_P(x_1)} and N_P^+(x_m) = {w : x_{w-1} in N_P(x_m)}.
  std::vector<Vertex> shifted_front() const;
  std::vector<Vertex> shifted_back() const;
  /// N_P^-(x_1) ∩ N_P(x_m) = ∅ and N_P^+(x_m) ∩ N_P(x_1) = ∅.
  bool endpoints_disjoint() const;

  /// In-place rotation (see `rotate`); returns the new endpoint.
  Vertex rotate_front(Vertex pivot_index);
  Vertex rotate_back(Vertex pivot_index);
  /// Appends / prepends a vertex adjacent to the matching endpoint.
  void push_back(Vertex v);
  void push_front(Vertex v);

 private:
  void reindex(Vertex from, Vertex to);

  const Graph* g_;
  std::vector<Vertex> order_;
  std::vector<Vertex> pos_;
};

enum class End { Front, Back };

/// Pósa rotation: with pivot x_j adjacent to x_1, the path becomes
/// x_{j-1} ... x_1 x_j ... x_m; with pivot x_i adjacent to x_m it becomes
/// x_1 ... x_i x_m ... x_{i+1}. Throws PreconditionError for a pivot that is
/// off the path, not adjacent to the endpoint, or its path neighbor.
PathState rotate(const PathState& state, Vertex pivot, End end);
/// Uses the back endpoint when pivot is a valid back pivot, else the front.
PathState rotate(const PathState& state, Vertex pivot);

/// Cycle x_1 P x_i x_m P x_j x_1 of length i + (m - j + 1). Requires
/// x_i ~ x_m, x_j ~ x_1 and i < j. The pair (1, m) with x_1 ~ x_m yields the
/// whole path as a cycle.
CycleWitness close_crossing(const PathState& state, Vertex i, Vertex j);

struct Ear {
  Vertex s = 0;  ///< 1-based attachment index on P
  Vertex t = 0;  ///< 1-based attachment index on P, s < t
  std::vector<Vertex> path;  ///< x_s, interior..., x_t
};

struct Vine {
  std::vector<Ear> ears;
  Vertex g = 0;  ///< max index of N_P(x_1)
  Vertex h = 0;  ///< min index of N_P(x_m)
};

/// Ears Q_1..Q_r with s_1 < g < t_1, each t_i maximal, and t_r > h.
/// Throws PreconditionError when g >= h ("vine not required") and Error when
/// no ear exists (impossible in a 2-connected graph).
Vine grow_vine(const Graph& g, const PathState& state, Vertex g_index, Vertex h_index);

/// Merges the vine into one cycle through x_1, x_m and every ear. Throws
/// PreconditionError when i_0 or j_0 does not exist.
CycleWitness vine_merge(const PathState& state, const Vine& vine);

struct LongCycleOptions {
  std::uint64_t budget = 1'000'000;
};

/// Best-effort search for a cycle of length >= L. Deterministic for fixed
/// inputs. Every returned witness is valid; nullopt makes no claim.
std::optional<CycleWitness> find_long_cycle(const Graph& g, Vertex L,
                                            const LongCycleOptions& opts = {});

}  // namespace cyclestab
