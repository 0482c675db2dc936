#pragma once

#include <span>
#include <string>
#include <vector>

#include "cyclestab/graph.hpp"

namespace cyclestab {

/// A cycle listed as distinct vertices; the closing edge back() - front() is implied.
struct CycleWitness {
  std::vector<Vertex> cycle;

  Vertex length() const { return static_cast<Vertex>(cycle.size()); }
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// At least 3 distinct in-range vertices, consecutive ones adjacent, closing
/// edge present. `why` receives the first failure.
bool is_valid_cycle(const Graph& g, std::span<const Vertex> cycle, std::string* why = nullptr);

/// Non-empty sequence of distinct in-range vertices with consecutive ones adjacent.
bool is_valid_path(const Graph& g, std::span<const Vertex> path, std::string* why = nullptr);

}  // namespace cyclestab
