#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cyclestab/graph.hpp"

namespace cyclestab::detail {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

/// Reusable vertex marker with O(1) reset via epoch counters.
class Marker {
 public:
  explicit Marker(Vertex n = 0) : stamp_(static_cast<std::size_t>(n), 0) {}
  void resize(Vertex n) {
    stamp_.assign(static_cast<std::size_t>(n), 0);
    epoch_ = 1;
  }
  void clear() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }
  void set(Vertex v) { stamp_[v] = epoch_; }
  void unset(Vertex v) { stamp_[v] = 0; }
  bool test(Vertex v) const { return stamp_[v] == epoch_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 1;
};

}  // namespace cyclestab::detail
