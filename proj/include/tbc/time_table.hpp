#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tbc/temporal_graph.hpp"

namespace tbc {

// Dense node-major table over (node, time) with times 0..T.
template <typename T>
class TimeTable {
 public:
  TimeTable() = default;
  TimeTable(std::size_t num_nodes, Time horizon, const T& fill = T{})
      : num_nodes_(num_nodes),
        stride_(static_cast<std::size_t>(horizon) + 1),
        cells_(num_nodes * stride_, fill) {}

  std::size_t num_nodes() const { return num_nodes_; }
  Time horizon() const { return static_cast<Time>(stride_ - 1); }
  std::size_t num_times() const { return stride_; }

  T& at(NodeId v, Time t) { return cells_[v * stride_ + t]; }
  const T& at(NodeId v, Time t) const { return cells_[v * stride_ + t]; }

  std::span<T> row(NodeId v) { return {cells_.data() + v * stride_, stride_}; }
  std::span<const T> row(NodeId v) const { return {cells_.data() + v * stride_, stride_}; }

  std::vector<T>& cells() { return cells_; }
  const std::vector<T>& cells() const { return cells_; }

 private:
  std::size_t num_nodes_ = 0;
  std::size_t stride_ = 1;
  std::vector<T> cells_;
};

}  // namespace tbc
