#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "tbc/temporal_graph.hpp"
#include "tbc/time_table.hpp"
#include "tbc/variant.hpp"

namespace tbc {

// Walk length with a dedicated infinity; no arithmetic is defined on it.
class Length {
 public:
  constexpr Length() = default;
  constexpr explicit Length(std::uint32_t value) : value_(value) {}

  static constexpr Length infinite() { return Length{kInfinite}; }
  constexpr bool is_finite() const { return value_ != kInfinite; }
  constexpr std::uint32_t value() const { return value_; }

  friend constexpr auto operator<=>(Length, Length) = default;

 private:
  static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t value_ = kInfinite;
};

struct BfsStats {
  std::uint64_t relaxations = 0;
  std::uint64_t extension_stamps = 0;
  std::uint64_t enqueues = 0;
  std::uint32_t max_enqueues_per_node = 0;
};

// Output of one temporal BFS: optimal exact costs and the predecessor graph.
//
// Vertices of the predecessor graph are the temporal nodes with a non-empty
// predecessor set (source-initialised nodes hold the NIL marker). They are
// numbered in discovery order, which is a topological order of the graph.
class PredecessorData {
 public:
  NodeId source() const { return source_; }
  std::size_t num_nodes() const { return dist_.num_nodes(); }
  Time horizon() const { return dist_.horizon(); }
  // Whether future in-arc times were stamped with extended-walk costs.
  bool extended() const { return extended_; }

  Length dist(NodeId v, Time t) const { return dist_.at(v, t); }
  const TimeTable<Length>& dist_table() const { return dist_; }

  // Predecessors of (v,t); empty when (v,t) is not a vertex.
  std::span<const TemporalNode> pre(NodeId v, Time t) const;

  std::size_t num_vertices() const { return vertices_.size(); }
  const std::vector<TemporalNode>& vertices() const { return vertices_; }
  std::optional<std::uint32_t> vertex_index(NodeId v, Time t) const;
  std::span<const TemporalNode> pre_of(std::uint32_t index) const { return pre_[index]; }
  bool is_source_init(std::uint32_t index) const {
    return pre_[index].size() == 1 && pre_[index].front().is_nil();
  }

  // Times at which `v` is a vertex, ascending.
  std::span<const Time> vertex_times(NodeId v) const;

  const BfsStats& stats() const { return stats_; }

 private:
  friend PredecessorData temporal_bfs(const TemporalGraph&, NodeId, const VariantConfig&);

  NodeId source_ = 0;
  bool extended_ = false;
  TimeTable<Length> dist_;
  TimeTable<std::int32_t> index_;
  std::vector<TemporalNode> vertices_;
  std::vector<std::vector<TemporalNode>> pre_;
  std::vector<std::size_t> time_offsets_;
  std::vector<Time> times_;
  BfsStats stats_;
};

// Level-synchronous temporal BFS from `s`.
//
// Foremost runs the unbounded passive BFS; its costs are derived from the
// same predecessor graph. Active walks stamp extended costs on future in-arc
// times only when the waiting bound cannot bind (k unbounded or k >= T).
PredecessorData temporal_bfs(const TemporalGraph& g, NodeId s, const VariantConfig& cfg);

// Successor lists of the predecessor graph, ordered by decreasing time and
// then increasing node id. NIL markers are excluded.
class SuccessorTable {
 public:
  explicit SuccessorTable(const PredecessorData& pd);

  // Successor vertex indices of vertex `index`.
  std::span<const std::uint32_t> of_index(std::uint32_t index) const {
    return {targets_.data() + offsets_[index], offsets_[index + 1] - offsets_[index]};
  }
  std::vector<TemporalNode> of(NodeId v, Time t) const;
  std::size_t num_edges() const { return targets_.size(); }

 private:
  const PredecessorData* pd_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> targets_;
};

inline SuccessorTable successors(const PredecessorData& pd) { return SuccessorTable(pd); }

// Kahn order over predecessor-graph vertices; throws InvariantError on a cycle.
std::vector<std::uint32_t> topological_order(const PredecessorData& pd);

}  // namespace tbc
