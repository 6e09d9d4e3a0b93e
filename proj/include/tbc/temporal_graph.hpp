#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tbc {

using NodeId = std::uint32_t;
using Time = std::uint32_t;

struct TemporalArc {
  NodeId from;
  NodeId to;
  Time time;

  friend bool operator==(const TemporalArc&, const TemporalArc&) = default;
};

// A (node, time) pair.
struct TemporalNode {
  NodeId node;
  Time time;

  static constexpr NodeId kNilNode = ~NodeId{0};

  // Predecessor marker for source-initialised temporal nodes.
  static constexpr TemporalNode nil() { return {kNilNode, 0}; }
  constexpr bool is_nil() const { return node == kNilNode; }

  friend auto operator<=>(const TemporalNode&, const TemporalNode&) = default;
};

// Out-arc view: head node and time, sorted by (time, head).
struct TimedNeighbor {
  NodeId node;
  Time time;
};

// Directed temporal graph (V, E, T) over dense node ids 0..n-1.
//
// Arcs are kept in first-insertion order with duplicates removed. Adjacency
// is indexed per node by time. Immutable after construction.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  // Builds a graph from labels and arcs. `horizon`, when given, must be at
  // least the largest arc time; otherwise T is the largest arc time.
  TemporalGraph(std::vector<std::string> labels, std::vector<TemporalArc> arcs,
                bool directed, std::optional<Time> horizon = std::nullopt);

  std::size_t num_nodes() const { return labels_.size(); }
  std::size_t num_arcs() const { return arcs_.size(); }
  Time horizon() const { return horizon_; }
  bool directed() const { return directed_; }

  const std::vector<TemporalArc>& arcs() const { return arcs_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(NodeId v) const { return labels_.at(v); }
  std::optional<NodeId> find(std::string_view label) const;

  // Out-arcs of `v` sorted by (time, head).
  std::span<const TimedNeighbor> out_arcs(NodeId v) const;
  // Out-arcs of `v` with time in [lo, hi].
  std::span<const TimedNeighbor> out_arcs_between(NodeId v, Time lo, Time hi) const;
  // Distinct times of arcs leaving `v`, ascending.
  std::span<const Time> out_times(NodeId v) const;
  // Distinct times of arcs entering `v`, ascending.
  std::span<const Time> in_times(NodeId v) const;
  // Distinct arc times over the whole graph, ascending.
  const std::vector<Time>& distinct_times() const { return distinct_times_; }

  // 64-bit FNV-1a digest of (n, T, arcs).
  std::uint64_t content_hash() const;

 private:
  std::vector<std::string> labels_;
  std::vector<TemporalArc> arcs_;
  Time horizon_ = 0;
  bool directed_ = true;

  std::vector<std::size_t> out_offsets_;
  std::vector<TimedNeighbor> out_;
  std::vector<std::size_t> out_time_offsets_;
  std::vector<Time> out_times_;
  std::vector<std::size_t> in_time_offsets_;
  std::vector<Time> in_times_;
  std::vector<Time> distinct_times_;
};

// Time projection of a temporal graph onto plain directed edges.
struct StaticGraph {
  std::size_t num_nodes = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;  // sorted, unique

  std::vector<std::vector<NodeId>> adjacency() const;
};

struct ParseOptions {
  bool directed = true;
  // Remap distinct timestamps to 1..D in increasing order.
  bool compress_times = false;
};

// Parses "u v t" lines; '#' lines and blank lines are skipped.
TemporalGraph parse_edge_list(std::istream& in, const ParseOptions& options = {});
TemporalGraph parse_edge_list(std::string_view text, const ParseOptions& options = {});
TemporalGraph read_edge_list_file(const std::string& path, const ParseOptions& options = {});

// Writes one "u v t" line per arc in arc order.
std::string write_edge_list(const TemporalGraph& g);

StaticGraph aggregate_static(const TemporalGraph& g);

// G^{<=mu}: keeps arcs with t <= floor(mu * T); the horizon becomes that threshold.
TemporalGraph prefix_graph(const TemporalGraph& g, double mu);

}  // namespace tbc
