#include "tbc/shortest_walks.hpp"

#include <algorithm>
#include <deque>

#include "tbc/errors.hpp"

namespace tbc {

std::span<const TemporalNode> PredecessorData::pre(NodeId v, Time t) const {
  const auto idx = index_.at(v, t);
  if (idx < 0) return {};
  return pre_[static_cast<std::size_t>(idx)];
}

std::optional<std::uint32_t> PredecessorData::vertex_index(NodeId v, Time t) const {
  const auto idx = index_.at(v, t);
  if (idx < 0) return std::nullopt;
  return static_cast<std::uint32_t>(idx);
}

std::span<const Time> PredecessorData::vertex_times(NodeId v) const {
  return {times_.data() + time_offsets_[v], time_offsets_[v + 1] - time_offsets_[v]};
}

PredecessorData temporal_bfs(const TemporalGraph& g, NodeId s, const VariantConfig& cfg) {
  const std::size_t n = g.num_nodes();
  const Time horizon = g.horizon();
  if (s >= n) throw ArgumentError("source node out of range");

  PredecessorData pd;
  pd.source_ = s;
  pd.extended_ = cfg.active() && !cfg.waiting_bounded(horizon);
  pd.dist_ = TimeTable<Length>(n, horizon, Length::infinite());
  pd.index_ = TimeTable<std::int32_t>(n, horizon, -1);
  TimeTable<std::uint8_t> enqueued(n, horizon, 0);

  const bool bounded = cfg.waiting_bounded(horizon);
  const std::uint64_t k = bounded ? *cfg.restless_bound() : std::uint64_t{horizon};
  auto& stats = pd.stats_;

  std::vector<TemporalNode> queue, next;
  auto enqueue = [&](TemporalNode x) {
    pd.index_.at(x.node, x.time) = static_cast<std::int32_t>(pd.vertices_.size());
    pd.vertices_.push_back(x);
    pd.pre_.emplace_back();
    auto& count = enqueued.at(x.node, x.time);
    ++count;
    ++stats.enqueues;
    stats.max_enqueues_per_node = std::max<std::uint32_t>(stats.max_enqueues_per_node, count);
    next.push_back(x);
  };

  for (Time t : g.out_times(s)) {
    pd.dist_.at(s, t) = Length{0};
    enqueue({s, t});
    pd.pre_.back().push_back(TemporalNode::nil());
  }
  std::swap(queue, next);

  auto relax = [&](TemporalNode from, NodeId b, Time arrival, Length level) {
    ++stats.relaxations;
    Length& d = pd.dist_.at(b, arrival);
    const bool has_pre = pd.index_.at(b, arrival) >= 0;
    if (!d.is_finite() || (d >= level && !has_pre)) {
      d = level;
      enqueue({b, arrival});
      if (pd.extended_) {
        auto ins = g.in_times(b);
        for (auto it = std::upper_bound(ins.begin(), ins.end(), arrival); it != ins.end(); ++it) {
          if (std::uint64_t{*it} - arrival > k) break;
          Length& ext = pd.dist_.at(b, *it);
          if (ext > level) {
            if (pd.index_.at(b, *it) >= 0) throw InvariantError("extension stamp over a vertex");
            ext = level;
            ++stats.extension_stamps;
          }
        }
      }
    }
    if (d == level) pd.pre_[static_cast<std::size_t>(pd.index_.at(b, arrival))].push_back(from);
  };

  std::uint32_t level = 1;
  while (!queue.empty()) {
    for (const TemporalNode x : queue) {
      std::span<const TimedNeighbor> arcs;
      if (x.node == s) {
        arcs = g.out_arcs_between(s, x.time, x.time);
      } else {
        const std::uint64_t lo = std::uint64_t{x.time} + (cfg.strict() ? 1 : 0);
        const std::uint64_t hi = std::min<std::uint64_t>(std::uint64_t{x.time} + k, horizon);
        if (lo <= hi) arcs = g.out_arcs_between(x.node, static_cast<Time>(lo), static_cast<Time>(hi));
      }
      for (const auto& arc : arcs) relax(x, arc.node, arc.time, Length{level});
    }
    ++level;
    queue.clear();
    std::swap(queue, next);
  }

  // Per-node vertex times.
  std::vector<std::size_t> counts(n, 0);
  for (const auto& x : pd.vertices_) ++counts[x.node];
  pd.time_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) pd.time_offsets_[v + 1] = pd.time_offsets_[v] + counts[v];
  pd.times_.resize(pd.vertices_.size());
  std::vector<std::size_t> cursor(pd.time_offsets_.begin(), pd.time_offsets_.end() - 1);
  for (const auto& x : pd.vertices_) pd.times_[cursor[x.node]++] = x.time;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(pd.times_.begin() + static_cast<std::ptrdiff_t>(pd.time_offsets_[v]),
              pd.times_.begin() + static_cast<std::ptrdiff_t>(pd.time_offsets_[v + 1]));
  }
  return pd;
}

SuccessorTable::SuccessorTable(const PredecessorData& pd) : pd_(&pd) {
  const std::size_t nv = pd.num_vertices();
  std::vector<std::size_t> counts(nv, 0);
  for (std::uint32_t i = 0; i < nv; ++i) {
    for (const auto& p : pd.pre_of(i)) {
      if (!p.is_nil()) ++counts[*pd.vertex_index(p.node, p.time)];
    }
  }
  offsets_.assign(nv + 1, 0);
  for (std::size_t i = 0; i < nv; ++i) offsets_[i + 1] = offsets_[i] + counts[i];
  targets_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t i = 0; i < nv; ++i) {
    for (const auto& p : pd.pre_of(i)) {
      if (!p.is_nil()) targets_[cursor[*pd.vertex_index(p.node, p.time)]++] = i;
    }
  }
  const auto& vs = pd.vertices();
  for (std::size_t i = 0; i < nv; ++i) {
    std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
              targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]),
              [&vs](std::uint32_t a, std::uint32_t b) {
                return vs[a].time != vs[b].time ? vs[a].time > vs[b].time : vs[a].node < vs[b].node;
              });
  }
}

std::vector<TemporalNode> SuccessorTable::of(NodeId v, Time t) const {
  std::vector<TemporalNode> out;
  if (auto idx = pd_->vertex_index(v, t)) {
    for (auto j : of_index(*idx)) out.push_back(pd_->vertices()[j]);
  }
  return out;
}

std::vector<std::uint32_t> topological_order(const PredecessorData& pd) {
  const std::size_t nv = pd.num_vertices();
  SuccessorTable succ(pd);
  std::vector<std::uint32_t> indegree(nv, 0);
  for (std::uint32_t i = 0; i < nv; ++i) {
    for (auto j : succ.of_index(i)) ++indegree[j];
  }
  std::deque<std::uint32_t> ready;
  for (std::uint32_t i = 0; i < nv; ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::vector<std::uint32_t> order;
  order.reserve(nv);
  while (!ready.empty()) {
    const auto i = ready.front();
    ready.pop_front();
    order.push_back(i);
    for (auto j : succ.of_index(i)) {
      if (--indegree[j] == 0) ready.push_back(j);
    }
  }
  if (order.size() != nv) throw InvariantError("predecessor graph contains a cycle");
  return order;
}

}  // namespace tbc
