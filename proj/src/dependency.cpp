#include "tbc/dependency.hpp"

#include <algorithm>

#include "tbc/errors.hpp"

namespace tbc {

std::optional<Time> before_time(const PredecessorData& pd, NodeId v, Time t) {
  auto times = pd.vertex_times(v);
  auto it = std::upper_bound(times.begin(), times.end(), t);
  if (it == times.begin()) return std::nullopt;
  return *std::prev(it);
}

namespace {

bool attains_pair_cost(const PredecessorData& pd, const WalkCounts& counts, const VariantConfig& cfg,
                       NodeId v, Time t) {
  const PairCost& c = counts.c_overall[v];
  if (cfg.cost() == CostKind::kForemost) return c.arrival == t && pd.dist(v, t) == c.length;
  return pd.dist(v, t) == c.length;
}

// Walks counted twice at (v,t): they wait at v up to t, leave at t and come
// back to (v,t) through a same-time cycle. Returns the number of such
// prefixes ending at each vertex.
std::vector<WalkCount> same_time_returns(const PredecessorData& pd, const std::vector<WalkCount>& sb) {
  const auto& vs = pd.vertices();
  std::vector<WalkCount> out(vs.size());
  std::vector<std::vector<std::uint32_t>> slices(static_cast<std::size_t>(pd.horizon()) + 1);
  for (std::uint32_t i = 0; i < vs.size(); ++i) slices[vs[i].time].push_back(i);

  std::vector<WalkCount> f;
  for (Time t = 0; t <= pd.horizon(); ++t) {
    const auto& slice = slices[t];
    std::vector<NodeId> leaving;
    for (auto i : slice) {
      for (const auto& p : pd.pre_of(i)) {
        if (!p.is_nil() && p.time < t) leaving.push_back(p.node);
      }
    }
    std::sort(leaving.begin(), leaving.end());
    leaving.erase(std::unique(leaving.begin(), leaving.end()), leaving.end());
    for (NodeId v : leaving) {
      auto z = pd.vertex_index(v, t);
      if (!z) continue;
      f.assign(slice.size(), WalkCount{});
      // slice is in index order, which is topological
      for (std::size_t a = 0; a < slice.size(); ++a) {
        for (const auto& p : pd.pre_of(slice[a])) {
          if (p.is_nil()) continue;
          const auto j = *pd.vertex_index(p.node, p.time);
          if (p.time < t) {
            if (p.node == v) f[a] += sb[j];
          } else {
            auto pos = std::lower_bound(slice.begin(), slice.end(), j) - slice.begin();
            f[a] += f[static_cast<std::size_t>(pos)];
          }
        }
        if (slice[a] == *z) {
          out[*z] = f[a];
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace

DependencyTable accumulate(const TemporalGraph&, const PredecessorData& pd, const WalkCounts& counts,
                           const VariantConfig& cfg, AccumulationStats* stats) {
  const auto& vs = pd.vertices();
  const std::size_t nv = vs.size();
  const NodeId s = pd.source();
  SuccessorTable succ(pd);

  std::vector<WalkCount> sb(nv);
  for (std::uint32_t i = 0; i < nv; ++i) sb[i] = counts.sigma_bar.at(vs[i].node, vs[i].time);

  DependencyTable out{TimeTable<double>(pd.num_nodes(), pd.horizon(), 0.0)};
  std::vector<double> p(nv, 0.0);
  std::vector<std::uint32_t> visits(nv, 0);
  std::vector<char> done(nv, 0);
  if (stats && stats->record_order) stats->successor_times.assign(nv, {});

  auto finish = [&](std::uint32_t x) {
    const TemporalNode xv = vs[x];
    if (sb[x].is_zero()) throw InvariantError("zero walk count at a predecessor-graph vertex");
    const double sx = sb[x].to_double();
    auto list = succ.of_index(x);
    double su = 0.0;
    for (std::size_t a = 0; a < list.size();) {
      const Time tb = vs[list[a]].time;
      for (; a < list.size() && vs[list[a]].time == tb; ++a) {
        const auto y = list[a];
        if (sb[y].is_zero()) throw InvariantError("zero walk count at a successor");
        su += sx / sb[y].to_double() * p[y];
        if (stats && stats->record_order) stats->successor_times[x].push_back(tb);
      }
      if (cfg.active()) {
        const Time lo = a < list.size() ? vs[list[a]].time + 1 : xv.time;
        for (Time t = lo; t <= tb; ++t) out.cum.at(xv.node, t) += su;
      }
    }
    double base = 0.0;
    if (xv.node != s && !counts.sigma_pair[xv.node].is_zero() &&
        attains_pair_cost(pd, counts, cfg, xv.node, xv.time)) {
      base = sx / counts.sigma_pair[xv.node].to_double();
    }
    p[x] = base + su;
    if (!cfg.active()) out.cum.at(xv.node, xv.time) = p[x];
    ++visits[x];
    if (stats) {
      ++stats->visits;
      stats->max_visits_per_vertex = std::max(stats->max_visits_per_vertex, visits[x]);
    }
  };

  // iterative post-order DFS from the source-initialised vertices
  std::vector<std::pair<std::uint32_t, std::size_t>> stack;
  for (std::uint32_t r = 0; r < nv; ++r) {
    if (!pd.is_source_init(r) || done[r]) continue;
    stack.emplace_back(r, 0);
    done[r] = 1;
    while (!stack.empty()) {
      auto& [x, pos] = stack.back();
      auto list = succ.of_index(x);
      if (pos < list.size()) {
        const auto y = list[pos++];
        if (done[y]) {
          if (stats) ++stats->memo_hits;
        } else {
          done[y] = 1;
          stack.emplace_back(y, 0);
        }
        continue;
      }
      finish(x);
      stack.pop_back();
    }
  }
  if (std::count(done.begin(), done.end(), 1) != static_cast<std::ptrdiff_t>(nv)) {
    throw InvariantError("predecessor-graph vertex unreachable from the source");
  }

  if (cfg.active()) {
    for (NodeId v = 0; v < pd.num_nodes(); ++v) {
      for (Time t = 0; t <= pd.horizon(); ++t) out.cum.at(v, t) += counts.delta_base.at(v, t);
    }
    if (!cfg.strict() && cfg.waiting_bounded(pd.horizon())) {
      auto loops = same_time_returns(pd, sb);
      for (std::uint32_t z = 0; z < nv; ++z) {
        if (loops[z].is_zero()) continue;
        out.cum.at(vs[z].node, vs[z].time) -= loops[z].to_double() / sb[z].to_double() * p[z];
      }
    }
  }
  return out;
}

DependencyTable accumulate_anchored(const PredecessorData& pd, const WalkCounts& counts,
                                    const VariantConfig& cfg) {
  const auto& vs = pd.vertices();
  const std::size_t nv = vs.size();
  SuccessorTable succ(pd);
  DependencyTable out{counts.delta_base};
  std::vector<double> cum_vertex(nv, 0.0);

  auto sigma = [&](std::uint32_t i) {
    const WalkCount c = counts.sigma.at(vs[i].node, vs[i].time);
    if (c.is_zero()) throw InvariantError("zero walk count at a successor");
    return c.to_double();
  };

  for (std::uint32_t x = static_cast<std::uint32_t>(nv); x-- > 0;) {
    const TemporalNode xv = vs[x];
    auto times = pd.vertex_times(xv.node);
    auto next = std::upper_bound(times.begin(), times.end(), xv.time);
    const Time top = !cfg.active() ? xv.time : next == times.end() ? pd.horizon() : *next - 1;
    const double sx = sigma(x);

    // times in [xv.time, top] share the anchor x; successors in decreasing time
    auto list = succ.of_index(x);
    std::size_t a = 0;
    double su = 0.0;
    for (Time t = top + 1; t-- > xv.time;) {
      for (; a < list.size() && vs[list[a]].time >= t; ++a) su += sx / sigma(list[a]) * cum_vertex[list[a]];
      out.cum.at(xv.node, t) = counts.delta_base.at(xv.node, t) + su;
    }
    cum_vertex[x] = out.cum.at(xv.node, xv.time);
  }
  return out;
}

}  // namespace tbc
