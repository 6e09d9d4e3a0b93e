#include "tbc/oracle.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>

#include "tbc/errors.hpp"

namespace tbc {

namespace {

using Rational = boost::multiprecision::cpp_rational;

void check_limits(const TemporalGraph& g, const OracleLimits& limits) {
  if (g.num_nodes() > limits.max_nodes || g.horizon() > limits.max_horizon) {
    throw SizeGuardError("graph too large for exhaustive enumeration");
  }
}

bool can_follow(const VariantConfig& cfg, Time prev, Time next) {
  if (cfg.strict() ? next <= prev : next < prev) return false;
  if (auto k = cfg.restless_bound(); k && next - prev > *k) return false;
  return true;
}

// Every walk from s, grouped by arrival state, keeping only the walks of
// minimum length per state.
class SourceEnumeration {
 public:
  SourceEnumeration(const TemporalGraph& g, NodeId s, const VariantConfig& cfg)
      : g_(g), s_(s), cfg_(cfg), min_len_(g.num_nodes(), g.horizon(), 0),
        walks_(g.num_nodes() * (static_cast<std::size_t>(g.horizon()) + 1)) {
    const auto reachable = reachable_states();
    std::size_t found = 0;
    const std::size_t cap = g.num_nodes() * g.distinct_times().size();
    for (std::size_t len = 1; found < reachable; ++len) {
      if (len > cap) throw InvariantError("optimal walk longer than n * |times|");
      std::vector<TemporalArc> prefix;
      found += extend(prefix, len);
    }
  }

  std::uint32_t min_len(NodeId v, Time t) const { return min_len_.at(v, t); }
  const std::vector<std::vector<TemporalArc>>& walks(NodeId v, Time t) const {
    return walks_[v * (static_cast<std::size_t>(g_.horizon()) + 1) + t];
  }

 private:
  std::size_t reachable_states() const {
    TimeTable<char> seen(g_.num_nodes(), g_.horizon(), 0);
    std::vector<TemporalNode> stack;
    for (const auto& a : g_.arcs()) {
      if (a.from == s_ && !seen.at(a.to, a.time)) {
        seen.at(a.to, a.time) = 1;
        stack.push_back({a.to, a.time});
      }
    }
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (const auto& a : g_.arcs()) {
        if (a.from == x.node && can_follow(cfg_, x.time, a.time) && !seen.at(a.to, a.time)) {
          seen.at(a.to, a.time) = 1;
          stack.push_back({a.to, a.time});
        }
      }
    }
    return static_cast<std::size_t>(std::count(seen.cells().begin(), seen.cells().end(), 1));
  }

  // Enumerates walks of exactly `len` transitions extending `prefix`;
  // returns how many states got their first walk.
  std::size_t extend(std::vector<TemporalArc>& prefix, std::size_t len) {
    if (prefix.size() == len) {
      const auto& last = prefix.back();
      auto& m = min_len_.at(last.to, last.time);
      if (m != 0 && m < len) return 0;
      std::size_t first = 0;
      if (m == 0) {
        m = static_cast<std::uint32_t>(len);
        first = 1;
      }
      walks_[last.to * (static_cast<std::size_t>(g_.horizon()) + 1) + last.time].push_back(prefix);
      return first;
    }
    std::size_t found = 0;
    for (const auto& a : g_.arcs()) {
      if (prefix.empty()) {
        if (a.from != s_) continue;
      } else if (a.from != prefix.back().to || !can_follow(cfg_, prefix.back().time, a.time)) {
        continue;
      }
      prefix.push_back(a);
      found += extend(prefix, len);
      prefix.pop_back();
    }
    return found;
  }

  const TemporalGraph& g_;
  NodeId s_;
  VariantConfig cfg_;
  TimeTable<std::uint32_t> min_len_;  // 0 = not reached
  std::vector<std::vector<std::vector<TemporalArc>>> walks_;
};

std::vector<TemporalNode> visits(const std::vector<TemporalArc>& w, const VariantConfig& cfg, Time horizon) {
  std::vector<TemporalNode> out{{w.front().from, w.front().time}};
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!cfg.active()) {
      out.push_back({w[i].to, w[i].time});
      continue;
    }
    const Time until = i + 1 < w.size() ? w[i + 1].time : horizon;
    for (Time t = w[i].time; t <= until; ++t) out.push_back({w[i].to, t});
  }
  std::vector<TemporalNode> distinct;
  std::set<TemporalNode> seen;
  for (const auto& x : out) {
    if (seen.insert(x).second) distinct.push_back(x);
  }
  return distinct;
}

// Arrival times at z of the optimal s-z walks.
std::vector<Time> optimal_times(const SourceEnumeration& e, NodeId z, const VariantConfig& cfg, Time horizon) {
  std::vector<Time> times;
  std::uint32_t best = 0;
  for (Time t = 0; t <= horizon; ++t) {
    const auto m = e.min_len(z, t);
    if (m == 0) continue;
    if (cfg.cost() == CostKind::kForemost) return {t};
    if (best == 0 || m < best) {
      best = m;
      times.clear();
    }
    if (m == best) times.push_back(t);
  }
  return times;
}

std::vector<std::vector<TemporalArc>> optimal_walks(const SourceEnumeration& e, NodeId z,
                                                    const VariantConfig& cfg, Time horizon) {
  std::vector<std::vector<TemporalArc>> out;
  for (Time t : optimal_times(e, z, cfg, horizon)) {
    const auto& ws = e.walks(z, t);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

}  // namespace

std::vector<EnumeratedWalk> enumerate_optimal_walks(const TemporalGraph& g, NodeId s, NodeId z,
                                                    const VariantConfig& cfg, const OracleLimits& limits) {
  check_limits(g, limits);
  if (s == z) return {};
  SourceEnumeration e(g, s, cfg);
  std::vector<EnumeratedWalk> out;
  for (auto& w : optimal_walks(e, z, cfg, g.horizon())) {
    auto vis = visits(w, cfg, g.horizon());
    out.push_back({std::move(w), std::move(vis)});
  }
  return out;
}

OracleCounts oracle_counts(const TemporalGraph& g, NodeId s, const VariantConfig& cfg,
                           const OracleLimits& limits) {
  check_limits(g, limits);
  const std::size_t n = g.num_nodes();
  const Time horizon = g.horizon();
  SourceEnumeration e(g, s, cfg);
  OracleCounts out{TimeTable<std::uint64_t>(n, horizon, 0), TimeTable<std::uint64_t>(n, horizon, 0),
                   std::vector<std::uint64_t>(n, 0)};
  for (NodeId v = 0; v < n; ++v) {
    if (v == s) continue;
    std::uint32_t best = 0;  // min over arrivals <= t
    std::uint64_t running = 0;
    for (Time t = 0; t <= horizon; ++t) {
      const auto m = e.min_len(v, t);
      const std::uint64_t c = m ? e.walks(v, t).size() : 0;
      if (!cfg.active()) {
        out.exact.at(v, t) = c;
        out.total.at(v, t) = c;
        continue;
      }
      if (m && (best == 0 || m < best)) {
        best = m;
        running = 0;
      }
      if (m && m == best) running += c;
      out.exact.at(v, t) = m && m == best ? c : 0;
      out.total.at(v, t) = running;
    }
    out.pair[v] = optimal_walks(e, v, cfg, horizon).size();
  }
  return out;
}

TimeTable<double> oracle_dependencies(const TemporalGraph& g, NodeId s, const VariantConfig& cfg,
                                      const OracleLimits& limits) {
  check_limits(g, limits);
  const std::size_t n = g.num_nodes();
  SourceEnumeration e(g, s, cfg);
  std::map<TemporalNode, Rational> dep;
  for (NodeId z = 0; z < n; ++z) {
    if (z == s) continue;
    const auto ws = optimal_walks(e, z, cfg, g.horizon());
    if (ws.empty()) continue;
    const Rational share(1, static_cast<long long>(ws.size()));
    for (const auto& w : ws) {
      for (const auto& x : visits(w, cfg, g.horizon())) {
        if (x.node != s) dep[x] += share;
      }
    }
  }
  TimeTable<double> out(n, g.horizon(), 0.0);
  for (const auto& [x, q] : dep) out.at(x.node, x.time) = q.convert_to<double>();
  return out;
}

BetweennessResult oracle_betweenness(const TemporalGraph& g, const VariantConfig& cfg,
                                     const OracleLimits& limits) {
  check_limits(g, limits);
  const std::size_t n = g.num_nodes();
  const Time horizon = g.horizon();
  std::map<TemporalNode, Rational> b;
  for (NodeId s = 0; s < n; ++s) {
    SourceEnumeration e(g, s, cfg);
    for (NodeId z = 0; z < n; ++z) {
      if (z == s) continue;
      const auto ws = optimal_walks(e, z, cfg, horizon);
      if (ws.empty()) continue;
      const Rational share(1, static_cast<long long>(ws.size()));
      for (const auto& w : ws) {
        for (const auto& x : visits(w, cfg, horizon)) {
          if (x.node != s && x.node != z) b[x] += share;
        }
      }
    }
  }
  BetweennessResult r{cfg, fingerprint(g), true, TimeTable<double>(n, horizon, 0.0),
                      std::vector<double>(n, 0.0), std::vector<double>(static_cast<std::size_t>(horizon) + 1, 0.0)};
  std::vector<Rational> bv(n), bt(static_cast<std::size_t>(horizon) + 1);
  for (const auto& [x, q] : b) {
    r.b_vt.at(x.node, x.time) = q.convert_to<double>();
    bv[x.node] += q;
    bt[x.time] += q;
  }
  for (NodeId v = 0; v < n; ++v) r.b_v[v] = bv[v].convert_to<double>();
  for (Time t = 0; t <= horizon; ++t) r.b_t[t] = bt[t].convert_to<double>();
  return r;
}

}  // namespace tbc
