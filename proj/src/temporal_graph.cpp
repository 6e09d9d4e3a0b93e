#include "tbc/temporal_graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "tbc/errors.hpp"

namespace tbc {
namespace {

struct ArcHash {
  std::size_t operator()(const TemporalArc& a) const noexcept {
    std::uint64_t h = a.from;
    h = h * 0x9E3779B97F4A7C15ULL ^ a.to;
    h = h * 0x9E3779B97F4A7C15ULL ^ a.time;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// CSR offsets from per-node counts.
std::vector<std::size_t> prefix_offsets(const std::vector<std::size_t>& counts) {
  std::vector<std::size_t> offsets(counts.size() + 1, 0);
  for (std::size_t i = 0; i < counts.size(); ++i) offsets[i + 1] = offsets[i] + counts[i];
  return offsets;
}

}  // namespace

TemporalGraph::TemporalGraph(std::vector<std::string> labels, std::vector<TemporalArc> arcs,
                             bool directed, std::optional<Time> horizon)
    : labels_(std::move(labels)), directed_(directed) {
  const std::size_t n = labels_.size();
  {
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels_) {
      if (!seen.insert(l).second) throw ArgumentError("duplicate node label '" + l + "'");
    }
  }

  std::unordered_set<TemporalArc, ArcHash> seen;
  Time max_time = 0;
  arcs_.reserve(arcs.size());
  for (const auto& a : arcs) {
    if (a.from >= n || a.to >= n) throw ArgumentError("arc endpoint out of range");
    if (a.from == a.to) throw ArgumentError("self-loop on node '" + labels_[a.from] + "'");
    if (!seen.insert(a).second) continue;
    arcs_.push_back(a);
    max_time = std::max(max_time, a.time);
  }
  if (horizon) {
    if (*horizon < max_time) throw ArgumentError("horizon is smaller than the largest arc time");
    horizon_ = *horizon;
  } else {
    horizon_ = max_time;
  }

  std::vector<std::size_t> out_count(n, 0);
  for (const auto& a : arcs_) ++out_count[a.from];
  out_offsets_ = prefix_offsets(out_count);
  out_.resize(arcs_.size());
  std::vector<std::size_t> cursor(out_offsets_.begin(), out_offsets_.end() - 1);
  for (const auto& a : arcs_) out_[cursor[a.from]++] = {a.to, a.time};
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(out_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[v]),
              out_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[v + 1]),
              [](const TimedNeighbor& x, const TimedNeighbor& y) {
                return x.time != y.time ? x.time < y.time : x.node < y.node;
              });
  }

  // Distinct per-node out and in times.
  std::vector<std::vector<Time>> outs(n), ins(n);
  for (const auto& a : arcs_) {
    outs[a.from].push_back(a.time);
    ins[a.to].push_back(a.time);
    distinct_times_.push_back(a.time);
  }
  auto flatten = [n](std::vector<std::vector<Time>>& per_node, std::vector<std::size_t>& offsets,
                     std::vector<Time>& flat) {
    std::vector<std::size_t> counts(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto& ts = per_node[v];
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
      counts[v] = ts.size();
    }
    offsets = prefix_offsets(counts);
    flat.reserve(offsets.back());
    for (auto& ts : per_node) flat.insert(flat.end(), ts.begin(), ts.end());
  };
  flatten(outs, out_time_offsets_, out_times_);
  flatten(ins, in_time_offsets_, in_times_);
  std::sort(distinct_times_.begin(), distinct_times_.end());
  distinct_times_.erase(std::unique(distinct_times_.begin(), distinct_times_.end()),
                        distinct_times_.end());
}

std::optional<NodeId> TemporalGraph::find(std::string_view label) const {
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) return static_cast<NodeId>(v);
  }
  return std::nullopt;
}

std::span<const TimedNeighbor> TemporalGraph::out_arcs(NodeId v) const {
  return {out_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const TimedNeighbor> TemporalGraph::out_arcs_between(NodeId v, Time lo, Time hi) const {
  auto all = out_arcs(v);
  if (lo > hi) return {};
  auto first = std::lower_bound(all.begin(), all.end(), lo,
                                [](const TimedNeighbor& x, Time t) { return x.time < t; });
  auto last = std::upper_bound(first, all.end(), hi,
                               [](Time t, const TimedNeighbor& x) { return t < x.time; });
  return {first, last};
}

std::span<const Time> TemporalGraph::out_times(NodeId v) const {
  return {out_times_.data() + out_time_offsets_[v], out_time_offsets_[v + 1] - out_time_offsets_[v]};
}

std::span<const Time> TemporalGraph::in_times(NodeId v) const {
  return {in_times_.data() + in_time_offsets_[v], in_time_offsets_[v + 1] - in_time_offsets_[v]};
}

std::uint64_t TemporalGraph::content_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(labels_.size());
  mix(horizon_);
  for (const auto& a : arcs_) {
    mix(a.from);
    mix(a.to);
    mix(a.time);
  }
  return h;
}

std::vector<std::vector<NodeId>> StaticGraph::adjacency() const {
  std::vector<std::vector<NodeId>> adj(num_nodes);
  for (const auto& [u, v] : edges) adj[u].push_back(v);
  return adj;
}

TemporalGraph parse_edge_list(std::istream& in, const ParseOptions& options) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<TemporalArc> arcs;

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string u, v, t, extra;
    if (!(fields >> u)) continue;  // blank
    if (u.front() == '#') continue;
    if (!(fields >> v >> t) || (fields >> extra)) {
      throw ParseError(line_no, "expected three fields 'u v t'");
    }
    if (t.front() == '-') throw ParseError(line_no, "negative time '" + t + "'");
    Time time = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), time);
    if (ec == std::errc::result_out_of_range) throw ParseError(line_no, "time out of range '" + t + "'");
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
      throw ParseError(line_no, "time is not a non-negative integer '" + t + "'");
    }
    if (u == v) throw ParseError(line_no, "self-loop on '" + u + "'");
    const NodeId a = intern(u);
    const NodeId b = intern(v);
    arcs.push_back({a, b, time});
    if (!options.directed) arcs.push_back({b, a, time});
  }
  if (arcs.empty()) throw ParseError(0, "graph has no arcs");

  if (options.compress_times) {
    std::vector<Time> times;
    times.reserve(arcs.size());
    for (const auto& a : arcs) times.push_back(a.time);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    for (auto& a : arcs) {
      a.time = static_cast<Time>(std::lower_bound(times.begin(), times.end(), a.time) - times.begin()) + 1;
    }
  }
  return TemporalGraph(std::move(labels), std::move(arcs), options.directed);
}

TemporalGraph parse_edge_list(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, options);
}

TemporalGraph read_edge_list_file(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_edge_list(in, options);
}

std::string write_edge_list(const TemporalGraph& g) {
  std::string out;
  for (const auto& a : g.arcs()) {
    out += g.label(a.from);
    out += ' ';
    out += g.label(a.to);
    out += ' ';
    out += std::to_string(a.time);
    out += '\n';
  }
  return out;
}

StaticGraph aggregate_static(const TemporalGraph& g) {
  StaticGraph s;
  s.num_nodes = g.num_nodes();
  s.edges.reserve(g.num_arcs());
  for (const auto& a : g.arcs()) s.edges.emplace_back(a.from, a.to);
  std::sort(s.edges.begin(), s.edges.end());
  s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
  return s;
}

TemporalGraph prefix_graph(const TemporalGraph& g, double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw ArgumentError("mu must lie in [0, 1]");
  const auto threshold = static_cast<Time>(std::floor(mu * static_cast<double>(g.horizon()) + 1e-9));  // 0.29*100 -> 29
  std::vector<TemporalArc> kept;
  for (const auto& a : g.arcs()) {
    if (a.time <= threshold) kept.push_back(a);
  }
  return TemporalGraph(g.labels(), std::move(kept), g.directed(), threshold);
}

}  // namespace tbc
