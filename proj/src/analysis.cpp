#include "tbc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tbc/errors.hpp"

namespace tbc {

Ranking make_ranking(std::span<const double> values) {
  Ranking r;
  r.entries.reserve(values.size());
  for (std::uint32_t k = 0; k < values.size(); ++k) r.entries.push_back({k, values[k]});
  std::stable_sort(r.entries.begin(), r.entries.end(),
                   [](const RankEntry& a, const RankEntry& b) { return a.value > b.value; });
  return r;
}

Ranking b_node(const BetweennessResult& r) { return make_ranking(r.b_v); }
Ranking b_time(const BetweennessResult& r) { return make_ranking(r.b_t); }

namespace {

std::vector<double> values_by_key(const Ranking& r) {
  std::vector<double> out(r.size());
  std::vector<char> seen(r.size(), 0);
  for (const auto& e : r.entries) {
    if (e.key >= r.size() || seen[e.key]) throw ArgumentError("ranking keys are not 0..n-1");
    seen[e.key] = 1;
    out[e.key] = e.value;
  }
  return out;
}

int sign(double x) { return (x > 0) - (x < 0); }

}  // namespace

double kendall_tau(const Ranking& a, const Ranking& b) {
  if (a.size() != b.size()) throw ArgumentError("rankings have different key domains");
  const auto x = values_by_key(a);
  const auto y = values_by_key(b);
  const std::size_t n = x.size();
  std::int64_t concordant_minus_discordant = 0, ties_x = 0, ties_y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int sx = sign(x[i] - x[j]);
      const int sy = sign(y[i] - y[j]);
      if (sx == 0) ++ties_x;
      if (sy == 0) ++ties_y;
      concordant_minus_discordant += sx * sy;
    }
  }
  const auto pairs = static_cast<std::int64_t>(n * (n - (n > 0)) / 2);
  const bool const_x = ties_x == pairs, const_y = ties_y == pairs;
  if (const_x || const_y) return const_x && const_y ? 1.0 : 0.0;
  return static_cast<double>(concordant_minus_discordant) /
         std::sqrt(static_cast<double>(pairs - ties_x) * static_cast<double>(pairs - ties_y));
}

std::size_t top_k_intersection(const Ranking& a, const Ranking& b, std::size_t k) {
  if (a.size() != b.size()) throw ArgumentError("rankings have different key domains");
  if (k == 0 || k > a.size()) throw ArgumentError("k must be in [1, domain size]");
  std::vector<std::uint32_t> ka, kb;
  for (std::size_t i = 0; i < k; ++i) {
    ka.push_back(a.entries[i].key);
    kb.push_back(b.entries[i].key);
  }
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  std::vector<std::uint32_t> common;
  std::set_intersection(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(common));
  return common.size();
}

std::vector<PrefixPoint> prefix_scan(const TemporalGraph& g, const VariantConfig& cfg,
                                     std::span<const double> mus, std::size_t k,
                                     const EngineOptions& options) {
  for (double mu : mus) {
    if (!(mu >= 0.0 && mu <= 1.0)) throw ArgumentError("mu must be in [0, 1]");
  }
  EngineOptions marginal = options;
  marginal.marginals_only = true;
  const auto full = b_node(compute_betweenness(g, cfg, marginal));
  std::vector<PrefixPoint> out;
  for (double mu : mus) {
    const auto part = b_node(compute_betweenness(prefix_graph(g, mu), cfg, marginal));
    out.push_back({mu, top_k_intersection(part, full, k)});
  }
  return out;
}

std::vector<HistogramBin> time_histogram(const BetweennessResult& r, std::size_t bins) {
  if (bins == 0) throw ArgumentError("bins must be positive");
  const Time horizon = r.graph.horizon;
  const double width = static_cast<double>(horizon) / static_cast<double>(bins);
  std::vector<HistogramBin> out;
  for (std::size_t i = 0; i < bins; ++i) out.push_back({width * i, width * (i + 1), 0.0});
  for (Time t = 0; t <= horizon; ++t) {
    const std::size_t i =
        horizon == 0 ? 0 : std::min(bins - 1, static_cast<std::size_t>(t) * bins / horizon);
    out[i].mass += r.b_t[t];
  }
  return out;
}

std::uint32_t default_restless_k(Time horizon) {
  return std::max<std::uint32_t>(1, static_cast<std::uint32_t>(std::ceil(0.1 * horizon - 1e-9)));
}

}  // namespace tbc
