#include "tbc/betweenness.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <thread>

#include "tbc/dependency.hpp"
#include "tbc/errors.hpp"
#include "tbc/shortest_walks.hpp"
#include "tbc/walk_counting.hpp"

namespace tbc {

GraphFingerprint fingerprint(const TemporalGraph& g) {
  return {g.num_nodes(), g.num_arcs(), g.horizon(), g.content_hash()};
}

TimeTable<double> source_contribution(const TemporalGraph& g, NodeId s, const VariantConfig& cfg) {
  const auto pd = temporal_bfs(g, s, cfg);
  const auto counts = count_walks(pd, cfg);
  auto dep = accumulate(g, pd, counts, cfg);
  auto& cells = dep.cum.cells();
  const auto& base = counts.delta_base.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] -= base[i];
  for (auto& x : dep.cum.row(s)) x = 0.0;
  return std::move(dep.cum);
}

BetweennessResult compute_betweenness(const TemporalGraph& g, const VariantConfig& cfg,
                                      const EngineOptions& options) {
  const std::size_t n = g.num_nodes();
  const Time horizon = g.horizon();
  if (n * (static_cast<std::size_t>(horizon) + 1) > kMaxDenseCells) {
    throw ArgumentError("n*(T+1) too large for dense tables; try --compress-times");
  }
  unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));

  BetweennessResult r{cfg, fingerprint(g), !options.marginals_only, {}, std::vector<double>(n, 0.0),
                      std::vector<double>(static_cast<std::size_t>(horizon) + 1, 0.0)};
  TimeTable<double> total(options.marginals_only ? 0 : n, horizon, 0.0);

  std::vector<TimeTable<double>> slots(workers);
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t first = 0; first < n; first += workers) {
    const std::size_t batch = std::min<std::size_t>(workers, n - first);
    auto run = [&](std::size_t i) {
      try {
        slots[i] = source_contribution(g, static_cast<NodeId>(first + i), cfg);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    };
    if (batch == 1) {
      run(0);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t i = 0; i < batch; ++i) pool.emplace_back(run, i);
    }
    // reduce in source order
    for (std::size_t i = 0; i < batch; ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      const auto& c = slots[i];
      if (options.marginals_only) {
        for (NodeId v = 0; v < n; ++v) {
          for (Time t = 0; t <= horizon; ++t) {
            r.b_v[v] += c.at(v, t);
            r.b_t[t] += c.at(v, t);
          }
        }
      } else {
        auto& dst = total.cells();
        const auto& src = c.cells();
        for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += src[k];
      }
    }
  }

  const double scale = options.normalize && n > 2 ? 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2)) : 1.0;
  auto finalize = [scale](std::span<double> xs) {
    double magnitude = 0.0;
    for (double x : xs) magnitude = std::max(magnitude, std::abs(x));
    for (auto& x : xs) {
      if (x < 0.0) {
        if (x < -1e-12 * std::max(1.0, magnitude)) throw InvariantError("negative betweenness value");
        x = 0.0;
      }
      x *= scale;
    }
  };

  if (options.marginals_only) {
    finalize(r.b_v);
    finalize(r.b_t);
    return r;
  }

  finalize(total.cells());
  for (NodeId v = 0; v < n; ++v) {
    for (Time t = 0; t <= horizon; ++t) {
      r.b_v[v] += total.at(v, t);
      r.b_t[t] += total.at(v, t);
    }
  }
  r.b_vt = std::move(total);
  return r;
}

}  // namespace tbc
