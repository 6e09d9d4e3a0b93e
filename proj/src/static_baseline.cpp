#include "tbc/static_baseline.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace tbc {

std::vector<double> brandes_static(const StaticGraph& g) {
  const std::size_t n = g.num_nodes;
  const auto adj = g.adjacency();
  std::vector<double> bc(n, 0.0);
  std::vector<std::vector<NodeId>> pred(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<std::int64_t> dist(n);
  std::vector<NodeId> order, queue;

  for (NodeId s = 0; s < n; ++s) {
    for (NodeId v = 0; v < n; ++v) pred[v].clear();
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    queue.assign(1, s);
    sigma[s] = 1.0;
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId v = queue[head];
      order.push_back(v);
      for (NodeId w : adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          pred[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : pred[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) bc[w] += delta[w];
    }
  }
  return bc;
}

std::vector<double> floyd_warshall_betweenness(const StaticGraph& g) {
  const std::size_t n = g.num_nodes;
  constexpr auto inf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges) d[u][v] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] == inf || d[k][j] == inf || i == j || k == i || k == j) continue;
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  // path counts by increasing distance
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> by_dist;
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] != inf) by_dist.push_back(j);
    }
    std::sort(by_dist.begin(), by_dist.end(), [&](auto a, auto b) { return d[i][a] < d[i][b]; });
    sigma[i][i] = 1.0;
    for (auto j : by_dist) {
      if (j == i) continue;
      for (auto [u, v] : g.edges) {
        if (v == j && d[i][u] != inf && d[i][u] + 1 == d[i][j]) sigma[i][j] += sigma[i][u];
      }
    }
  }
  std::vector<double> bc(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t || d[s][t] == inf) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == s || v == t || d[s][v] == inf || d[v][t] == inf) continue;
        if (d[s][v] + d[v][t] == d[s][t]) bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
      }
    }
  }
  return bc;
}

}  // namespace tbc
