#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "onemedian/graph.hpp"
#include "onemedian/instance.hpp"

namespace onemedian::testing {

// Test-side random graphs, drawn with std::mt19937_64 directly so they do
// not share code with the library generators.
inline Graph random_connected_graph(NodeId n, std::size_t extra_edges, std::uint64_t seed,
                                    bool integer_costs = false) {
  std::mt19937_64 rng(seed);
  auto cost = [&] {
    if (integer_costs) return static_cast<double>(rng() % 10);
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  };
  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) {
    const auto u = static_cast<NodeId>(rng() % v);
    seen.insert({u, v});
    edges.push_back({u, v, cost()});
  }
  const std::size_t max_edges = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t target = std::min(max_edges, edges.size() + extra_edges);
  while (edges.size() < target) {
    auto u = static_cast<NodeId>(rng() % n);
    auto v = static_cast<NodeId>(rng() % n);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) continue;
    edges.push_back({u, v, cost()});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph::build(n, edges);
}

inline Instance random_instance(NodeId n, std::size_t extra_edges, NodeId m, std::uint64_t seed,
                                bool weighted = false, bool integer_costs = false) {
  Graph g = random_connected_graph(n, extra_edges, seed, integer_costs);
  std::mt19937_64 rng(seed ^ 0xabcdefULL);
  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), 0);
  std::shuffle(nodes.begin(), nodes.end(), rng);
  nodes.resize(m);
  std::vector<double> weights(m, 1.0);
  if (weighted) {
    for (auto& w : weights) w = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    weights[0] += 0.5;
  }
  return Instance(std::move(g), std::move(nodes), std::move(weights));
}

// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<double>> floyd_warshall(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInfinity));
  for (NodeId u = 0; u < n; ++u) {
    d[u][u] = 0.0;
    const auto nb = g.neighbors(u);
    const auto cs = g.costs(u);
    for (std::size_t k = 0; k < nb.size(); ++k) d[u][nb[k]] = std::min(d[u][nb[k]], cs[k]);
  }
  for (NodeId k = 0; k < n; ++k)
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline double objective(const Instance& inst, const std::vector<std::vector<double>>& d, NodeId i) {
  double z = 0.0;
  for (std::size_t j = 0; j < inst.customer_count(); ++j) z += inst.weights()[j] * d[inst.customers()[j]][i];
  return z;
}

inline bool rel_close(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline std::vector<Edge> figure_one_edges(double eps) {
  return {{0, 1, 2}, {0, 2, 2}, {0, 3, 2}, {1, 4, 1}, {2, 4, 1}, {3, 4, 1}, {0, 4, 2 + eps}};
}

}  // namespace onemedian::testing
