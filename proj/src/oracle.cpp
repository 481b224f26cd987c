#include "onemedian/oracle.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "onemedian/error.hpp"

namespace onemedian {

NodeId oracle_cap_from_env() {
  const char* raw = std::getenv("ONEMEDIAN_ORACLE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultOracleCap;
  NodeId cap = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, cap);
  if (ec != std::errc{} || ptr != end || cap == 0) {
    throw Error(Errc::Config, std::string("ONEMEDIAN_ORACLE_CAP must be a positive integer, got '") + raw + "'");
  }
  return cap;
}

std::vector<Cost> bellman_ford(const Graph& graph, NodeId source) {
  const NodeId n = graph.node_count();
  if (source >= n) throw Error(Errc::NodeIdOutOfRange, "source " + std::to_string(source));
  const auto edges = graph.edge_list();
  std::vector<Cost> dist(n, kInfinity);
  dist[source] = 0.0;
  for (NodeId round = 1; round < n; ++round) {
    bool changed = false;
    for (const Edge& e : edges) {
      if (dist[e.u] + e.cost < dist[e.v]) {
        dist[e.v] = dist[e.u] + e.cost;
        changed = true;
      }
      if (dist[e.v] + e.cost < dist[e.u]) {
        dist[e.u] = dist[e.v] + e.cost;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return dist;
}

OracleResult brute_force_oracle(const Instance& instance, NodeId cap) {
  const NodeId n = instance.node_count();
  if (n > cap) {
    throw Error(Errc::SizeGuard, "oracle limited to n <= " + std::to_string(cap) + ", got n = " +
                                     std::to_string(n));
  }
  std::vector<Cost> z(n, 0.0);
  for (std::size_t j = 0; j < instance.customer_count(); ++j) {
    const auto dist = bellman_ford(instance.graph(), instance.customers()[j]);
    for (NodeId i = 0; i < n; ++i) z[i] += instance.weights()[j] * dist[i];
  }
  OracleResult best{0, z[0]};
  for (NodeId i = 1; i < n; ++i) {
    if (z[i] < best.value) best = {i, z[i]};
  }
  return best;
}

}  // namespace onemedian
