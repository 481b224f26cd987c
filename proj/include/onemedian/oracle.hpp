#pragma once

#include <vector>

#include "onemedian/instance.hpp"

namespace onemedian {

inline constexpr NodeId kDefaultOracleCap = 2000;

// Reads ONEMEDIAN_ORACLE_CAP, falling back to kDefaultOracleCap.
NodeId oracle_cap_from_env();

// Single-source distances by Bellman-Ford edge relaxation. Shares no code
// with the Dijkstra engine.
std::vector<Cost> bellman_ford(const Graph& graph, NodeId source);

struct OracleResult {
  NodeId node;
  Cost value;
};

// Exact 1-median by Bellman-Ford from every customer; ties go to the
// smallest node id. Throws SizeGuard when n exceeds `cap`.
OracleResult brute_force_oracle(const Instance& instance, NodeId cap = kDefaultOracleCap);

}  // namespace onemedian
