#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "onemedian/instance.hpp"

namespace onemedian {

// Random instance families:
//   RRU / RRW  random graph, |E| ~ U[n-1, n(n-1)/2], customers uniform over V,
//              unit weights (RRU) or U[0,1) weights (RRW).
//   RNU / RDU  random graph with |E| = 4n; customers drawn from the nearest
//              nodes of a random source by hop count (RNU) or distance (RDU).
//   GNU / GDU  near-square grid; customers drawn like RNU / RDU.
// Edge costs are U[0,1) for every family.
enum class Family { RRU, RRW, RNU, RDU, GNU, GDU };

std::string_view to_string(Family family) noexcept;
// Case-insensitive.
std::optional<Family> parse_family(std::string_view name) noexcept;
bool is_weighted(Family family) noexcept;

struct GenSpec {
  Family family = Family::RRU;
  NodeId n = 0;
  NodeId m = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

inline constexpr NodeId kDefaultDenseCap = 5000;

// max{2m, floor(log2 n)}: size of the neighborhood customers are drawn from.
NodeId pool_size(NodeId n, NodeId m) noexcept;

// Throws Feasibility (or CapExceeded for RRU/RRW above `dense_cap`).
void check_feasible(const GenSpec& spec, NodeId dense_cap = kDefaultDenseCap);

Instance generate(const GenSpec& spec, NodeId dense_cap = kDefaultDenseCap);

Instance gen_rru(NodeId n, NodeId m, std::uint64_t seed, NodeId dense_cap = kDefaultDenseCap);
Instance gen_rrw(NodeId n, NodeId m, std::uint64_t seed, NodeId dense_cap = kDefaultDenseCap);
Instance gen_rnu(NodeId n, NodeId m, std::uint64_t seed);
Instance gen_rdu(NodeId n, NodeId m, std::uint64_t seed);
Instance gen_gnu(NodeId n, NodeId m, std::uint64_t seed);
Instance gen_gdu(NodeId n, NodeId m, std::uint64_t seed);

struct GridShape {
  NodeId rows;
  NodeId cols;
};
// rows = floor(sqrt(n)), cols = ceil(n / rows); the first n cells in
// row-major order are kept.
GridShape grid_shape(NodeId n);
Graph grid_graph(NodeId n, std::uint64_t seed);

// Non-source nodes in BFS order (neighbors visited in ascending id).
std::vector<NodeId> bfs_pool(const Graph& graph, NodeId source, NodeId size);
// Non-source nodes in order of (distance, id) from the source.
std::vector<NodeId> distance_pool(const Graph& graph, NodeId source, NodeId size);

// Complete graph on m+1 nodes where TDA-SA reaches 2(m-1)/(m+1+eps):
// customers 0..m-1 pairwise at cost 2, node m joined to customer 0 at
// 2+eps and to every other customer at 1.
Instance gen_tight_sa(NodeId m, double epsilon);

// Five-node instance where TDA-NNA and TDA-SPA score 6 against an
// optimum of 5+eps at node 4. Customers 0..3, unit weights.
Instance gen_lb_instance(double epsilon);

inline constexpr std::uint64_t kDefaultExpansionCap = 1'000'000;

struct Expansion {
  Instance instance;
  // copies[j]: the expanded customers standing in for original customer j.
  // copies[j][0] is the original node id; every original node keeps its id.
  std::vector<std::vector<NodeId>> copies;
};

// Replaces a customer of integer weight w by w unit-weight customers joined
// by zero-cost edges, each wired to the original neighbors at the original
// costs. Throws NonIntegerWeight or CapExceeded (sum of weights > cap).
Expansion expand_weighted(const Instance& instance, std::uint64_t cap = kDefaultExpansionCap);

}  // namespace onemedian
