#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace onemedian {

using NodeId = std::uint32_t;
using Cost = double;

inline constexpr Cost kInfinity = std::numeric_limits<Cost>::infinity();

struct Edge {
  NodeId u;
  NodeId v;
  Cost cost;
};

// Immutable CSR adjacency of an undirected graph with non-negative costs.
// Each undirected edge {u, v} is stored as the two arcs u->v and v->u with
// the same cost; neighbor lists are sorted by node id.
class Graph {
 public:
  Graph() = default;

  // Validates and builds. Throws Error with SelfLoop, NegativeCost,
  // NodeIdOutOfRange or DuplicateEdge. Input order does not matter.
  static Graph build(NodeId node_count, std::span<const Edge> edges);

  NodeId node_count() const noexcept { return node_count_; }
  std::size_t arc_count() const noexcept { return neighbors_.size(); }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId u) const noexcept {
    return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
  }
  std::span<const Cost> costs(NodeId u) const noexcept {
    return {costs_.data() + offsets_[u], costs_.data() + offsets_[u + 1]};
  }
  std::size_t degree(NodeId u) const noexcept { return offsets_[u + 1] - offsets_[u]; }

  std::span<const std::uint64_t> offsets() const noexcept { return offsets_; }
  std::span<const NodeId> neighbor_array() const noexcept { return neighbors_; }
  std::span<const Cost> cost_array() const noexcept { return costs_; }

  // Each undirected edge once, with u < v, ordered by (u, v).
  std::vector<Edge> edge_list() const;

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  NodeId node_count_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<NodeId> neighbors_;
  std::vector<Cost> costs_;
};

inline Graph build_graph(NodeId node_count, std::span<const Edge> edges) {
  return Graph::build(node_count, edges);
}

}  // namespace onemedian
