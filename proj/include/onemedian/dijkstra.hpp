#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "onemedian/graph.hpp"

namespace onemedian {

// Result of one truncated Dijkstra run: the settled nodes in settlement
// order with their exact distances. Nodes that were not settled have no
// entry; their distance from the source is unknown (treated as infinite).
class DeterminedDistances {
 public:
  struct Entry {
    NodeId node;
    Cost distance;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  DeterminedDistances() = default;
  DeterminedDistances(NodeId source, std::vector<Entry> settled);

  NodeId source() const noexcept { return source_; }
  std::span<const Entry> settled() const noexcept { return settled_; }
  std::size_t size() const noexcept { return settled_.size(); }

  std::optional<Cost> find(NodeId node) const;
  bool contains(NodeId node) const { return find(node).has_value(); }
  // +infinity for nodes that were not settled.
  Cost distance_or_infinity(NodeId node) const { return find(node).value_or(kInfinity); }

 private:
  NodeId source_ = 0;
  std::vector<Entry> settled_;
  std::vector<Entry> by_node_;
};

// Scratch state for repeated Dijkstra runs over graphs with a fixed node
// count. Reset between runs is O(1) through epoch stamps, so a truncated
// run costs time proportional to the part of the graph it touches.
// Not thread-safe; use one workspace per thread.
class DijkstraWorkspace {
 public:
  explicit DijkstraWorkspace(NodeId node_count);

  NodeId node_count() const noexcept { return static_cast<NodeId>(dist_.size()); }

  // Writes the shortest-path distance to every node into `out`
  // (size node_count). Unreachable nodes get +infinity.
  void full(const Graph& graph, NodeId source, std::span<Cost> out);

  // Settles nodes in (distance, node id) order and stops right after the
  // last member of `targets` is settled. Duplicate targets are allowed.
  // Throws TargetUnreachable if the frontier empties first.
  DeterminedDistances truncated(const Graph& graph, NodeId source,
                                std::span<const NodeId> targets);

 private:
  using HeapItem = std::pair<Cost, NodeId>;

  void next_epoch();
  void push(Cost d, NodeId v);
  HeapItem pop();

  std::vector<Cost> dist_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> target_stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<HeapItem> heap_;
};

std::vector<Cost> dijkstra_full(const Graph& graph, NodeId source);

DeterminedDistances dijkstra_truncated(const Graph& graph, NodeId source,
                                       std::span<const NodeId> targets);

}  // namespace onemedian
