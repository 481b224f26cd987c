#pragma once

#include <span>
#include <vector>

#include "onemedian/graph.hpp"

namespace onemedian {

using Weight = double;

// A connected graph plus the customer set and per-customer weights.
// Construction validates everything once; an Instance is immutable.
class Instance {
 public:
  // Throws InvalidInstance (empty/duplicate/out-of-range customers, bad or
  // all-zero weights) or Disconnected.
  Instance(Graph graph, std::vector<NodeId> customers, std::vector<Weight> weights);

  const Graph& graph() const noexcept { return graph_; }
  std::span<const NodeId> customers() const noexcept { return customers_; }
  std::span<const Weight> weights() const noexcept { return weights_; }
  NodeId node_count() const noexcept { return graph_.node_count(); }
  std::size_t customer_count() const noexcept { return customers_.size(); }

  bool unit_weights() const noexcept;
  bool equal_weights() const noexcept;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Graph graph_;
  std::vector<NodeId> customers_;
  std::vector<Weight> weights_;
};

}  // namespace onemedian
