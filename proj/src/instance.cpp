#include "onemedian/instance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "onemedian/error.hpp"

namespace onemedian {

Instance::Instance(Graph graph, std::vector<NodeId> customers, std::vector<Weight> weights)
    : graph_(std::move(graph)), customers_(std::move(customers)), weights_(std::move(weights)) {
  const NodeId n = graph_.node_count();
  if (n == 0) throw Error(Errc::InvalidInstance, "empty graph");
  if (customers_.empty()) throw Error(Errc::InvalidInstance, "at least one customer is required");
  if (customers_.size() > n) throw Error(Errc::InvalidInstance, "more customers than nodes");
  if (weights_.size() != customers_.size()) {
    throw Error(Errc::InvalidInstance, "customer and weight counts differ");
  }

  std::vector<char> seen(n, 0);
  for (NodeId c : customers_) {
    if (c >= n) throw Error(Errc::InvalidInstance, "customer id " + std::to_string(c) + " out of range");
    if (seen[c]) throw Error(Errc::InvalidInstance, "duplicate customer " + std::to_string(c));
    seen[c] = 1;
  }

  bool any_positive = false;
  for (Weight w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(Errc::InvalidInstance, "weights must be finite and non-negative");
    }
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) throw Error(Errc::InvalidInstance, "all customer weights are zero");

  if (!graph_.is_connected()) throw Error(Errc::Disconnected, "graph is not connected");
}

bool Instance::unit_weights() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](Weight w) { return w == 1.0; });
}

bool Instance::equal_weights() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [&](Weight w) { return w == weights_.front(); });
}

}  // namespace onemedian
