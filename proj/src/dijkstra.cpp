#include "onemedian/dijkstra.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "onemedian/error.hpp"

namespace onemedian {

namespace {

void check_node(const Graph& graph, NodeId node, const char* role) {
  if (node >= graph.node_count()) {
    throw Error(Errc::NodeIdOutOfRange, std::string(role) + " " + std::to_string(node) +
                                            " with n = " + std::to_string(graph.node_count()));
  }
}

}  // namespace

DeterminedDistances::DeterminedDistances(NodeId source, std::vector<Entry> settled)
    : source_(source), settled_(std::move(settled)), by_node_(settled_) {
  std::sort(by_node_.begin(), by_node_.end(),
            [](const Entry& a, const Entry& b) { return a.node < b.node; });
}

std::optional<Cost> DeterminedDistances::find(NodeId node) const {
  auto it = std::lower_bound(by_node_.begin(), by_node_.end(), node,
                             [](const Entry& e, NodeId id) { return e.node < id; });
  if (it == by_node_.end() || it->node != node) return std::nullopt;
  return it->distance;
}

DijkstraWorkspace::DijkstraWorkspace(NodeId node_count)
    : dist_(node_count, kInfinity), stamp_(node_count, 0), target_stamp_(node_count, 0) {}

void DijkstraWorkspace::next_epoch() {
  if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    std::fill(target_stamp_.begin(), target_stamp_.end(), 0);
    epoch_ = 0;
  }
  ++epoch_;
  heap_.clear();
}

// Min-heap on (distance, node id): equal distances pop in ascending id.
void DijkstraWorkspace::push(Cost d, NodeId v) {
  heap_.emplace_back(d, v);
  std::push_heap(heap_.begin(), heap_.end(), std::greater<>{});
}

DijkstraWorkspace::HeapItem DijkstraWorkspace::pop() {
  std::pop_heap(heap_.begin(), heap_.end(), std::greater<>{});
  HeapItem top = heap_.back();
  heap_.pop_back();
  return top;
}

void DijkstraWorkspace::full(const Graph& graph, NodeId source, std::span<Cost> out) {
  check_node(graph, source, "source");
  if (graph.node_count() != node_count() || out.size() != node_count()) {
    throw Error(Errc::InvalidInstance, "workspace size does not match graph");
  }
  std::fill(out.begin(), out.end(), kInfinity);
  heap_.clear();
  out[source] = 0.0;
  push(0.0, source);
  while (!heap_.empty()) {
    const auto [d, u] = pop();
    if (d != out[u]) continue;  // stale
    const auto nbrs = graph.neighbors(u);
    const auto cs = graph.costs(u);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const NodeId v = nbrs[k];
      const Cost nd = d + cs[k];
      if (nd < out[v]) {
        out[v] = nd;
        push(nd, v);
      }
    }
  }
}

DeterminedDistances DijkstraWorkspace::truncated(const Graph& graph, NodeId source,
                                                 std::span<const NodeId> targets) {
  check_node(graph, source, "source");
  if (graph.node_count() != node_count()) {
    throw Error(Errc::InvalidInstance, "workspace size does not match graph");
  }
  if (targets.empty()) throw Error(Errc::InvalidInstance, "truncated run needs at least one target");

  next_epoch();
  std::size_t remaining = 0;
  for (NodeId t : targets) {
    check_node(graph, t, "target");
    if (target_stamp_[t] != epoch_) {
      target_stamp_[t] = epoch_;
      ++remaining;
    }
  }

  std::vector<DeterminedDistances::Entry> settled;
  stamp_[source] = epoch_;
  dist_[source] = 0.0;
  push(0.0, source);
  while (!heap_.empty()) {
    const auto [d, u] = pop();
    if (d != dist_[u]) continue;  // stale
    settled.push_back({u, d});
    if (target_stamp_[u] == epoch_ && --remaining == 0) break;
    const auto nbrs = graph.neighbors(u);
    const auto cs = graph.costs(u);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const NodeId v = nbrs[k];
      const Cost nd = d + cs[k];
      if (stamp_[v] != epoch_) {
        stamp_[v] = epoch_;
        dist_[v] = nd;
        push(nd, v);
      } else if (nd < dist_[v]) {
        dist_[v] = nd;
        push(nd, v);
      }
    }
  }
  if (remaining != 0) {
    throw Error(Errc::TargetUnreachable, std::to_string(remaining) +
                                             " target(s) unreachable from " + std::to_string(source));
  }
  return DeterminedDistances(source, std::move(settled));
}

std::vector<Cost> dijkstra_full(const Graph& graph, NodeId source) {
  DijkstraWorkspace ws(graph.node_count());
  std::vector<Cost> out(graph.node_count());
  ws.full(graph, source, out);
  return out;
}

DeterminedDistances dijkstra_truncated(const Graph& graph, NodeId source,
                                       std::span<const NodeId> targets) {
  DijkstraWorkspace ws(graph.node_count());
  return ws.truncated(graph, source, targets);
}

}  // namespace onemedian
