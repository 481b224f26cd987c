#include "onemedian/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "onemedian/error.hpp"

namespace onemedian {

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

}  // namespace

Graph Graph::build(NodeId node_count, std::span<const Edge> edges) {
  if (node_count == 0) throw Error(Errc::InvalidInstance, "graph must have at least one node");

  std::vector<std::uint64_t> degree(static_cast<std::size_t>(node_count) + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw Error(Errc::NodeIdOutOfRange,
                  "edge " + edge_text(e) + " with n = " + std::to_string(node_count));
    }
    if (e.u == e.v) throw Error(Errc::SelfLoop, "edge " + edge_text(e));
    if (!(e.cost >= 0.0) || !std::isfinite(e.cost)) {
      throw Error(Errc::NegativeCost, "edge " + edge_text(e) + " needs a finite cost >= 0");
    }
    ++degree[e.u + 1];
    ++degree[e.v + 1];
  }

  Graph g;
  g.node_count_ = node_count;
  g.offsets_ = std::move(degree);
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

  const std::size_t arcs = g.offsets_.back();
  std::vector<std::pair<NodeId, Cost>> slots(arcs);
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    slots[cursor[e.u]++] = {e.v, e.cost};
    slots[cursor[e.v]++] = {e.u, e.cost};
  }

  g.neighbors_.resize(arcs);
  g.costs_.resize(arcs);
  for (NodeId u = 0; u < node_count; ++u) {
    auto first = slots.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]);
    auto last = slots.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]);
    std::sort(first, last, [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto it = first; it != last; ++it) {
      if (it != first && (it - 1)->first == it->first) {
        throw Error(Errc::DuplicateEdge, "edge " + edge_text({u, it->first, it->second}));
      }
      const auto k = static_cast<std::size_t>(it - slots.begin());
      g.neighbors_[k] = it->first;
      g.costs_[k] = it->second;
    }
  }
  return g;
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count_; ++u) {
    const auto nbrs = neighbors(u);
    const auto cs = costs(u);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (u < nbrs[k]) out.push_back({u, nbrs[k], cs[k]});
    }
  }
  return out;
}

bool Graph::is_connected() const {
  if (node_count_ == 0) return false;
  std::vector<char> seen(node_count_, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  NodeId reached = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == node_count_;
}

}  // namespace onemedian
