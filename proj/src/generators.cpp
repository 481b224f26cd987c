#include "onemedian/generators.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "onemedian/dijkstra.hpp"
#include "onemedian/error.hpp"
#include "onemedian/random.hpp"

namespace onemedian {

namespace {

std::uint64_t pair_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::uint64_t complete_edge_count(NodeId n) {
  return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

struct Topology {
  NodeId n;
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::unordered_set<std::uint64_t> present;

  bool add(NodeId u, NodeId v) {
    if (u == v || !present.insert(pair_key(u, v)).second) return false;
    pairs.emplace_back(u, v);
    return true;
  }

  // Uniform random pairs by rejection until `target` edges exist.
  void fill_random(std::uint64_t target, Rng& rng) {
    while (pairs.size() < target) {
      add(static_cast<NodeId>(rng.below(n)), static_cast<NodeId>(rng.below(n)));
    }
  }
};

Graph with_random_costs(const Topology& topo, std::uint64_t seed) {
  Rng costs(seed, Stream::Costs);
  std::vector<Edge> edges;
  edges.reserve(topo.pairs.size());
  for (const auto& [u, v] : topo.pairs) edges.push_back({u, v, costs.uniform01()});
  return Graph::build(topo.n, edges);
}

Graph dense_random_graph(NodeId n, std::uint64_t seed) {
  Rng rng(seed, Stream::Topology);
  const std::uint64_t total = complete_edge_count(n);
  const std::uint64_t target = rng.between(n - 1, total);

  std::vector<NodeId> label(n);
  std::iota(label.begin(), label.end(), 0);
  for (NodeId i = n; i > 1; --i) std::swap(label[i - 1], label[rng.below(i)]);

  Topology topo{n, {}, {}};
  for (NodeId i = 1; i < n; ++i) topo.add(label[i], label[rng.below(i)]);

  const std::uint64_t extra = target - (n - 1);
  const std::uint64_t available = total - (n - 1);
  if (extra <= available / 2) {
    topo.fill_random(target, rng);
  } else {
    // Dense: pick the non-tree pairs to leave out instead.
    std::unordered_set<std::uint64_t> excluded;
    while (excluded.size() < available - extra) {
      const auto u = static_cast<NodeId>(rng.below(n));
      const auto v = static_cast<NodeId>(rng.below(n));
      if (u == v || topo.present.count(pair_key(u, v))) continue;
      excluded.insert(pair_key(u, v));
    }
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (!excluded.count(pair_key(u, v))) topo.add(u, v);
      }
    }
  }
  return with_random_costs(topo, seed);
}

Graph sparse_random_graph(NodeId n, std::uint64_t seed) {
  Rng rng(seed, Stream::Topology);
  Topology topo{n, {}, {}};
  topo.pairs.reserve(4 * static_cast<std::size_t>(n));
  topo.present.reserve(4 * static_cast<std::size_t>(n));
  for (NodeId i = 1; i < n; ++i) topo.add(i, static_cast<NodeId>(rng.below(i)));
  topo.fill_random(4 * static_cast<std::uint64_t>(n), rng);
  return with_random_costs(topo, seed);
}

std::vector<NodeId> uniform_customers(NodeId n, NodeId m, std::uint64_t seed) {
  std::vector<NodeId> all(n);
  std::iota(all.begin(), all.end(), 0);
  Rng rng(seed, Stream::Customers);
  return rng.sample<NodeId>(all, m);
}

std::vector<Weight> unit_weights(NodeId m) { return std::vector<Weight>(m, 1.0); }

std::vector<Weight> random_weights(NodeId m, std::uint64_t seed) {
  Rng rng(seed, Stream::Weights);
  for (;;) {
    std::vector<Weight> w(m);
    for (auto& x : w) x = rng.uniform01();
    if (std::any_of(w.begin(), w.end(), [](Weight x) { return x > 0.0; })) return w;
  }
}

enum class PoolRule { Hops, Distance };

Instance concentrated(Graph graph, NodeId m, std::uint64_t seed, PoolRule rule) {
  const NodeId n = graph.node_count();
  Rng source_rng(seed, Stream::Source);
  const auto source = static_cast<NodeId>(source_rng.below(n));
  const NodeId size = pool_size(n, m);
  const auto pool = rule == PoolRule::Hops ? bfs_pool(graph, source, size)
                                           : distance_pool(graph, source, size);
  Rng rng(seed, Stream::Customers);
  auto customers = rng.sample<NodeId>(pool, m);
  return Instance(std::move(graph), std::move(customers), unit_weights(m));
}

}  // namespace

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::RRU: return "RRU";
    case Family::RRW: return "RRW";
    case Family::RNU: return "RNU";
    case Family::RDU: return "RDU";
    case Family::GNU: return "GNU";
    case Family::GDU: return "GDU";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  std::string upper(name);
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (Family f : {Family::RRU, Family::RRW, Family::RNU, Family::RDU, Family::GNU, Family::GDU}) {
    if (to_string(f) == upper) return f;
  }
  return std::nullopt;
}

bool is_weighted(Family family) noexcept { return family == Family::RRW; }

NodeId pool_size(NodeId n, NodeId m) noexcept {
  const auto log2n = static_cast<NodeId>(n == 0 ? 0 : std::bit_width(n) - 1);
  return std::max<NodeId>(2 * m, log2n);
}

void check_feasible(const GenSpec& spec, NodeId dense_cap) {
  const auto ctx = std::string(to_string(spec.family)) + " n=" + std::to_string(spec.n) +
                   " m=" + std::to_string(spec.m);
  if (spec.n == 0 || spec.m == 0) throw Error(Errc::Feasibility, ctx + ": n and m must be positive");
  if (spec.m > spec.n) throw Error(Errc::Feasibility, ctx + ": m exceeds n");
  switch (spec.family) {
    case Family::RRU:
    case Family::RRW:
      if (spec.n > dense_cap) {
        throw Error(Errc::CapExceeded, ctx + ": dense families are capped at n <= " + std::to_string(dense_cap));
      }
      return;
    default:
      break;
  }
  const NodeId pool = pool_size(spec.n, spec.m);
  if (pool > spec.n - 1) {
    throw Error(Errc::Feasibility, ctx + ": customer pool " + std::to_string(pool) + " exceeds n-1 = " +
                                       std::to_string(spec.n - 1));
  }
  const bool sparse = spec.family == Family::RNU || spec.family == Family::RDU;
  if (sparse && 4 * static_cast<std::uint64_t>(spec.n) > complete_edge_count(spec.n)) {
    throw Error(Errc::Feasibility, ctx + ": |E| = 4n needs n >= 9");
  }
}

Instance generate(const GenSpec& spec, NodeId dense_cap) {
  check_feasible(spec, dense_cap);
  switch (spec.family) {
    case Family::RRU: return gen_rru(spec.n, spec.m, spec.seed, dense_cap);
    case Family::RRW: return gen_rrw(spec.n, spec.m, spec.seed, dense_cap);
    case Family::RNU: return gen_rnu(spec.n, spec.m, spec.seed);
    case Family::RDU: return gen_rdu(spec.n, spec.m, spec.seed);
    case Family::GNU: return gen_gnu(spec.n, spec.m, spec.seed);
    case Family::GDU: return gen_gdu(spec.n, spec.m, spec.seed);
  }
  throw Error(Errc::Config, "unknown family");
}

Instance gen_rru(NodeId n, NodeId m, std::uint64_t seed, NodeId dense_cap) {
  check_feasible({Family::RRU, n, m, seed}, dense_cap);
  return Instance(dense_random_graph(n, seed), uniform_customers(n, m, seed), unit_weights(m));
}

Instance gen_rrw(NodeId n, NodeId m, std::uint64_t seed, NodeId dense_cap) {
  check_feasible({Family::RRW, n, m, seed}, dense_cap);
  return Instance(dense_random_graph(n, seed), uniform_customers(n, m, seed), random_weights(m, seed));
}

Instance gen_rnu(NodeId n, NodeId m, std::uint64_t seed) {
  check_feasible({Family::RNU, n, m, seed});
  return concentrated(sparse_random_graph(n, seed), m, seed, PoolRule::Hops);
}

Instance gen_rdu(NodeId n, NodeId m, std::uint64_t seed) {
  check_feasible({Family::RDU, n, m, seed});
  return concentrated(sparse_random_graph(n, seed), m, seed, PoolRule::Distance);
}

Instance gen_gnu(NodeId n, NodeId m, std::uint64_t seed) {
  check_feasible({Family::GNU, n, m, seed});
  return concentrated(grid_graph(n, seed), m, seed, PoolRule::Hops);
}

Instance gen_gdu(NodeId n, NodeId m, std::uint64_t seed) {
  check_feasible({Family::GDU, n, m, seed});
  return concentrated(grid_graph(n, seed), m, seed, PoolRule::Distance);
}

GridShape grid_shape(NodeId n) {
  auto rows = static_cast<NodeId>(std::sqrt(static_cast<double>(n)));
  while (static_cast<std::uint64_t>(rows) * rows > n) --rows;
  while (static_cast<std::uint64_t>(rows + 1) * (rows + 1) <= n) ++rows;
  rows = std::max<NodeId>(rows, 1);
  return {rows, (n + rows - 1) / rows};
}

Graph grid_graph(NodeId n, std::uint64_t seed) {
  const GridShape shape = grid_shape(n);
  Topology topo{n, {}, {}};
  topo.pairs.reserve(2 * static_cast<std::size_t>(n));
  for (NodeId id = 0; id < n; ++id) {
    const NodeId col = id % shape.cols;
    if (col + 1 < shape.cols && id + 1 < n) topo.pairs.emplace_back(id, id + 1);
    if (static_cast<std::uint64_t>(id) + shape.cols < n) topo.pairs.emplace_back(id, id + shape.cols);
  }
  return with_random_costs(topo, seed);
}

std::vector<NodeId> bfs_pool(const Graph& graph, NodeId source, NodeId size) {
  std::vector<char> seen(graph.node_count(), 0);
  std::deque<NodeId> queue{source};
  seen[source] = 1;
  std::vector<NodeId> pool;
  pool.reserve(size);
  while (!queue.empty() && pool.size() < size) {
    const NodeId u = queue.front();
    queue.pop_front();
    if (u != source) pool.push_back(u);
    for (NodeId v : graph.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }
  if (pool.size() < size) throw Error(Errc::Feasibility, "graph too small for customer pool");
  return pool;
}

std::vector<NodeId> distance_pool(const Graph& graph, NodeId source, NodeId size) {
  const auto dist = dijkstra_full(graph, source);
  std::vector<NodeId> order;
  order.reserve(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (v != source && dist[v] != kInfinity) order.push_back(v);
  }
  if (order.size() < size) throw Error(Errc::Feasibility, "graph too small for customer pool");
  auto closer = [&](NodeId a, NodeId b) { return dist[a] != dist[b] ? dist[a] < dist[b] : a < b; };
  std::partial_sort(order.begin(), order.begin() + size, order.end(), closer);
  order.resize(size);
  return order;
}

Instance gen_tight_sa(NodeId m, double epsilon) {
  if (m < 4) throw Error(Errc::InvalidInstance, "tight instance needs m >= 4");
  if (!(epsilon > 0.0)) throw Error(Errc::InvalidInstance, "epsilon must be positive");
  std::vector<Edge> edges;
  for (NodeId i = 0; i < m; ++i) {
    for (NodeId j = i + 1; j < m; ++j) edges.push_back({i, j, 2.0});
  }
  edges.push_back({0, m, 2.0 + epsilon});
  for (NodeId i = 1; i < m; ++i) edges.push_back({i, m, 1.0});
  std::vector<NodeId> customers(m);
  std::iota(customers.begin(), customers.end(), 0);
  return Instance(Graph::build(m + 1, edges), std::move(customers), unit_weights(m));
}

Instance gen_lb_instance(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw Error(Errc::InvalidInstance, "epsilon must lie in (0, 1)");
  const std::vector<Edge> edges{{0, 1, 2.0}, {0, 2, 2.0}, {0, 3, 2.0}, {1, 4, 1.0},
                                {2, 4, 1.0}, {3, 4, 1.0}, {0, 4, 2.0 + epsilon}};
  return Instance(Graph::build(5, edges), {0, 1, 2, 3}, unit_weights(4));
}

Expansion expand_weighted(const Instance& instance, std::uint64_t cap) {
  const auto customers = instance.customers();
  const auto weights = instance.weights();
  std::uint64_t total = 0;
  for (Weight w : weights) {
    if (!(w >= 1.0) || w != std::floor(w)) {
      throw Error(Errc::NonIntegerWeight, "weight " + std::to_string(w) + " is not a positive integer");
    }
    if (w > static_cast<double>(cap)) throw Error(Errc::CapExceeded, "weight sum exceeds cap");
    total += static_cast<std::uint64_t>(w);
  }
  if (total > cap) throw Error(Errc::CapExceeded, "weight sum " + std::to_string(total) + " exceeds cap");

  const Graph& g = instance.graph();
  std::vector<Edge> edges = g.edge_list();
  NodeId next = g.node_count();
  Expansion out{instance, {}};
  out.copies.resize(customers.size());
  for (std::size_t j = 0; j < customers.size(); ++j) {
    const NodeId c = customers[j];
    auto& copies = out.copies[j];
    copies.push_back(c);
    const auto w = static_cast<std::uint64_t>(weights[j]);
    for (std::uint64_t k = 1; k < w; ++k) {
      const NodeId x = next++;
      for (NodeId y : copies) edges.push_back({y, x, 0.0});
      const auto nbrs = g.neighbors(c);
      const auto cs = g.costs(c);
      for (std::size_t a = 0; a < nbrs.size(); ++a) edges.push_back({x, nbrs[a], cs[a]});
      copies.push_back(x);
    }
  }

  std::vector<NodeId> expanded_customers;
  for (const auto& copies : out.copies) {
    expanded_customers.insert(expanded_customers.end(), copies.begin(), copies.end());
  }
  const auto m = static_cast<NodeId>(expanded_customers.size());
  out.instance = Instance(Graph::build(next, edges), std::move(expanded_customers), unit_weights(m));
  return out;
}

}  // namespace onemedian
