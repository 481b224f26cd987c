#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "onemedian/dijkstra.hpp"
#include "onemedian/error.hpp"
#include "onemedian/generators.hpp"
#include "onemedian/oracle.hpp"
#include "onemedian/solvers.hpp"
#include "onemedian/text_format.hpp"
#include "test_support.hpp"

namespace onemedian {
namespace {

std::string serialize(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

Errc error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::Io;
}

// BFS hop counts from the source, independent of the library.
std::vector<std::size_t> hops(const Graph& g, NodeId source) {
  std::vector<std::size_t> h(g.node_count(), SIZE_MAX);
  std::vector<NodeId> queue{source};
  h[source] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (NodeId v : g.neighbors(queue[k])) {
      if (h[v] == SIZE_MAX) {
        h[v] = h[queue[k]] + 1;
        queue.push_back(v);
      }
    }
  }
  return h;
}

TEST(GenRru, TwoNodesGiveOneEdge) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = gen_rru(2, 1, seed);
    ASSERT_EQ(inst.graph().edge_count(), 1u);
    EXPECT_EQ(inst.graph().edge_list()[0].u, 0u);
    EXPECT_EQ(inst.graph().edge_list()[0].v, 1u);
  }
}

TEST(GenRru, EdgeCountWithinRange) {
  const Instance inst = gen_rru(50, 10, 42);
  EXPECT_TRUE(inst.graph().is_connected());
  EXPECT_GE(inst.graph().edge_count(), 49u);
  EXPECT_LE(inst.graph().edge_count(), 1225u);
  EXPECT_EQ(inst.customer_count(), 10u);
  for (double w : inst.weights()) EXPECT_EQ(w, 1.0);
}

TEST(GenRru, CostsInUnitInterval) {
  const Instance inst = gen_rru(60, 5, 3);
  for (const Edge& e : inst.graph().edge_list()) {
    EXPECT_GE(e.cost, 0.0);
    EXPECT_LT(e.cost, 1.0);
  }
}

TEST(GenRru, Deterministic) {
  EXPECT_EQ(serialize(gen_rru(50, 10, 42)), serialize(gen_rru(50, 10, 42)));
  EXPECT_NE(serialize(gen_rru(50, 10, 42)), serialize(gen_rru(50, 10, 43)));
}

TEST(GenRru, EdgeCountsSpreadOverRange) {
  std::size_t low = 0, high = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto e = gen_rru(30, 3, seed).graph().edge_count();
    ASSERT_GE(e, 29u);
    ASSERT_LE(e, 435u);
    (e < 232 ? low : high)++;
  }
  EXPECT_GT(low, 60u);
  EXPECT_GT(high, 60u);
}

TEST(GenRru, CapExceeded) {
  EXPECT_EQ(error_of([] { gen_rru(6000, 2, 0); }), Errc::CapExceeded);
  EXPECT_EQ(error_of([] { gen_rru(101, 2, 0, 100); }), Errc::CapExceeded);
}

TEST(GenRrw, WeightsInUnitInterval) {
  const Instance inst = gen_rrw(50, 5, 1);
  bool positive = false;
  for (double w : inst.weights()) {
    EXPECT_GE(w, 0.0);
    EXPECT_LT(w, 1.0);
    positive = positive || w > 0;
  }
  EXPECT_TRUE(positive);
}

TEST(GenRrw, AllNodesCustomers) {
  const Instance inst = gen_rrw(2, 2, 9);
  auto c = std::vector<NodeId>(inst.customers().begin(), inst.customers().end());
  std::sort(c.begin(), c.end());
  EXPECT_EQ(c, (std::vector<NodeId>{0, 1}));
}

TEST(GenRrw, DeterministicWeights) {
  const Instance a = gen_rrw(40, 12, 5);
  const Instance b = gen_rrw(40, 12, 5);
  EXPECT_TRUE(std::equal(a.weights().begin(), a.weights().end(), b.weights().begin(), b.weights().end()));
}

TEST(GenRnu, FourNEdges) {
  const Instance inst = gen_rnu(10000, 8, 0);
  EXPECT_EQ(inst.graph().edge_count(), 40000u);
  EXPECT_TRUE(inst.graph().is_connected());
}

TEST(GenRnu, PoolSize) {
  EXPECT_EQ(pool_size(10000, 8), 16u);
  EXPECT_EQ(pool_size(16, 2), 4u);
  EXPECT_EQ(pool_size(10000, 2), 13u);
  EXPECT_EQ(pool_size(1, 1), 2u);
}

TEST(GenRnu, CustomersNearSourceInHops) {
  // With pool size p, every customer is within the hop radius that covers
  // p non-source nodes.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = gen_rnu(2000, 6, seed);
    const Graph& g = inst.graph();
    const NodeId p = pool_size(2000, 6);
    bool found_source = false;
    for (NodeId s = 0; s < g.node_count() && !found_source; ++s) {
      const auto h = hops(g, s);
      std::vector<std::size_t> others;
      for (NodeId v = 0; v < g.node_count(); ++v) {
        if (v != s) others.push_back(h[v]);
      }
      std::nth_element(others.begin(), others.begin() + (p - 1), others.end());
      const std::size_t radius = others[p - 1];
      found_source = std::all_of(inst.customers().begin(), inst.customers().end(),
                                 [&](NodeId c) { return c != s && h[c] <= radius; });
    }
    EXPECT_TRUE(found_source) << seed;
  }
}

TEST(GenRnu, BfsPoolOrder) {
  // 0 - 1 - 3, 0 - 2, 2 - 4
  const std::vector<Edge> edges{{0, 1, 0.5}, {1, 3, 0.5}, {0, 2, 0.5}, {2, 4, 0.5}};
  const Graph g = Graph::build(5, edges);
  EXPECT_EQ(bfs_pool(g, 0, 4), (std::vector<NodeId>{1, 2, 3, 4}));
  EXPECT_EQ(bfs_pool(g, 3, 2), (std::vector<NodeId>{1, 0}));
}

TEST(GenRdu, PoolSoundness) {
  const Instance inst = gen_rdu(10000, 8, 0);
  EXPECT_EQ(inst.graph().edge_count(), 40000u);
  const Graph& g = inst.graph();
  const NodeId p = pool_size(10000, 8);
  // Some source must put every customer at distance <= the p-th nearest.
  bool found = false;
  std::vector<Cost> dist(g.node_count());
  DijkstraWorkspace ws(g.node_count());
  for (NodeId s = 0; s < g.node_count() && !found; ++s) {
    if (std::find(inst.customers().begin(), inst.customers().end(), s) != inst.customers().end()) continue;
    ws.full(g, s, dist);
    std::vector<Cost> others;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (v != s) others.push_back(dist[v]);
    }
    std::nth_element(others.begin(), others.begin() + (p - 1), others.end());
    const Cost radius = others[p - 1];
    found = std::all_of(inst.customers().begin(), inst.customers().end(),
                        [&](NodeId c) { return dist[c] <= radius; });
  }
  EXPECT_TRUE(found);
}

TEST(GenRdu, DistancePoolOnStar) {
  const std::vector<Edge> edges{{0, 1, 0.4}, {0, 2, 0.1}, {0, 3, 0.3}, {0, 4, 0.2}};
  const Graph g = Graph::build(5, edges);
  EXPECT_EQ(distance_pool(g, 0, 2), (std::vector<NodeId>{2, 4}));
  EXPECT_EQ(distance_pool(g, 0, 4), (std::vector<NodeId>{2, 4, 3, 1}));
  // From a spoke the center comes first, then the others through it.
  EXPECT_EQ(distance_pool(g, 1, 2), (std::vector<NodeId>{0, 2}));
}

TEST(GenRdu, DistancePoolAgreesWithFullDijkstra) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = testing::random_connected_graph(80, 120, seed, false);
    const NodeId source = static_cast<NodeId>(seed % 80);
    const auto pool = distance_pool(g, source, 20);
    const auto dist = dijkstra_full(g, source);
    ASSERT_EQ(pool.size(), 20u);
    Cost inner = 0;
    for (NodeId v : pool) {
      ASSERT_NE(v, source);
      inner = std::max(inner, dist[v]);
    }
    for (NodeId v = 0; v < 80; ++v) {
      if (v == source || std::find(pool.begin(), pool.end(), v) != pool.end()) continue;
      ASSERT_GE(dist[v], inner);
    }
  }
}

TEST(GenRdu, Deterministic) {
  EXPECT_EQ(serialize(gen_rdu(500, 4, 9)), serialize(gen_rdu(500, 4, 9)));
}

TEST(GenGnu, HundredByHundred) {
  const auto shape = grid_shape(10000);
  EXPECT_EQ(shape.rows, 100u);
  EXPECT_EQ(shape.cols, 100u);
  const Instance inst = gen_gnu(10000, 8, 1);
  EXPECT_EQ(inst.graph().edge_count(), 19800u);
}

TEST(GenGnu, PartialGrid) {
  const auto shape = grid_shape(6);
  EXPECT_EQ(shape.rows, 2u);
  EXPECT_EQ(shape.cols, 3u);
  EXPECT_EQ(grid_graph(6, 0).edge_count(), 7u);
  // 7 nodes: 2 rows x 4 cols, last row has 3 cells.
  const Graph g7 = grid_graph(7, 0);
  EXPECT_EQ(g7.edge_count(), 3u + 2u + 3u);
}

TEST(GenGnu, EdgeCountFormula) {
  for (NodeId n = 2; n < 200; ++n) {
    const auto [rows, cols] = grid_shape(n);
    ASSERT_EQ(rows, static_cast<NodeId>(std::floor(std::sqrt(static_cast<double>(n)))));
    ASSERT_EQ(cols, (n + rows - 1) / rows);
    // Horizontal edges per row, vertical edges between kept cells.
    std::size_t expected = 0;
    for (NodeId v = 0; v < n; ++v) {
      if ((v % cols) + 1 < cols && v + 1 < n) ++expected;
      if (v + cols < n) ++expected;
    }
    const Graph g = grid_graph(n, n);
    ASSERT_EQ(g.edge_count(), expected) << n;
    ASSERT_TRUE(g.is_connected()) << n;
  }
}

TEST(GenGdu, MirrorsRdu) {
  const Instance inst = gen_gdu(10000, 8, 0);
  EXPECT_EQ(inst.graph().edge_count(), 19800u);
  EXPECT_EQ(serialize(gen_gdu(400, 3, 2)), serialize(gen_gdu(400, 3, 2)));
  const Graph g = grid_graph(25, 0);
  const auto pool = distance_pool(g, 12, 4);
  const auto dist = dijkstra_full(g, 12);
  for (NodeId v = 0; v < 25; ++v) {
    if (v == 12 || std::find(pool.begin(), pool.end(), v) != pool.end()) continue;
    for (NodeId p : pool) EXPECT_LE(dist[p], dist[v]);
  }
}

TEST(Generators, FeasibilityErrors) {
  EXPECT_EQ(error_of([] { gen_rnu(4, 3, 0); }), Errc::Feasibility);
  EXPECT_EQ(error_of([] { gen_gnu(4, 3, 0); }), Errc::Feasibility);
  EXPECT_EQ(error_of([] { gen_rru(5, 6, 0); }), Errc::Feasibility);
  EXPECT_EQ(error_of([] { gen_rnu(8, 1, 0); }), Errc::Feasibility);  // |E| = 4n exceeds the complete graph
  EXPECT_EQ(error_of([] { check_feasible(GenSpec{Family::GDU, 1, 1, 0}); }), Errc::Feasibility);
  try {
    gen_rnu(4, 3, 0);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("6"), std::string::npos);
  }
}

TEST(Generators, EveryFamilyValid) {
  for (Family f : {Family::RRU, Family::RRW, Family::RNU, Family::RDU, Family::GNU, Family::GDU}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Instance inst = generate(GenSpec{f, 300, 7, seed});
      EXPECT_TRUE(inst.graph().is_connected());
      EXPECT_EQ(inst.customer_count(), 7u);
      EXPECT_EQ(inst.node_count(), 300u);
      EXPECT_EQ(inst.unit_weights(), !is_weighted(f));
    }
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_EQ(parse_family("gdu"), Family::GDU);
  EXPECT_FALSE(parse_family("xyz").has_value());
}

TEST(GenTightSa, RatioMatchesFormula) {
  const Instance inst = gen_tight_sa(4, 0.01);
  EXPECT_EQ(inst.graph().edge_count(), 10u);
  EXPECT_EQ(solve_tda_sa(inst).exact_value, 6.0);
  const auto opt = brute_force_oracle(inst);
  EXPECT_EQ(opt.node, 4u);
  EXPECT_DOUBLE_EQ(opt.value, 5.01);
  EXPECT_NEAR(6 / opt.value, 1.1976, 1e-4);
}

TEST(GenTightSa, ApproachesBound) {
  const NodeId m = 10;
  const double eps = 1e-9;
  const Instance inst = gen_tight_sa(m, eps);
  const auto opt = brute_force_oracle(inst);
  EXPECT_EQ(opt.node, m);
  EXPECT_NEAR(opt.value, m + 1 + eps, 1e-12);
  EXPECT_NEAR(solve_tda_sa(inst).exact_value / opt.value, 2 - 4.0 / 11, 1e-6);
}

TEST(GenLbInstance, FigureOne) {
  const double eps = 0.001;
  const Instance inst = gen_lb_instance(eps);
  EXPECT_EQ(inst.graph().edge_count(), 7u);
  const auto expected = testing::figure_one_edges(eps);
  EXPECT_EQ(inst.graph(), Graph::build(5, expected));
  const auto opt = brute_force_oracle(inst);
  EXPECT_EQ(opt.node, 4u);
  EXPECT_DOUBLE_EQ(opt.value, 5.001);
  EXPECT_EQ(solve_tda_nna(inst).estimated_value, 6.0);
  EXPECT_EQ(solve_tda_spa(inst).estimated_value, 6.0);
  EXPECT_DOUBLE_EQ(solve_tda_spa(inst).exact_value / opt.value, 6 / (5 + eps));
}

TEST(ExpandWeighted, UnitWeightsAreIdentity) {
  const Instance inst = testing::random_instance(20, 20, 5, 1);
  const auto ex = expand_weighted(inst);
  EXPECT_EQ(ex.instance, inst);
  for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(ex.copies[j], std::vector<NodeId>{inst.customers()[j]});
}

TEST(ExpandWeighted, PathPreservesOptimum) {
  const std::vector<Edge> edges{{0, 1, 1}, {1, 2, 1}};
  const Instance inst(Graph::build(3, edges), {0, 2}, {2, 1});
  const auto ex = expand_weighted(inst);
  EXPECT_EQ(ex.instance.customer_count(), 3u);
  EXPECT_EQ(brute_force_oracle(ex.instance).value, brute_force_oracle(inst).value);
}

TEST(ExpandWeighted, CustomerCountIsWeightSum) {
  const std::vector<Edge> edges{{0, 1, 0.5}, {1, 2, 0.25}, {2, 3, 0.75}, {0, 3, 1.0}};
  const Instance inst(Graph::build(4, edges), {1, 3}, {3, 2});
  const auto ex = expand_weighted(inst);
  EXPECT_EQ(ex.instance.customer_count(), 5u);
  EXPECT_EQ(ex.instance.node_count(), 4u + 2u + 1u);
  EXPECT_TRUE(ex.instance.unit_weights());
  EXPECT_EQ(ex.copies[0].size(), 3u);
  EXPECT_EQ(ex.copies[1].size(), 2u);
  EXPECT_EQ(ex.copies[0][0], 1u);
  EXPECT_EQ(ex.copies[1][0], 3u);
  EXPECT_EQ(brute_force_oracle(ex.instance).value, brute_force_oracle(inst).value);
}

TEST(ExpandWeighted, PreservesDistancesThroughCopies) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::mt19937_64 rng(seed);
    const Instance base = testing::random_instance(25, 30, 4, seed);
    std::vector<double> w(4);
    for (auto& x : w) x = static_cast<double>(1 + rng() % 5);
    const Instance inst(base.graph(), std::vector<NodeId>(base.customers().begin(), base.customers().end()), w);
    const auto ex = expand_weighted(inst);
    const auto fw_orig = testing::floyd_warshall(inst.graph());
    const auto fw_exp = testing::floyd_warshall(ex.instance.graph());
    for (std::size_t j = 0; j < 4; ++j) {
      for (NodeId copy : ex.copies[j]) {
        for (NodeId v = 0; v < 25; ++v) {
          ASSERT_TRUE(testing::rel_close(fw_exp[copy][v], fw_orig[inst.customers()[j]][v]));
        }
      }
    }
    ASSERT_TRUE(testing::rel_close(brute_force_oracle(ex.instance).value, brute_force_oracle(inst).value));
  }
}

TEST(ExpandWeighted, Errors) {
  const std::vector<Edge> edges{{0, 1, 1}};
  const Instance fractional(Graph::build(2, edges), {0, 1}, {1.5, 1});
  EXPECT_EQ(error_of([&] { expand_weighted(fractional); }), Errc::NonIntegerWeight);
  const Instance heavy(Graph::build(2, edges), {0, 1}, {600, 500});
  EXPECT_EQ(error_of([&] { expand_weighted(heavy, 1000); }), Errc::CapExceeded);
  const Instance zero(Graph::build(2, edges), {0, 1}, {0, 1});
  EXPECT_EQ(error_of([&] { expand_weighted(zero); }), Errc::NonIntegerWeight);
}

}  // namespace
}  // namespace onemedian
