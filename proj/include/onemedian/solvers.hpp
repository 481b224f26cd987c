#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string_view>
#include <optional>
#include <vector>

#include "onemedian/dijkstra.hpp"
#include "onemedian/instance.hpp"

namespace onemedian {

enum class Algorithm { Exact, ExactTruncated, SA, NNA, SPA };

std::string_view to_string(Algorithm algo) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

// Which objective a candidate value was computed with.
enum class EvalKind { Exact, SA, NNA, SPA };

struct CandidateEvaluation {
  NodeId node;
  Cost value;
  EvalKind kind;
};

struct SolveResult {
  Algorithm algorithm = Algorithm::Exact;
  NodeId facility = 0;
  // The algorithm's own minimum (z_sa, z_nna, z_spa or z).
  Cost estimated_value = 0.0;
  // True objective z(facility).
  Cost exact_value = 0.0;
  std::size_t candidate_count = 0;
  std::uint64_t settled_total = 0;
  std::chrono::nanoseconds wall_time{0};

  double wall_ms() const noexcept { return std::chrono::duration<double, std::milli>(wall_time).count(); }
};

// z(node): one truncated Dijkstra from `node` until every customer settles.
Cost evaluate_node(const Instance& instance, NodeId node);
Cost evaluate_node(const Instance& instance, NodeId node, DijkstraWorkspace& ws);

// Baseline: a full Dijkstra from every customer accumulated into one
// n-length array. Ties go to the smallest node id.
SolveResult solve_exact(const Instance& instance);

// Truncated-Dijkstra approximations. Each customer's search stops once all
// customers are settled. SA scores only nodes settled from every customer;
// NNA and SPA also score nodes settled from at least one customer, filling
// the missing distances with detours through customers.
SolveResult solve_tda_sa(const Instance& instance);
SolveResult solve_tda_nna(const Instance& instance);
SolveResult solve_tda_spa(const Instance& instance);

// Exact variant: after the truncated phase, keeps the nodes settled from at
// least two customers (one, when weights differ), re-runs the customers'
// searches until those nodes are settled everywhere and returns the best.
SolveResult solve_exact_truncated(const Instance& instance);

SolveResult solve(const Instance& instance, Algorithm algo);

// The m truncated searches of the approximation algorithms, arranged as a
// table with one row per node of V'' (sorted by node id) and one column per
// customer. A missing distance is +infinity.
class CandidateTable {
 public:
  static CandidateTable build(const Instance& instance, DijkstraWorkspace& ws);
  static CandidateTable build(const Instance& instance);

  std::size_t row_count() const noexcept { return nodes_.size(); }
  std::size_t customer_count() const noexcept { return m_; }
  NodeId node(std::size_t row) const noexcept { return nodes_[row]; }
  std::span<const NodeId> nodes() const noexcept { return nodes_; }
  std::optional<std::size_t> row_of(NodeId node) const;

  // Distance from customer j to the node of `row`, +infinity if unsettled.
  Cost distance(std::size_t row, std::size_t j) const noexcept { return table_[row * m_ + j]; }
  // Distance from customer j to customer k as settled by j's search.
  Cost customer_distance(std::size_t j, std::size_t k) const noexcept { return between_[j * m_ + k]; }
  // Number of customers whose search settled the node of `row`.
  std::size_t determined_count(std::size_t row) const noexcept { return determined_[row]; }
  bool in_all(std::size_t row) const noexcept { return determined_[row] == m_; }

  // Candidate evaluations; z_sa is +infinity outside V'.
  Cost z_sa(std::size_t row) const;
  Cost z_nna(std::size_t row) const;
  Cost z_spa(std::size_t row) const;

  std::uint64_t settled_total() const noexcept { return settled_total_; }
  // Nodes settled by customer j's truncated run.
  std::size_t settled_count(std::size_t j) const { return settled_count_[j]; }

 private:
  std::size_t m_ = 0;
  std::vector<Weight> weights_;
  std::vector<NodeId> nodes_;
  std::vector<Cost> table_;
  std::vector<Cost> between_;
  std::vector<std::uint32_t> determined_;
  std::uint64_t settled_total_ = 0;
  std::vector<std::size_t> settled_count_;
};

// Every candidate of the given objective: all n nodes for Exact, V' for SA,
// V'' for NNA and SPA. Sorted by node id.
std::vector<CandidateEvaluation> evaluate_candidates(const Instance& instance, EvalKind kind);

}  // namespace onemedian
