#include "onemedian/solvers.hpp"

#include <algorithm>
#include <limits>

#include "onemedian/error.hpp"

namespace onemedian {

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::uint32_t kNoRow = std::numeric_limits<std::uint32_t>::max();

struct Best {
  NodeId node = 0;
  Cost value = kInfinity;
  bool found = false;

  // Candidates are offered in ascending node id, so strict < keeps the
  // smallest id among ties.
  void offer(NodeId candidate, Cost v) {
    if (!found || v < value) {
      node = candidate;
      value = v;
      found = true;
    }
  }
};

}  // namespace

std::string_view to_string(Algorithm algo) noexcept {
  switch (algo) {
    case Algorithm::Exact: return "exact";
    case Algorithm::ExactTruncated: return "exact_truncated";
    case Algorithm::SA: return "sa";
    case Algorithm::NNA: return "nna";
    case Algorithm::SPA: return "spa";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  for (Algorithm a : {Algorithm::Exact, Algorithm::ExactTruncated, Algorithm::SA, Algorithm::NNA,
                      Algorithm::SPA}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

Cost evaluate_node(const Instance& instance, NodeId node, DijkstraWorkspace& ws) {
  const auto run = ws.truncated(instance.graph(), node, instance.customers());
  Cost z = 0.0;
  for (std::size_t j = 0; j < instance.customer_count(); ++j) {
    z += instance.weights()[j] * *run.find(instance.customers()[j]);
  }
  return z;
}

Cost evaluate_node(const Instance& instance, NodeId node) {
  DijkstraWorkspace ws(instance.node_count());
  return evaluate_node(instance, node, ws);
}

SolveResult solve_exact(const Instance& instance) {
  const auto start = Clock::now();
  const Graph& g = instance.graph();
  const NodeId n = g.node_count();
  DijkstraWorkspace ws(n);
  std::vector<Cost> dist(n);
  std::vector<Cost> acc(n, 0.0);
  for (std::size_t j = 0; j < instance.customer_count(); ++j) {
    ws.full(g, instance.customers()[j], dist);
    const Weight w = instance.weights()[j];
    for (NodeId i = 0; i < n; ++i) acc[i] += w * dist[i];
  }
  Best best;
  for (NodeId i = 0; i < n; ++i) best.offer(i, acc[i]);

  SolveResult r;
  r.algorithm = Algorithm::Exact;
  r.facility = best.node;
  r.estimated_value = best.value;
  r.exact_value = best.value;
  r.candidate_count = n;
  r.settled_total = static_cast<std::uint64_t>(n) * instance.customer_count();
  r.wall_time = Clock::now() - start;
  return r;
}

CandidateTable CandidateTable::build(const Instance& instance) {
  DijkstraWorkspace ws(instance.node_count());
  return build(instance, ws);
}

CandidateTable CandidateTable::build(const Instance& instance, DijkstraWorkspace& ws) {
  const auto customers = instance.customers();
  const std::size_t m = customers.size();

  std::vector<DeterminedDistances> runs;
  runs.reserve(m);
  CandidateTable t;
  t.m_ = m;
  t.weights_.assign(instance.weights().begin(), instance.weights().end());
  for (NodeId c : customers) {
    runs.push_back(ws.truncated(instance.graph(), c, customers));
    t.settled_total_ += runs.back().size();
    t.settled_count_.push_back(runs.back().size());
  }

  std::vector<std::uint32_t> row_of(instance.node_count(), kNoRow);
  for (const auto& run : runs) {
    for (const auto& e : run.settled()) {
      if (row_of[e.node] == kNoRow) {
        row_of[e.node] = 0;
        t.nodes_.push_back(e.node);
      }
    }
  }
  std::sort(t.nodes_.begin(), t.nodes_.end());
  for (std::size_t r = 0; r < t.nodes_.size(); ++r) row_of[t.nodes_[r]] = static_cast<std::uint32_t>(r);

  t.table_.assign(t.nodes_.size() * m, kInfinity);
  t.determined_.assign(t.nodes_.size(), 0);
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& e : runs[j].settled()) {
      const std::uint32_t r = row_of[e.node];
      t.table_[r * m + j] = e.distance;
      ++t.determined_[r];
    }
  }

  t.between_.assign(m * m, kInfinity);
  for (std::size_t k = 0; k < m; ++k) {
    const std::uint32_t r = row_of[customers[k]];
    for (std::size_t j = 0; j < m; ++j) t.between_[j * m + k] = t.table_[r * m + j];
  }
  return t;
}

std::optional<std::size_t> CandidateTable::row_of(NodeId node) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
  if (it == nodes_.end() || *it != node) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

Cost CandidateTable::z_sa(std::size_t row) const {
  if (!in_all(row)) return kInfinity;
  Cost z = 0.0;
  for (std::size_t j = 0; j < m_; ++j) z += weights_[j] * distance(row, j);
  return z;
}

Cost CandidateTable::z_nna(std::size_t row) const {
  // Nearest customer among those whose search settled this node.
  std::size_t nearest = 0;
  for (std::size_t j = 1; j < m_; ++j) {
    if (distance(row, j) < distance(row, nearest)) nearest = j;
  }
  const Cost via = distance(row, nearest);
  Cost z = 0.0;
  for (std::size_t j = 0; j < m_; ++j) {
    const Cost known = distance(row, j);
    z += weights_[j] * (known != kInfinity ? known : customer_distance(j, nearest) + via);
  }
  return z;
}

Cost CandidateTable::z_spa(std::size_t row) const {
  Cost z = 0.0;
  for (std::size_t j = 0; j < m_; ++j) {
    // A settled distance is exact; estimate only the missing ones.
    Cost c = distance(row, j);
    if (c == kInfinity) {
      for (std::size_t k = 0; k < m_; ++k) c = std::min(c, customer_distance(j, k) + distance(row, k));
    }
    z += weights_[j] * c;
  }
  return z;
}

namespace {

SolveResult solve_truncated(const Instance& instance, Algorithm algo) {
  const auto start = Clock::now();
  DijkstraWorkspace ws(instance.node_count());
  const CandidateTable table = CandidateTable::build(instance, ws);

  Best best;
  std::size_t candidates = 0;
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    switch (algo) {
      case Algorithm::SA:
        if (!table.in_all(r)) continue;
        best.offer(table.node(r), table.z_sa(r));
        break;
      case Algorithm::NNA: best.offer(table.node(r), table.z_nna(r)); break;
      case Algorithm::SPA: best.offer(table.node(r), table.z_spa(r)); break;
      default: throw Error(Errc::InvalidInstance, "not a truncated approximation");
    }
    ++candidates;
  }

  SolveResult res;
  res.algorithm = algo;
  res.facility = best.node;
  res.estimated_value = best.value;
  res.candidate_count = candidates;
  res.settled_total = table.settled_total();
  if (algo == Algorithm::SA) {
    res.exact_value = best.value;
  } else {
    const auto run = ws.truncated(instance.graph(), best.node, instance.customers());
    Cost z = 0.0;
    for (std::size_t j = 0; j < instance.customer_count(); ++j) {
      z += instance.weights()[j] * *run.find(instance.customers()[j]);
    }
    res.exact_value = z;
    res.settled_total += run.size();
  }
  res.wall_time = Clock::now() - start;
  return res;
}

}  // namespace

SolveResult solve_tda_sa(const Instance& instance) { return solve_truncated(instance, Algorithm::SA); }
SolveResult solve_tda_nna(const Instance& instance) { return solve_truncated(instance, Algorithm::NNA); }
SolveResult solve_tda_spa(const Instance& instance) { return solve_truncated(instance, Algorithm::SPA); }

SolveResult solve_exact_truncated(const Instance& instance) {
  const auto start = Clock::now();
  const Graph& g = instance.graph();
  const auto customers = instance.customers();
  const std::size_t m = customers.size();
  DijkstraWorkspace ws(instance.node_count());
  const CandidateTable table = CandidateTable::build(instance, ws);
  std::uint64_t settled_total = table.settled_total();

  // With equal weights an optimum is settled from at least two customers;
  // otherwise from at least one.
  const std::size_t threshold = (instance.equal_weights() && m >= 2) ? 2 : 1;
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    if (table.determined_count(r) >= threshold) rows.push_back(r);
  }

  std::vector<NodeId> targets(customers.begin(), customers.end());
  for (std::size_t r : rows) targets.push_back(table.node(r));

  // Distances from each customer to the candidates, column-major by row.
  std::vector<Cost> dist(rows.size() * m);
  for (std::size_t j = 0; j < m; ++j) {
    const bool complete = std::all_of(rows.begin(), rows.end(),
                                      [&](std::size_t r) { return table.distance(r, j) != kInfinity; });
    if (complete) {
      for (std::size_t k = 0; k < rows.size(); ++k) dist[k * m + j] = table.distance(rows[k], j);
      continue;
    }
    // The rerun repeats the earlier prefix; only new settlements count.
    const auto run = ws.truncated(g, customers[j], targets);
    settled_total += run.size() - table.settled_count(j);
    for (std::size_t k = 0; k < rows.size(); ++k) dist[k * m + j] = *run.find(table.node(rows[k]));
  }

  Best best;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    Cost z = 0.0;
    for (std::size_t j = 0; j < m; ++j) z += instance.weights()[j] * dist[k * m + j];
    best.offer(table.node(rows[k]), z);
  }

  SolveResult res;
  res.algorithm = Algorithm::ExactTruncated;
  res.facility = best.node;
  res.estimated_value = best.value;
  res.exact_value = best.value;
  res.candidate_count = rows.size();
  res.settled_total = settled_total;
  res.wall_time = Clock::now() - start;
  return res;
}

SolveResult solve(const Instance& instance, Algorithm algo) {
  switch (algo) {
    case Algorithm::Exact: return solve_exact(instance);
    case Algorithm::ExactTruncated: return solve_exact_truncated(instance);
    case Algorithm::SA: return solve_tda_sa(instance);
    case Algorithm::NNA: return solve_tda_nna(instance);
    case Algorithm::SPA: return solve_tda_spa(instance);
  }
  throw Error(Errc::InvalidInstance, "unknown algorithm");
}

std::vector<CandidateEvaluation> evaluate_candidates(const Instance& instance, EvalKind kind) {
  std::vector<CandidateEvaluation> out;
  if (kind == EvalKind::Exact) {
    DijkstraWorkspace ws(instance.node_count());
    for (NodeId i = 0; i < instance.node_count(); ++i) {
      out.push_back({i, evaluate_node(instance, i, ws), kind});
    }
    return out;
  }
  const CandidateTable table = CandidateTable::build(instance);
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    switch (kind) {
      case EvalKind::SA:
        if (table.in_all(r)) out.push_back({table.node(r), table.z_sa(r), kind});
        break;
      case EvalKind::NNA: out.push_back({table.node(r), table.z_nna(r), kind}); break;
      case EvalKind::SPA: out.push_back({table.node(r), table.z_spa(r), kind}); break;
      case EvalKind::Exact: break;
    }
  }
  return out;
}

}  // namespace onemedian
