#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "onemedian/generators.hpp"
#include "onemedian/oracle.hpp"
#include "onemedian/solvers.hpp"

namespace onemedian {

inline constexpr double kRatioTolerance = 1e-9;

struct CellSpec {
  Family family;
  NodeId n;
  NodeId m;
  friend bool operator==(const CellSpec&, const CellSpec&) = default;
};

struct SuiteConfig {
  std::vector<CellSpec> cells;
  std::size_t instances_per_cell = 1;
  std::uint64_t base_seed = 0;
  std::vector<Algorithm> algorithms{Algorithm::Exact, Algorithm::SA, Algorithm::NNA, Algorithm::SPA};
  // Switched off automatically for cells above oracle_cap.
  bool oracle = true;
  NodeId oracle_cap = kDefaultOracleCap;
  NodeId dense_cap = kDefaultDenseCap;
  std::size_t timing_repeats = 1;
  // When false, wall times are reported as zero so reports are reproducible
  // byte for byte.
  bool record_timing = true;
  unsigned threads = 0;  // 0: machine parallelism
  std::string output;  // report path prefix; "<output>.csv" and "<output>.json"
};

// Config file schema (JSON):
// {
//   "grid": [ {"families": ["rru", "rrw"], "n": [50], "m": [2, 4, 8]} ],
//   "instances_per_cell": 1000,
//   "seed": 1,
//   "algorithms": ["exact", "sa", "nna", "spa"],
//   "oracle": true,
//   "oracle_cap": 2000,
//   "dense_cap": 5000,
//   "timing_repeats": 1,
//   "record_timing": true,
//   "threads": 4,
//   "output": "reports/small"
// }
// Every key except "grid" is optional. Unknown keys, families or
// algorithms throw Config.
SuiteConfig parse_suite_config(const nlohmann::json& doc);
SuiteConfig load_suite_config(const std::filesystem::path& path);
void validate(const SuiteConfig& config);

// Pure function of its inputs, so any single trial can be re-run alone.
std::uint64_t derive_seed(std::uint64_t base_seed, std::size_t cell, std::size_t replicate) noexcept;

// value / optimum, with 0/0 read as 1.
double approximation_ratio(Cost value, Cost optimum) noexcept;

struct AlgorithmOutcome {
  Algorithm algorithm;
  SolveResult result;
  double ratio = 1.0;
  bool suboptimal = false;
};

struct ExperimentRecord {
  std::string family;
  NodeId n = 0;
  NodeId m = 0;
  std::uint64_t seed = 0;
  std::size_t cell = 0;
  std::size_t replicate = 0;
  bool weighted = false;
  std::optional<Cost> oracle_value;
  Cost reference_value = 0.0;
  std::vector<AlgorithmOutcome> outcomes;

  const AlgorithmOutcome* find(Algorithm algo) const;
};

struct TrialOptions {
  std::vector<Algorithm> algorithms{Algorithm::Exact, Algorithm::SA, Algorithm::NNA, Algorithm::SPA};
  bool oracle = true;
  NodeId oracle_cap = kDefaultOracleCap;
  std::size_t timing_repeats = 1;
  bool record_timing = true;
};

// Runs the selected algorithms on one instance. The reference optimum is
// solve_exact's value when exact is selected, otherwise the oracle's.
ExperimentRecord run_trial(const Instance& instance, std::string family_label,
                           const TrialOptions& options);

using CellCallback = std::function<void(const CellSpec&, std::size_t cell_index, std::size_t cell_count)>;

// Records come back ordered by (cell, replicate) whatever the thread count.
std::vector<ExperimentRecord> run_suite(const SuiteConfig& config, const CellCallback& on_cell_done = {});

}  // namespace onemedian
