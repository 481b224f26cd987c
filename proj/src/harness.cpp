#include "onemedian/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "onemedian/error.hpp"
#include "onemedian/random.hpp"

namespace onemedian {

namespace {

template <typename T>
std::vector<T> as_list(const nlohmann::json& v, const char* key) {
  if (v.is_array()) return v.get<std::vector<T>>();
  if (v.is_null()) throw Error(Errc::Config, std::string("'") + key + "' is missing");
  return {v.get<T>()};
}

std::string describe(const CellSpec& c) {
  return std::string(to_string(c.family)) + " n=" + std::to_string(c.n) + " m=" + std::to_string(c.m);
}

}  // namespace

SuiteConfig parse_suite_config(const nlohmann::json& doc) {
  static const std::set<std::string> known{"grid",        "instances_per_cell", "seed",
                                           "algorithms",  "oracle",             "oracle_cap",
                                           "dense_cap",   "timing_repeats",     "record_timing",
                                           "threads",     "output"};
  if (!doc.is_object()) throw Error(Errc::Config, "config must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) throw Error(Errc::Config, "unknown config key '" + key + "'");
  }

  SuiteConfig cfg;
  try {
    if (!doc.contains("grid") || !doc["grid"].is_array()) {
      throw Error(Errc::Config, "'grid' must be an array of {families, n, m} blocks");
    }
    for (const auto& block : doc["grid"]) {
      const auto families = as_list<std::string>(block.value("families", nlohmann::json{}), "families");
      const auto ns = as_list<NodeId>(block.value("n", nlohmann::json{}), "n");
      const auto ms = as_list<NodeId>(block.value("m", nlohmann::json{}), "m");
      for (const auto& name : families) {
        const auto family = parse_family(name);
        if (!family) throw Error(Errc::Config, "unknown family '" + name + "'");
        for (NodeId n : ns) {
          for (NodeId m : ms) cfg.cells.push_back({*family, n, m});
        }
      }
    }
    cfg.instances_per_cell = doc.value("instances_per_cell", cfg.instances_per_cell);
    cfg.base_seed = doc.value("seed", cfg.base_seed);
    if (doc.contains("algorithms")) {
      cfg.algorithms.clear();
      for (const auto& name : doc["algorithms"].get<std::vector<std::string>>()) {
        const auto algo = parse_algorithm(name);
        if (!algo) throw Error(Errc::Config, "unknown algorithm '" + name + "'");
        cfg.algorithms.push_back(*algo);
      }
    }
    cfg.oracle = doc.value("oracle", cfg.oracle);
    cfg.oracle_cap = doc.value("oracle_cap", cfg.oracle_cap);
    cfg.dense_cap = doc.value("dense_cap", cfg.dense_cap);
    cfg.timing_repeats = doc.value("timing_repeats", cfg.timing_repeats);
    cfg.record_timing = doc.value("record_timing", cfg.record_timing);
    cfg.threads = doc.value("threads", cfg.threads);
    cfg.output = doc.value("output", cfg.output);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Config, e.what());
  }
  validate(cfg);
  return cfg;
}

SuiteConfig load_suite_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open config '" + path.string() + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Config, path.string() + ": " + e.what());
  }
  return parse_suite_config(doc);
}

void validate(const SuiteConfig& config) {
  if (config.cells.empty()) throw Error(Errc::Config, "no grid cells");
  if (config.instances_per_cell == 0) throw Error(Errc::Config, "instances_per_cell must be >= 1");
  if (config.algorithms.empty()) throw Error(Errc::Config, "no algorithms selected");
  if (config.timing_repeats == 0) throw Error(Errc::Config, "timing_repeats must be >= 1");
  const bool has_exact =
      std::find(config.algorithms.begin(), config.algorithms.end(), Algorithm::Exact) != config.algorithms.end();
  for (const auto& cell : config.cells) {
    if (!has_exact && !(config.oracle && cell.n <= config.oracle_cap)) {
      throw Error(Errc::Config, describe(cell) + ": no reference optimum (select exact or enable the oracle)");
    }
  }
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::size_t cell, std::size_t replicate) noexcept {
  return splitmix64(splitmix64(base_seed ^ splitmix64(cell)) ^ replicate);
}

double approximation_ratio(Cost value, Cost optimum) noexcept {
  if (optimum == 0.0) return value <= 0.0 ? 1.0 : kInfinity;
  return value / optimum;
}

const AlgorithmOutcome* ExperimentRecord::find(Algorithm algo) const {
  for (const auto& o : outcomes) {
    if (o.algorithm == algo) return &o;
  }
  return nullptr;
}

ExperimentRecord run_trial(const Instance& instance, std::string family_label, const TrialOptions& options) {
  ExperimentRecord rec;
  rec.family = std::move(family_label);
  rec.n = instance.node_count();
  rec.m = static_cast<NodeId>(instance.customer_count());
  rec.weighted = !instance.equal_weights();

  for (Algorithm algo : options.algorithms) {
    AlgorithmOutcome out{algo, {}, 1.0, false};
    std::chrono::nanoseconds total{0};
    for (std::size_t r = 0; r < options.timing_repeats; ++r) {
      SolveResult res = solve(instance, algo);
      total += res.wall_time;
      if (r == 0) out.result = res;
    }
    out.result.wall_time = options.record_timing
                               ? total / static_cast<std::int64_t>(options.timing_repeats)
                               : std::chrono::nanoseconds{0};
    rec.outcomes.push_back(out);
  }

  if (options.oracle && instance.node_count() <= options.oracle_cap) {
    rec.oracle_value = brute_force_oracle(instance, options.oracle_cap).value;
  }
  if (const auto* exact = rec.find(Algorithm::Exact)) {
    rec.reference_value = exact->result.exact_value;
  } else if (rec.oracle_value) {
    rec.reference_value = *rec.oracle_value;
  } else {
    throw Error(Errc::Config, "no reference optimum for trial (select exact or enable the oracle)");
  }

  for (auto& out : rec.outcomes) {
    out.ratio = approximation_ratio(out.result.exact_value, rec.reference_value);
    out.suboptimal = out.ratio > 1.0 + kRatioTolerance;
  }
  return rec;
}

std::vector<ExperimentRecord> run_suite(const SuiteConfig& config, const CellCallback& on_cell_done) {
  validate(config);
  const std::size_t per_cell = config.instances_per_cell;
  std::vector<ExperimentRecord> records(config.cells.size() * per_cell);
  const unsigned threads =
      config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());

  for (std::size_t c = 0; c < config.cells.size(); ++c) {
    const CellSpec& cell = config.cells[c];
    TrialOptions options{config.algorithms, config.oracle && cell.n <= config.oracle_cap, config.oracle_cap,
                         config.timing_repeats, config.record_timing};
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
      for (;;) {
        const std::size_t rep = next.fetch_add(1);
        if (rep >= per_cell) return;
        try {
          const std::uint64_t seed = derive_seed(config.base_seed, c, rep);
          const Instance inst = generate({cell.family, cell.n, cell.m, seed}, config.dense_cap);
          ExperimentRecord rec = run_trial(inst, std::string(to_string(cell.family)), options);
          rec.seed = seed;
          rec.cell = c;
          rec.replicate = rep;
          records[c * per_cell + rep] = std::move(rec);
        } catch (const Error& e) {
          std::lock_guard lock(failure_mutex);
          if (!failure) {
            failure = std::make_exception_ptr(
                Error(e.code(), "cell " + std::to_string(c) + " (" + describe(cell) + "), replicate " +
                                    std::to_string(rep) + ": " + e.what()));
          }
          next = per_cell;
          return;
        }
      }
    };

    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < std::min<std::size_t>(threads, per_cell); ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    if (on_cell_done) on_cell_done(cell, c, config.cells.size());
  }
  return records;
}

}  // namespace onemedian
