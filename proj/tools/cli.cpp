#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "onemedian/error.hpp"
#include "onemedian/generators.hpp"
#include "onemedian/harness.hpp"
#include "onemedian/oracle.hpp"
#include "onemedian/report.hpp"
#include "onemedian/solvers.hpp"
#include "onemedian/text_format.hpp"
#include "onemedian/verify.hpp"

namespace onemedian::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceSource {
  std::string path;
  std::string family;
  NodeId n = 0;
  NodeId m = 0;
  std::uint64_t seed = 0;
  double epsilon = 1e-3;
};

void add_generator_flags(CLI::App& cmd, InstanceSource& src) {
  cmd.add_option("--family", src.family, "rru, rrw, rnu, rdu, gnu, gdu, tight_sa or lb");
  cmd.add_option("--n", src.n, "Number of nodes");
  cmd.add_option("--m", src.m, "Number of customers");
  cmd.add_option("--seed", src.seed, "Generator seed");
  cmd.add_option("--epsilon", src.epsilon, "Perturbation for tight_sa and lb");
}

struct Generated {
  Instance instance;
  std::string label;
};

Generated build_instance(const InstanceSource& src) {
  std::string name = src.family;
  for (auto& ch : name) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (name == "tight_sa") {
    if (src.m < 4) throw UsageError("tight_sa needs --m >= 4");
    return {gen_tight_sa(src.m, src.epsilon), "TIGHT_SA"};
  }
  if (name == "lb") return {gen_lb_instance(src.epsilon), "LB"};
  const auto family = parse_family(name);
  if (!family) throw UsageError("unknown family '" + src.family + "'");
  if (src.n == 0 || src.m == 0) throw UsageError("--n and --m are required for family " + src.family);
  return {generate({*family, src.n, src.m, src.seed}), std::string(to_string(*family))};
}

std::string real(double x) { return format_real(x); }

void ensure_parent(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
}

int cmd_generate(const InstanceSource& src, const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (src.family.empty()) throw UsageError("--family is required");
  const Generated g = build_instance(src);
  std::ostringstream summary;
  summary << g.label << ' ' << g.instance.node_count() << ' ' << g.instance.customer_count() << ' '
          << g.instance.graph().edge_count() << ' ' << src.seed << '\n';
  if (out_path.empty()) {
    write_instance(out, g.instance);
    err << summary.str();
  } else {
    ensure_parent(out_path);
    save_instance(out_path, g.instance);
    out << summary.str();
  }
  return kExitOk;
}

nlohmann::ordered_json result_json(const Instance& inst, const std::string& algo, NodeId facility, double exact,
                                   double estimated, std::size_t candidates, std::uint64_t settled, double ms) {
  nlohmann::ordered_json j;
  j["algorithm"] = algo;
  j["n"] = inst.node_count();
  j["m"] = inst.customer_count();
  j["facility"] = facility;
  j["exact_value"] = exact;
  j["estimated_value"] = estimated;
  j["candidate_count"] = candidates;
  j["settled_total"] = settled;
  j["wall_ms"] = ms;
  return j;
}

int cmd_solve(const std::string& path, const std::string& algo_name, bool json, std::ostream& out) {
  std::optional<Algorithm> algo;
  if (algo_name != "oracle") {
    algo = parse_algorithm(algo_name);
    if (!algo) throw UsageError("unknown algorithm '" + algo_name + "'");
  }
  const Instance inst = load_instance(path);

  nlohmann::ordered_json j;
  if (algo) {
    const SolveResult r = solve(inst, *algo);
    j = result_json(inst, algo_name, r.facility, r.exact_value, r.estimated_value, r.candidate_count,
                    r.settled_total, r.wall_ms());
  } else {
    const auto start = std::chrono::steady_clock::now();
    const OracleResult r = brute_force_oracle(inst, oracle_cap_from_env());
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    j = result_json(inst, algo_name, r.node, r.value, r.value, inst.node_count(), 0, ms);
  }

  if (json) {
    out << j.dump() << '\n';
    return kExitOk;
  }
  for (const auto& [key, value] : j.items()) {
    out << std::left << std::setw(17) << key;
    if (value.is_number_float()) {
      out << real(value.get<double>());
    } else if (value.is_string()) {
      out << value.get<std::string>();
    } else {
      out << value.dump();
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_verify(const InstanceSource& src, std::ostream& out) {
  if (src.path.empty() && src.family.empty()) throw UsageError("give an instance file or --family");
  if (!src.path.empty() && !src.family.empty()) throw UsageError("give either an instance file or --family, not both");
  const NodeId cap = oracle_cap_from_env();
  if (src.path.empty() && src.n > cap) {
    throw Error(Errc::SizeGuard, "verify is limited to n <= " + std::to_string(cap) + " (ONEMEDIAN_ORACLE_CAP)");
  }
  const Instance inst = src.path.empty() ? build_instance(src).instance : load_instance(src.path);
  const VerifyReport report = verify_instance(inst, cap);

  out << "instance n=" << inst.node_count() << " m=" << inst.customer_count()
      << " edges=" << inst.graph().edge_count() << (inst.equal_weights() ? " unweighted" : " weighted") << '\n';
  out << "oracle facility=" << report.oracle.node << " value=" << real(report.oracle.value) << '\n';
  for (std::size_t k = 0; k < report.results.size(); ++k) {
    const auto& r = report.results[k];
    out << std::left << std::setw(16) << to_string(r.algorithm) << " facility=" << r.facility
        << " exact=" << real(r.exact_value) << " estimated=" << real(r.estimated_value)
        << " ratio=" << real(report.ratios[k]) << '\n';
  }
  for (const auto& c : report.checks) {
    out << (c.applicable ? (c.passed ? "PASS " : "FAIL ") : "N/A  ") << c.name;
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << '\n';
  }
  const bool ok = report.all_passed();
  out << (ok ? "RESULT PASS" : "RESULT FAIL") << '\n';
  return ok ? kExitOk : kExitDomain;
}

int cmd_bench(const std::string& config_path, const std::string& out_prefix, std::optional<unsigned> threads,
              std::ostream& out, std::ostream& err) {
  SuiteConfig cfg = load_suite_config(config_path);
  if (!out_prefix.empty()) cfg.output = out_prefix;
  if (cfg.output.empty()) throw UsageError("no output path: pass --out or set \"output\" in the config");
  if (std::getenv("ONEMEDIAN_ORACLE_CAP") != nullptr) cfg.oracle_cap = oracle_cap_from_env();
  if (threads) cfg.threads = std::max(1u, *threads);

  const auto records = run_suite(cfg, [&](const CellSpec& cell, std::size_t index, std::size_t count) {
    err << '[' << index + 1 << '/' << count << "] " << to_string(cell.family) << " n=" << cell.n
        << " m=" << cell.m << " done\n";
  });
  const Summary summary = summarize(records);
  const std::filesystem::path csv = cfg.output + ".csv";
  const std::filesystem::path json = cfg.output + ".json";
  ensure_parent(csv);
  export_report(summary, ReportFormat::Csv, csv);
  export_report(summary, ReportFormat::Json, json);
  out << "wrote " << csv.string() << " and " << json.string() << " (" << records.size() << " trials)\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and truncated-Dijkstra solvers for the 1-median problem", "onemedian"};
  app.require_subcommand(1);

  InstanceSource gen_src;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a generated instance in the text format");
  add_generator_flags(*generate, gen_src);
  generate->add_option("--out", gen_out, "Output file (stdout when omitted)");

  std::string solve_path;
  std::string solve_algo = "exact";
  bool solve_json = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance file");
  solve_cmd->add_option("instance", solve_path, "Instance file")->required();
  solve_cmd->add_option("--algo", solve_algo, "exact, exact_truncated, sa, nna, spa or oracle");
  solve_cmd->add_flag("--json", solve_json, "Print a single JSON object");

  InstanceSource verify_src;
  auto* verify = app.add_subcommand("verify", "Run every solver and the oracle and check their invariants");
  verify->add_option("instance", verify_src.path, "Instance file");
  add_generator_flags(*verify, verify_src);

  std::string bench_config;
  std::string bench_out;
  unsigned bench_threads = 0;
  auto* bench = app.add_subcommand("bench", "Run an experiment suite and write CSV/JSON reports");
  bench->add_option("config", bench_config, "Suite config (JSON)")->required();
  bench->add_option("--out", bench_out, "Report path prefix");
  auto* threads_opt = bench->add_option("--threads", bench_threads, "Worker threads (default: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(gen_src, gen_out, out, err);
    if (*solve_cmd) return cmd_solve(solve_path, solve_algo, solve_json, out);
    if (*verify) return cmd_verify(verify_src, out);
    if (*bench) {
      std::optional<unsigned> threads;
      if (threads_opt->count() > 0) threads = bench_threads;
      return cmd_bench(bench_config, bench_out, threads, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::Config ? kExitUsage : kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace onemedian::cli
