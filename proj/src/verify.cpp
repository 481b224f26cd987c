#include "onemedian/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "onemedian/error.hpp"
#include "onemedian/harness.hpp"

namespace onemedian {

namespace {

constexpr double kGoldenRatio = 1.6180339887498949;

bool close(double a, double b) {
  return std::abs(a - b) <= kRatioTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

bool at_most(double a, double b) { return a <= b + kRatioTolerance * std::max(1.0, std::abs(b)); }

std::string format_value(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string node_text(NodeId v) { return "node " + std::to_string(v); }

class Checks {
 public:
  InvariantCheck& add(std::string name) {
    list_.push_back({std::move(name), true, true, {}});
    return list_.back();
  }
  void fail(InvariantCheck& c, const std::string& why) {
    if (c.passed) c.detail = why;
    c.passed = false;
  }
  std::vector<InvariantCheck> take() { return std::move(list_); }

 private:
  std::vector<InvariantCheck> list_;
};

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.passed; });
}

VerifyReport verify_instance(const Instance& instance, NodeId oracle_cap) {
  VerifyReport report;
  report.oracle = brute_force_oracle(instance, oracle_cap);
  for (Algorithm a : {Algorithm::Exact, Algorithm::ExactTruncated, Algorithm::SA, Algorithm::NNA, Algorithm::SPA}) {
    report.results.push_back(solve(instance, a));
  }
  const SolveResult& exact = report.results[0];
  const SolveResult& exact_tr = report.results[1];
  const SolveResult& sa = report.results[2];
  const SolveResult& nna = report.results[3];
  const SolveResult& spa = report.results[4];
  for (const auto& r : report.results) report.ratios.push_back(approximation_ratio(r.exact_value, exact.exact_value));

  const std::size_t m = instance.customer_count();
  const auto customers = instance.customers();
  const CandidateTable table = CandidateTable::build(instance);
  DijkstraWorkspace ws(instance.node_count());
  Checks checks;

  auto& ref = checks.add("exact matches oracle");
  ref.detail = "exact " + format_value(exact.exact_value) + ", oracle " + format_value(report.oracle.value);
  if (!close(exact.exact_value, report.oracle.value)) checks.fail(ref, ref.detail);

  auto& tr = checks.add("exact_truncated matches exact");
  if (exact_tr.exact_value != exact.exact_value) {
    checks.fail(tr, format_value(exact_tr.exact_value) + " != " + format_value(exact.exact_value));
  }

  auto& nest = checks.add("M subset of V' subset of V''");
  for (NodeId c : customers) {
    const auto row = table.row_of(c);
    if (!row || !table.in_all(*row)) checks.fail(nest, "customer " + node_text(c) + " not in V'");
  }
  std::size_t v_prime = 0;
  for (std::size_t r = 0; r < table.row_count(); ++r) v_prime += table.in_all(r) ? 1 : 0;
  if (sa.candidate_count != v_prime || nna.candidate_count != table.row_count()) {
    checks.fail(nest, "candidate counts disagree with the truncated searches");
  }
  if (nest.passed) nest.detail = "|V'| = " + std::to_string(v_prime) + ", |V''| = " + std::to_string(table.row_count());

  auto& lemma = checks.add("customers evaluated exactly");
  auto& agree = checks.add("V' evaluations coincide");
  auto& dom = checks.add("z_spa <= z_nna on V''");
  auto& upper = checks.add("z_nna, z_spa >= z on V''");
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    const NodeId v = table.node(r);
    const Cost z = evaluate_node(instance, v, ws);
    const Cost zn = table.z_nna(r);
    const Cost zs = table.z_spa(r);
    if (!(zs <= zn)) checks.fail(dom, node_text(v) + ": " + format_value(zs) + " > " + format_value(zn));
    if (!at_most(z, zn) || !at_most(z, zs)) checks.fail(upper, node_text(v) + ": estimate below z = " + format_value(z));
    if (table.in_all(r)) {
      const Cost za = table.z_sa(r);
      if (!close(za, z) || !close(zn, z) || !close(zs, z)) {
        checks.fail(agree, node_text(v) + ": sa/nna/spa " + format_value(za) + "/" + format_value(zn) + "/" +
                               format_value(zs) + " vs z " + format_value(z));
      }
    }
    if (std::find(customers.begin(), customers.end(), v) != customers.end()) {
      if (!close(table.z_sa(r), z) || !close(zn, z) || !close(zs, z)) checks.fail(lemma, node_text(v));
    }
  }

  auto& values = checks.add("estimates bound the chosen objective");
  if (sa.exact_value != sa.estimated_value) checks.fail(values, "sa exact != estimated");
  if (!at_most(nna.exact_value, nna.estimated_value)) checks.fail(values, "nna exact > estimated");
  if (!at_most(spa.exact_value, spa.estimated_value)) checks.fail(values, "spa exact > estimated");

  auto& mono = checks.add("min z_spa <= min z_nna <= min z_sa");
  if (!(spa.estimated_value <= nna.estimated_value && nna.estimated_value <= sa.estimated_value)) {
    checks.fail(mono, format_value(spa.estimated_value) + ", " + format_value(nna.estimated_value) + ", " +
                          format_value(sa.estimated_value));
  }

  const double r_sa = report.ratios[2];
  const double r_nna = report.ratios[3];
  const double r_spa = report.ratios[4];
  std::ostringstream ratios;
  ratios << "sa " << format_value(r_sa) << ", nna " << format_value(r_nna) << ", spa " << format_value(r_spa);

  auto& floor = checks.add("ratios >= 1");
  floor.detail = ratios.str();
  for (double r : report.ratios) {
    if (r < 1.0 - kRatioTolerance) checks.fail(floor, ratios.str());
  }

  auto& small = checks.add("optimal when m <= 3");
  small.applicable = m <= 3;
  if (small.applicable && (r_sa > 1 + kRatioTolerance || r_nna > 1 + kRatioTolerance || r_spa > 1 + kRatioTolerance)) {
    checks.fail(small, ratios.str());
  }

  auto& sa_bound = checks.add("sa ratio <= 2 - 4/(m+1)");
  sa_bound.applicable = m >= 4 && instance.equal_weights();
  if (sa_bound.applicable) {
    const double bound = 2.0 - 4.0 / (static_cast<double>(m) + 1.0);
    sa_bound.detail = "bound " + format_value(bound) + ", sa " + format_value(r_sa);
    if (r_sa > bound + kRatioTolerance) checks.fail(sa_bound, sa_bound.detail);
  }

  auto& golden = checks.add("nna, spa ratio <= (1+sqrt5)/2");
  if (r_nna > kGoldenRatio + kRatioTolerance || r_spa > kGoldenRatio + kRatioTolerance) checks.fail(golden, ratios.str());

  auto& two = checks.add("all ratios <= 2");
  for (double r : report.ratios) {
    if (r > 2.0 + kRatioTolerance) checks.fail(two, ratios.str());
  }

  report.checks = checks.take();
  return report;
}

}  // namespace onemedian
