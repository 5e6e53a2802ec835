// rovcov: coverage distributions, agent planning, simulation and
// cross-verification for randomly roving agents.
//
// Exit codes: 0 success (including an infeasible plan), 1 usage error,
// 2 verification failure or internal error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "rovcov/report.hpp"
#include "rovcov/verify.hpp"

namespace {

using namespace rovcov;

constexpr std::uint64_t kDefaultSeed = 20140601;

enum ExitCode : int { kOk = 0, kUsage = 1, kFailure = 2 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::string scheme = "abide";
  std::string format = "json";
  int digits = 15;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--scheme", c.scheme, "abide or eabide")->check(CLI::IsMember({"abide", "eabide"}));
  cmd->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--digits", c.digits, "significant digits of decimal renderings")->check(CLI::Range(1, 1000));
  cmd->add_option("--out", c.out, "output path (default: standard output)");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + c.out + "'");
  f << text;
}

std::uint64_t parse_seed(const std::string& text) {
  if (text.empty()) return kDefaultSeed;
  if (text == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("seed must be an unsigned 64-bit integer or 'random'");
  }
  return v;
}

struct DistArgs {
  Common common;
  count_t n = 0, m = 0, k = 0;
};

int run_dist(const DistArgs& a) {
  const Params p{a.n, a.m, a.k};
  const Scheme scheme = parse_scheme(a.common.scheme);
  p.validate(scheme);
  const auto d = exact_distribution(p, scheme);
  emit(a.common, a.common.format == "json" ? report::distribution_json(d, a.common.digits).dump(2) + "\n"
                                           : report::distribution_csv(d, a.common.digits));
  return kOk;
}

struct PlanArgs {
  Common common;
  count_t n = 0, m = 0, t = 0;
  std::string confidence;
  count_t k_max = 1'000'000;
};

int run_plan(const PlanArgs& a) {
  plan::PlanQuery q;
  q.n = a.n;
  q.m = a.m;
  q.t_min = a.t;
  q.confidence = parse_rational(a.confidence);
  q.scheme = parse_scheme(a.common.scheme);
  q.k_max = a.k_max;
  const report::PlanReport r{q, plan::min_agents(q)};
  emit(a.common, a.common.format == "json" ? report::plan_json(r, a.common.digits).dump(2) + "\n"
                                           : report::plan_csv(r, a.common.digits));
  return kOk;
}

struct SimulateArgs {
  Common common;
  count_t n = 0, m = 0, k = 0;
  std::uint64_t trials = 100'000;
  std::string seed;
  unsigned workers = 1;
  bool compare = false;
};

int run_simulate(const SimulateArgs& a) {
  const Params p{a.n, a.m, a.k};
  const Scheme scheme = parse_scheme(a.common.scheme);
  p.validate(scheme);
  report::SimulationReport r{simulate::run_simulation(p, scheme, a.trials, parse_seed(a.seed), a.workers), {}};
  if (a.compare) r.total_variation = simulate::total_variation(exact_distribution(p, scheme), r.result);
  emit(a.common, a.common.format == "json" ? report::simulation_json(r, a.common.digits).dump(2) + "\n"
                                           : report::simulation_csv(r, a.common.digits));
  return kOk;
}

struct VerifyArgs {
  Common common;
  bool legacy_only = false;
  count_t k = 4;
  count_t n_max = 8;
  count_t m_max = 2;
  count_t stirling_max = 40;
  count_t draws_max = 30;
  std::uint64_t trials = 100'000;
  std::string seed;
  unsigned workers = 1;
  std::string threshold = "0.02";
};

int run_verify(const VerifyArgs& a) {
  if (a.k < 4) throw UsageError("legacy check requires k ≥ 4");
  std::vector<verify::CheckReport> reports;
  if (a.legacy_only) {
    reports.push_back(verify::check_legacy(a.k, a.n_max, a.m_max));
  } else {
    reports.push_back(verify::check_stirling(a.stirling_max, a.draws_max));
    reports.push_back(verify::check_means(8, 4, 3));
    reports.push_back(verify::check_corollary(8, 4, 3));
    reports.push_back(verify::check_legacy(a.k, a.n_max, a.m_max));
    reports.push_back(verify::check_simulation(verify::default_simulation_cases(), a.trials, parse_seed(a.seed),
                                               parse_rational(a.threshold), a.workers));
  }

  bool ok = true;
  std::string text;
  if (a.common.format == "json") {
    report::ordered_json out = report::metadata("verify");
    out["checks"] = report::ordered_json::array();
    for (const auto& r : reports) {
      out["checks"].push_back({{"name", r.name}, {"cases", r.cases}, {"passed", r.passed()}, {"failures", r.failures}});
      ok = ok && r.passed();
    }
    out["passed"] = ok;
    text = out.dump(2) + "\n";
  } else {
    for (const auto& r : reports) {
      text += (r.passed() ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.cases) + " cases)\n";
      for (const auto& f : r.failures) text += "  " + f + "\n";
      ok = ok && r.passed();
    }
    text += ok ? "all checks passed\n" : "verification FAILED\n";
  }
  emit(a.common, text);
  return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and simulated coverage of randomly roving agents"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(report::kToolVersion));

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "exact coverage distribution and mean");
  add_common(dist_cmd, dist.common);
  dist_cmd->add_option("--n", dist.n, "number of nodes")->required();
  dist_cmd->add_option("--m", dist.m, "memory size per agent")->required();
  dist_cmd->add_option("--k", dist.k, "number of agents")->required();

  PlanArgs plan_args;
  auto* plan_cmd = app.add_subcommand("plan", "minimum agent count for a coverage target");
  add_common(plan_cmd, plan_args.common);
  plan_cmd->add_option("--n", plan_args.n, "number of nodes")->required();
  plan_cmd->add_option("--m", plan_args.m, "memory size per agent")->required();
  plan_cmd->add_option("--t", plan_args.t, "required distinct nodes")->required();
  plan_cmd->add_option("--confidence", plan_args.confidence, "target probability, e.g. 0.95 or 19/20")->required();
  plan_cmd->add_option("--k-max", plan_args.k_max, "search cap on the agent count");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo coverage distribution");
  add_common(sim_cmd, sim.common);
  sim_cmd->add_option("--n", sim.n, "number of nodes")->required();
  sim_cmd->add_option("--m", sim.m, "memory size per agent")->required();
  sim_cmd->add_option("--k", sim.k, "number of agents")->required();
  sim_cmd->add_option("--trials", sim.trials, "number of trials");
  sim_cmd->add_option("--seed", sim.seed, "unsigned 64-bit seed or 'random' (default 20140601)");
  sim_cmd->add_option("--workers", sim.workers, "worker threads; output does not depend on it");
  sim_cmd->add_flag("--compare", sim.compare, "report total variation against the exact law");

  VerifyArgs ver;
  ver.common.format = "text";
  auto* ver_cmd = app.add_subcommand("verify", "cross-check independent evaluation routes");
  ver_cmd->add_option("--format", ver.common.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  ver_cmd->add_option("--out", ver.common.out, "output path (default: standard output)");
  ver_cmd->add_flag("--legacy", ver.legacy_only, "run only the nested-sum formula check");
  ver_cmd->add_option("--k", ver.k, "agent count for the nested-sum check (≥ 4)");
  ver_cmd->add_option("--n-max", ver.n_max, "largest n for the nested-sum check");
  ver_cmd->add_option("--m-max", ver.m_max, "largest m for the nested-sum check");
  ver_cmd->add_option("--stirling-max", ver.stirling_max, "largest N for Stirling route agreement");
  ver_cmd->add_option("--draws-max", ver.draws_max, "largest mk for the R-count identity");
  ver_cmd->add_option("--trials", ver.trials, "trials per simulation case");
  ver_cmd->add_option("--seed", ver.seed, "simulation seed");
  ver_cmd->add_option("--workers", ver.workers, "simulation worker threads");
  ver_cmd->add_option("--threshold", ver.threshold, "largest accepted total variation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dist_cmd) return run_dist(dist);
    if (*plan_cmd) return run_plan(plan_args);
    if (*sim_cmd) return run_simulate(sim);
    if (*ver_cmd) return run_verify(ver);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
