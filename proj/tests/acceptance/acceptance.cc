// Copyright 2026 The hcn-offload Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "common/test_support.h"
#include "hcn/energy_queue.h"
#include "hcn/montecarlo.h"
#include "hcn/multi_cell.h"
#include "hcn/scenario.h"
#include "hcn/single_cell.h"

#ifndef HCN_CLI_PATH
#error "HCN_CLI_PATH must name the CLI binary"
#endif
#ifndef HCN_DATA_DIR
#error "HCN_DATA_DIR must name the bundled data directory"
#endif

namespace {

using namespace hcn;
using hcn::testing::GridMax;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* fmt, double a, double b = 0.0, double c = 0.0,
                double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c, d);
  return buf;
}

std::string Data(const char* name) {
  return std::string(HCN_DATA_DIR) + "/" + name;
}

// ---------------------------------------------------------------------------

Outcome OutageFidelity() {
  SimConfig cfg;
  cfg.trials = 10000;
  cfg.seed = 20260101;
  const OutageSweepSpec sweep = default_outage_sweep();
  int counted = 0, failed = 0;
  double worst = 0.0;
  for (const Scenario& s : {testing::ReferenceCell(), testing::ReferencePico()}) {
    for (const OutageComparison& c : compare_outage(s, sweep, cfg)) {
      if (!c.counted) continue;
      ++counted;
      worst = std::max(worst, c.rel_error);
      if (!c.pass) ++failed;
    }
  }
  return {failed == 0 && counted > 0,
          Fmt("%.0f points below 0.1 outage, max relative error %.2f%%",
              counted, 100.0 * worst)};
}

Outcome EnergyQueue() {
  double worst_q = 0.0, worst_tv = 0.0;
  for (double rho : {0.3, 0.5, 0.7, 0.9}) {
    SimConfig cfg;
    cfg.seed = 7;
    const QueueStationary a = stationary_distribution(rho, 1.0);
    const QueueSimResult s = simulate_energy_queue(rho, 1.0, cfg);
    const double q1_closed = (1.0 - rho) * std::expm1(rho);
    worst_q = std::max({worst_q, std::abs(1.0 - rho - s.empty_fraction),
                        std::abs(q1_closed - s.q.at(1)),
                        std::abs(a.q0 - (1.0 - rho)), std::abs(a.q1 - q1_closed)});
    worst_tv = std::max(worst_tv, total_variation(a.q, s.q));
  }
  return {worst_q < 0.01 && worst_tv < 0.01,
          Fmt("max |q0|,|q1| deviation %.4f, max TV distance %.4f", worst_q,
              worst_tv)};
}

Outcome SingleCellOptimality() {
  std::mt19937_64 rng(31);
  double worst = 0.0;
  for (SbsKind kind :
       {SbsKind::kConventional, SbsKind::kHybrid, SbsKind::kRenewable}) {
    for (int i = 0; i < 50; ++i) {
      const CellContext ctx = testing::RandomContext(rng, kind);
      const MuBounds b = feasible_mu(ctx);
      const bool renewable = kind == SbsKind::kRenewable;
      auto gain = [&](double mu) {
        return renewable ? gain_rsbs(mu, ctx) : gain_hsbs(mu, ctx);
      };
      const double mu = renewable ? optimal_mu_rsbs(ctx) : optimal_mu_hsbs(ctx);
      const double grid = GridMax(gain, b.lower, b.upper, 10000);
      worst = std::max(worst, grid - gain(mu));
    }
  }
  return {worst <= 1e-6,
          Fmt("150 contexts, max shortfall vs 10^4-point grid %.3g W", worst)};
}

Outcome GainStructure() {
  std::mt19937_64 rng(5);
  double jump = 0.0, max_fd = -1e300;
  for (int i = 0; i < 50; ++i) {
    CellContext ctx = testing::RandomContext(rng, SbsKind::kHybrid);
    const MuBounds b = feasible_mu(ctx);
    ctx.cell.energy_arrival = 0.5 * (b.lower + b.upper);
    const double lam = ctx.cell.energy_arrival;
    jump = std::max(jump, std::abs(gain_hsbs(lam, ctx) -
                                   gain_hsbs(std::nextafter(lam, 1e300), ctx)));
  }
  const double h = 1e-3;
  for (int i = 0; i < 50;) {
    CellContext ctx = testing::RandomContext(rng, SbsKind::kRenewable);
    const MuBounds b = feasible_mu(ctx);
    ctx.cell.energy_arrival = 0.5 * b.lower;
    ctx.cell.handover_cost = 1.0 + 4.0 * (i % 5);
    const double lam = ctx.cell.energy_arrival;
    auto g = [&](double x) { return gain_rsbs(lam / x, ctx); };
    // Stencils stay inside the feasible range; narrow ranges are redrawn.
    const double x_lo = lam / b.upper + 2.0 * h, x_hi = lam / b.lower - 2.0 * h;
    if (x_hi - x_lo < 10.0 * h) continue;
    ++i;
    for (int k = 0; k <= 200; ++k) {
      const double x = x_lo + (x_hi - x_lo) * k / 200.0;
      max_fd = std::max(max_fd, (g(x + h) - 2.0 * g(x) + g(x - h)) / (h * h));
    }
  }
  bool f_ok = true;
  for (int k = 0; k < 1000; ++k) {
    const double x = 0.001 + 0.998 * k / 999.0;
    const double f = handover_slope_factor(x);
    f_ok = f_ok && f > 1.0 - std::exp(-1.0) && f < 1.5;
  }
  return {jump <= 1e-9 && max_fd <= 1e-6 && f_ok,
          Fmt("continuity gap %.2g W, max FD second derivative %.3g, f(x) "
              "bounds ",
              jump, max_fd) +
              (f_ok ? "hold" : "VIOLATED")};
}

Outcome GreedyEqualsOptimal() {
  const LoadedScenario ls = load_scenario(Data("default_5cell.json"));
  Scenario single = ls.scenario;
  single.cells.clear();
  for (const SmallCellConfig& c : ls.scenario.cells) {
    if (c.kind == SbsKind::kRenewable) single.cells.push_back(c);
  }
  single.cells.at(0).handover_cost = 0.0;
  const DailyProfiles p = synthetic_profiles(ProfileKind::kSunny);
  double worst = 0.0;
  for (int t = 0; t < p.periods; ++t) {
    const CellContext ctx = make_cell_context(scenario_at_period(single, p, t), 0);
    const CellDecision opt = decide(ctx);
    const double gain_opt = opt.active ? opt.gain : 0.0;
    worst = std::max(worst, std::abs(gain_opt - greedy_decision(ctx).gain));
  }
  return {worst < 1e-6,
          Fmt("24 periods, max |gain_optimal - gain_greedy| %.3g W", worst)};
}

Outcome PlannerOrdering() {
  std::mt19937_64 rng(2026);
  int instances = 0, equal = 0, violations = 0, drawn = 0;
  while (instances < 100) {
    const Scenario s = testing::RandomNetwork(rng, 5);
    ++drawn;
    const NetworkPlan g0 = greedy_no_sleep(s);
    const NetworkPlan g1 = greedy_with_sleep(s);
    if (!g0.feasible) continue;
    ++instances;
    const NetworkPlan t = teato(s);
    const NetworkPlan e = exhaustive_search(s);
    const double greedy = std::min(g0.power.total, g1.power.total);
    if (!(t.feasible && e.feasible && e.power.total <= t.power.total &&
          t.power.total <= greedy)) {
      ++violations;
    }
    if (t.power.total == e.power.total) ++equal;
  }
  return {violations == 0 && equal >= 80,
          Fmt("%.0f feasible instances (%.0f drawn), ordering violations %.0f, "
              "teato = exhaustive in %.0f",
              instances, drawn, violations, equal)};
}

Outcome KnapsackHeuristic() {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> khz(10, 1000);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int bad = 0;
  double worst_gap = 0.0;
  for (int inst = 0; inst < 1000; ++inst) {
    std::vector<ReactivationCandidate> items;
    double total = 0.0, max_cost = 0.0;
    for (size_t i = 0; i < 10; ++i) {
      const double relief = 1e3 * khz(rng);
      const double cost = 50.0 * u(rng);
      items.push_back({i, -cost, relief});
      total += relief;
      max_cost = std::max(max_cost, cost);
    }
    const double deficit = total * (0.05 + 0.9 * u(rng));
    const ReactivationSet got = reactivate_knapsack(items, deficit);
    const double dp = testing::KnapsackCoverDp(items, deficit);
    if (!got.feasible || got.relief < deficit || got.cost > dp + max_cost) ++bad;
    worst_gap = std::max(worst_gap, got.cost - dp);
  }
  return {bad == 0, Fmt("1000 instances, failures %.0f, worst gap to DP %.2f",
                        bad, worst_gap)};
}

Outcome DailySavings() {
  const LoadedScenario ls = load_scenario(Data("default_5cell.json"));
  const DailyProfiles p = synthetic_profiles(ProfileKind::kSunny);
  const DailyResult r = daily_run(
      ls.scenario, p,
      {PlanMethod::kTeato, PlanMethod::kGreedySleep, PlanMethod::kGreedyNoSleep});
  const double saving =
      mean_saving(r, PlanMethod::kTeato, PlanMethod::kGreedyNoSleep);
  const double t = r.mean_power.at(PlanMethod::kTeato);
  const double gs = r.mean_power.at(PlanMethod::kGreedySleep);
  const double gn = r.mean_power.at(PlanMethod::kGreedyNoSleep);
  const bool ordered = t < gs && gs < gn;
  return {saving >= 0.35 && saving <= 0.65 && ordered,
          Fmt("teato saves %.1f%% vs greedy_no_sleep; means %.1f < %.1f < %.1f W",
              100.0 * saving, t, gs, gn)};
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome Determinism() {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "hcn_acceptance";
  std::filesystem::create_directories(dir);
  const std::string cli = HCN_CLI_PATH;
  const std::string d5 = Data("default_5cell.json");
  const std::string t3 = Data("reference_cell.json");
  const std::vector<std::pair<std::string, std::string>> cmds = {
      {"validate-outage", "validate-outage --scenario " + t3 +
                              " --trials 2000 --seed 11"},
      {"queue", "queue --seed 11"},
      {"single", "single --scenario " + d5 + " --cell rsbs"},
      {"plan", "plan --scenario " + d5 + " --method teato,exhaustive"},
      {"daily", "daily --scenario " + d5},
      {"sweep", "sweep --scenario " + d5 + " --param rho0 --values 1e-6,2e-6"},
  };
  int mismatches = 0;
  std::string names;
  for (const auto& [name, args] : cmds) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const std::string out =
          (dir / (name + "_" + std::to_string(run) + ".out")).string();
      const std::string line = "\"" + cli + "\" " + args + " --out " + out;
      const int rc = std::system(line.c_str());
      if (rc != 0) {
        std::fprintf(stderr, "command failed (%d): %s\n", rc, line.c_str());
        ++mismatches;
      }
      outputs[run] = Slurp(out);
    }
    if (outputs[0] != outputs[1] || outputs[0].empty()) ++mismatches;
    names += (names.empty() ? "" : ",") + name;
  }
  return {mismatches == 0,
          "byte-identical reruns of " + names +
              (mismatches ? " FAILED" : std::string())};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"outage fidelity", 30.0, OutageFidelity},
      {"energy queue", 10.0, EnergyQueue},
      {"single-cell optimality", 10.0, SingleCellOptimality},
      {"gain structure", 1e9, GainStructure},
      {"greedy equals optimal without handover cost", 1e9, GreedyEqualsOptimal},
      {"planner ordering", 60.0, PlannerOrdering},
      {"knapsack heuristic", 10.0, KnapsackHeuristic},
      {"daily savings", 30.0, DailySavings},
      {"determinism", 1e9, Determinism},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    const bool in_time = secs <= criteria[i].budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("[%s] %zu %s: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, o.detail.c_str(), secs,
                in_time ? "" : ", over time budget");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
