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

// hcn: outage validation, battery queue check, single-cell sweeps, network
// plans and day-long experiments.
//
// Exit codes: 0 ok, 1 input error, 2 validation criterion failed,
// 3 infeasible plan.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hcn/energy_queue.h"
#include "hcn/model.h"
#include "hcn/montecarlo.h"
#include "hcn/multi_cell.h"
#include "hcn/outage.h"
#include "hcn/scenario.h"
#include "hcn/single_cell.h"
#include "json.hpp"

namespace {

using hcn::PlanMethod;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCriterion = 2;
constexpr int kExitInfeasible = 3;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  std::string scenario;
  std::string methods;
  bool methods_given = false;
  int64_t trials = 10000;
  std::optional<uint64_t> seed;
  std::string out = "-";
  bool json = false;
  bool strict = false;
};

void AddCommon(CLI::App* cmd, CommonFlags& f, bool needs_scenario,
               bool uses_methods) {
  auto* s = cmd->add_option("--scenario", f.scenario, "Scenario JSON file");
  if (needs_scenario) s->required();
  if (uses_methods) {
    cmd->add_option("--method", f.methods,
                    "Comma-separated: teato, greedy_no_sleep, greedy_sleep, "
                    "exhaustive")
        ->each([&f](const std::string&) { f.methods_given = true; });
  }
  cmd->add_option("--trials", f.trials, "Monte Carlo trials")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "Random seed");
  cmd->add_option("--out", f.out, "Output path, - for stdout");
  cmd->add_flag("--json", f.json, "Structured JSON output");
  cmd->add_flag("--strict", f.strict, "Require explicit seeds");
}

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::vector<double> ParseList(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(std::string(flag) + ": not a number: '" + item + "'");
    }
  }
  if (out.empty()) throw InputError(std::string(flag) + ": empty list");
  return out;
}

std::vector<PlanMethod> ParseMethods(const CommonFlags& f,
                                     const std::vector<PlanMethod>& fallback) {
  if (!f.methods_given) return fallback;
  const std::string& text = f.methods;
  std::vector<PlanMethod> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const std::optional<PlanMethod> m = hcn::ParsePlanMethod(item);
    if (!m) throw InputError("--method: unknown method '" + item + "'");
    out.push_back(*m);
  }
  if (out.empty()) throw InputError("--method: empty method set");
  return out;
}

uint64_t Seed(const CommonFlags& f) {
  if (!f.seed && f.strict) {
    throw InputError("--seed is required with --strict");
  }
  return f.seed.value_or(1);
}

void Emit(const CommonFlags& f, const std::string& text) {
  if (f.out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(f.out, std::ios::binary);
  if (!out) throw InputError("--out: cannot write '" + f.out + "'");
  out << text;
}

hcn::LoadedScenario Load(const CommonFlags& f) {
  return hcn::load_scenario(f.scenario);
}

size_t FindCell(const hcn::Scenario& s, const std::string& id) {
  for (size_t n = 0; n < s.cells.size(); ++n) {
    if (s.cells[n].id == id) return n;
  }
  throw InputError("--cell: no cell with id '" + id + "'");
}

// ---------------------------------------------------------------------------

int CmdValidateOutage(const CommonFlags& f) {
  const hcn::LoadedScenario ls = Load(f);
  hcn::SimConfig cfg;
  cfg.trials = f.trials;
  cfg.seed = Seed(f);
  const auto rows =
      hcn::compare_outage(ls.scenario, hcn::default_outage_sweep(), cfg);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.pass;
  if (f.json) {
    json j;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["pass"] = ok;
    j["points"] = json::array();
    for (const auto& r : rows) {
      j["points"].push_back(
          {{"user_class", r.user_class == hcn::UserClass::kSsu ? "ssu" : "msu"},
           {"cell", r.cell_id},
           {"rate_req", r.rate_req},
           {"dist_to_mbs", r.dist_to_mbs},
           {"bandwidth", r.bandwidth},
           {"phi", r.phi},
           {"closed_form", r.closed_form},
           {"monte_carlo", r.monte_carlo},
           {"std_error", r.std_error},
           {"rel_error", r.rel_error},
           {"regime_violation", r.regime_violation},
           {"counted", r.counted}});
    }
    Emit(f, j.dump(2) + "\n");
  } else {
    std::string out =
        "user_class,cell,rate_req,dist_to_mbs,bandwidth,phi,closed_form,"
        "monte_carlo,std_error,rel_error,regime_violation,counted\n";
    for (const auto& r : rows) {
      out += std::string(r.user_class == hcn::UserClass::kSsu ? "ssu" : "msu") +
             "," + r.cell_id + "," + Num(r.rate_req) + "," +
             Num(r.dist_to_mbs) + "," + Num(r.bandwidth) + "," + Num(r.phi) +
             "," + Num(r.closed_form) + "," + Num(r.monte_carlo) + "," +
             Num(r.std_error) + "," + Num(r.rel_error) + "," +
             (r.regime_violation ? "1" : "0") + "," + (r.counted ? "1" : "0") +
             "\n";
    }
    Emit(f, out);
  }
  if (!ok) std::cerr << "outage: relative error >= 10% at a counted point\n";
  return ok ? kExitOk : kExitCriterion;
}

struct QueueFlags {
  double mu = 1.0;
  std::string rhos = "0.3,0.5,0.7,0.9";
  double horizon = 0.0;
};

int CmdQueue(const CommonFlags& f, const QueueFlags& q) {
  if (!(q.mu > 0.0)) throw InputError("--mu must be > 0");
  const std::vector<double> rhos = ParseList(q.rhos, "--rho");
  hcn::SimConfig cfg;
  cfg.seed = Seed(f);
  cfg.horizon = q.horizon;
  bool ok = true;
  json j = json::array();
  std::string csv = "rho,level,analytic,simulated\n";
  for (double rho : rhos) {
    if (!(rho > 0.0 && rho < 1.0)) throw InputError("--rho values in (0, 1)");
    const double lambda = rho * q.mu;
    const hcn::QueueStationary a = hcn::stationary_distribution(lambda, q.mu);
    const hcn::QueueSimResult s = hcn::simulate_energy_queue(lambda, q.mu, cfg);
    const double tv = hcn::total_variation(a.q, s.q);
    const double q1_sim = s.q.size() > 1 ? s.q[1] : 0.0;
    const bool pass = std::abs(a.q0 - s.empty_fraction) < 0.01 &&
                      std::abs(a.q1 - q1_sim) < 0.01 && tv < 0.01;
    ok = ok && pass;
    j.push_back({{"rho", rho},
                 {"q0_analytic", a.q0},
                 {"q0_simulated", s.empty_fraction},
                 {"q1_analytic", a.q1},
                 {"q1_simulated", q1_sim},
                 {"total_variation", tv},
                 {"shutdown_rate_simulated", s.shutdown_rate},
                 {"handover_rate_model",
                  hcn::handover_power(lambda, q.mu, 1.0, true) / 2.0},
                 {"pass", pass}});
    const size_t levels = std::max(a.q.size(), s.q.size());
    for (size_t l = 0; l < levels; ++l) {
      const double av = l < a.q.size() ? a.q[l] : 0.0;
      const double sv = l < s.q.size() ? s.q[l] : 0.0;
      if (av < 1e-9 && sv == 0.0) continue;
      csv += Num(rho) + "," + std::to_string(l) + "," + Num(av) + "," +
             Num(sv) + "\n";
    }
  }
  Emit(f, f.json ? j.dump(2) + "\n" : csv);
  if (!ok) std::cerr << "queue: analytic and simulated distributions differ\n";
  return ok ? kExitOk : kExitCriterion;
}

struct SingleFlags {
  std::string cell;
  std::string param = "energy_arrival";
  std::string values;
  std::optional<double> handover_cost;
};

int CmdSingle(const CommonFlags& f, const SingleFlags& sf) {
  const hcn::LoadedScenario ls = Load(f);
  const size_t index =
      sf.cell.empty() ? 0 : FindCell(ls.scenario, sf.cell);
  if (ls.scenario.cells.empty()) throw InputError("scenario has no cells");
  if (sf.param != "energy_arrival" && sf.param != "user_density" &&
      sf.param != "handover_cost") {
    throw InputError("--param: expected energy_arrival, user_density or "
                     "handover_cost");
  }
  std::vector<double> values;
  if (sf.values.empty()) {
    for (int k = 0; k <= 20; ++k) {
      if (sf.param == "energy_arrival") values.push_back(5.0 * k);
      if (sf.param == "user_density") values.push_back(1e-5 * k);
      if (sf.param == "handover_cost") values.push_back(0.5 * k);
    }
  } else {
    values = ParseList(sf.values, "--values");
  }
  std::string csv =
      sf.param + ",gain_optimal,gain_greedy,mu_opt,active\n";
  json j = json::array();
  for (double v : values) {
    if (v < 0.0) throw InputError("--values must be >= 0");
    hcn::Scenario s = ls.scenario;
    hcn::SmallCellConfig& c = s.cells[index];
    if (sf.handover_cost) c.handover_cost = *sf.handover_cost;
    if (sf.param == "energy_arrival") {
      if (c.kind == hcn::SbsKind::kConventional) {
        throw InputError("grid-only cell has no energy arrivals");
      }
      c.energy_arrival = v;
    } else if (sf.param == "user_density") {
      c.user_density = v;
    } else {
      c.handover_cost = v;
    }
    const hcn::CellContext ctx = hcn::make_cell_context(s, index);
    const hcn::CellDecision opt = hcn::decide(ctx);
    const hcn::CellDecision greedy = hcn::greedy_decision(ctx);
    const double gain_opt = opt.active ? opt.gain : 0.0;
    csv += Num(v) + "," + Num(gain_opt) + "," + Num(greedy.gain) + "," +
           Num(opt.mu_e) + "," + (opt.active ? "1" : "0") + "\n";
    j.push_back({{sf.param, v},
                 {"gain_optimal", gain_opt},
                 {"gain_greedy", greedy.gain},
                 {"mu_opt", opt.mu_e},
                 {"active", opt.active}});
  }
  Emit(f, f.json ? j.dump(2) + "\n" : csv);
  return kExitOk;
}

json PlanJson(const hcn::NetworkPlan& plan, const hcn::Scenario& s) {
  json j;
  j["method"] = std::string(hcn::PlanMethodName(plan.method));
  j["feasible"] = plan.feasible;
  j["w_m_max"] = plan.w_m_max;
  j["w_m"] = s.macro.power.bandwidth;
  j["deficit"] = plan.deficit;
  j["w_mm"] = plan.allocation.w_mm;
  j["power"] = {{"mbs", plan.power.mbs},
                {"mbs_const", plan.power.mbs_const},
                {"mbs_rf", plan.power.mbs_rf},
                {"sbs_total", plan.power.sbs_total},
                {"handover", plan.power.handover},
                {"total", plan.power.total},
                {"reference", hcn::reference_power(s)}};
  j["cells"] = json::array();
  for (size_t n = 0; n < s.cells.size(); ++n) {
    const hcn::CellDecision& d = plan.decisions[n];
    const hcn::CellAllocation& a = plan.allocation.cells[n];
    j["cells"].push_back({{"id", s.cells[n].id},
                          {"kind", std::string(hcn::SbsKindName(s.cells[n].kind))},
                          {"active", a.active},
                          {"mu_e", a.mu_e},
                          {"phi", a.phi},
                          {"w_ss", a.w_ss},
                          {"w_ms_active", a.w_ms_active},
                          {"w_ms_off", a.w_ms_off},
                          {"gain", d.gain},
                          {"delta_bw", d.delta_bw},
                          {"grid_power", plan.power.cell_grid[n]},
                          {"handover_power", plan.power.cell_handover[n]}});
  }
  j["reactivated"] = json::array();
  for (size_t n : plan.reactivated) j["reactivated"].push_back(s.cells[n].id);
  return j;
}

int CmdPlan(const CommonFlags& f) {
  const hcn::LoadedScenario ls = Load(f);
  const std::vector<PlanMethod> methods =
      ParseMethods(f, {PlanMethod::kTeato});
  bool feasible = true;
  json j;
  if (methods.size() == 1) {
    const hcn::NetworkPlan plan = hcn::make_plan(ls.scenario, methods[0]);
    feasible = plan.feasible;
    j = PlanJson(plan, ls.scenario);
  } else {
    j = json::array();
    for (PlanMethod m : methods) {
      const hcn::NetworkPlan plan = hcn::make_plan(ls.scenario, m);
      feasible = feasible && plan.feasible;
      j.push_back(PlanJson(plan, ls.scenario));
    }
  }
  Emit(f, j.dump(2) + "\n");
  if (!feasible) std::cerr << "plan: MBS bandwidth exceeded\n";
  return feasible ? kExitOk : kExitInfeasible;
}

struct DailyFlags {
  std::string profiles_csv;
  std::string kind;
  int periods = 24;
  std::string summary;
};

hcn::DailyProfiles ResolveProfiles(const hcn::LoadedScenario& ls,
                                   const DailyFlags& d) {
  if (!d.profiles_csv.empty() && !d.kind.empty()) {
    throw InputError("give --profiles or --kind, not both");
  }
  if (!d.profiles_csv.empty()) return hcn::load_profiles_csv(d.profiles_csv);
  if (!d.kind.empty()) {
    const auto k = hcn::ParseProfileKind(d.kind);
    if (!k) throw InputError("--kind: expected sunny or cloudy");
    if (d.periods < 2) throw InputError("--periods must be >= 2");
    return hcn::synthetic_profiles(*k, d.periods);
  }
  if (ls.profiles) return *ls.profiles;
  return hcn::synthetic_profiles(hcn::ProfileKind::kSunny, d.periods);
}

const std::vector<PlanMethod> kDailyDefault = {
    PlanMethod::kTeato, PlanMethod::kGreedySleep, PlanMethod::kGreedyNoSleep};

int CmdDaily(const CommonFlags& f, const DailyFlags& d) {
  const hcn::LoadedScenario ls = Load(f);
  const std::vector<PlanMethod> methods = ParseMethods(f, kDailyDefault);
  const hcn::DailyProfiles profiles = ResolveProfiles(ls, d);
  const hcn::DailyResult r = hcn::daily_run(ls.scenario, profiles, methods);
  const std::string summary = hcn::summary_json(r);
  Emit(f, f.json ? summary : hcn::results_csv(r));
  if (!d.summary.empty()) {
    std::ofstream out(d.summary, std::ios::binary);
    if (!out) throw InputError("--summary: cannot write '" + d.summary + "'");
    out << summary;
  }
  return kExitOk;
}

struct SweepFlags {
  std::string param = "rho0";
  std::string values;
  bool daily = false;
  DailyFlags profiles;
};

// Applies one sweep value. rho0 scales every user density by the same
// factor; energy_arrival sets every harvesting cell's arrival rate;
// handover_cost sets every RSBS cost.
hcn::Scenario SweepScenario(const hcn::Scenario& base, const std::string& p,
                            double v) {
  hcn::Scenario s = base;
  if (p == "rho0") {
    const double scale = base.rho0 > 0.0 ? v / base.rho0 : 0.0;
    s.rho0 = v;
    for (auto& c : s.cells) {
      c.user_density = base.rho0 > 0.0 ? c.user_density * scale : 2.0 * v;
    }
  } else if (p == "energy_arrival") {
    for (auto& c : s.cells) {
      if (c.kind != hcn::SbsKind::kConventional) c.energy_arrival = v;
    }
  } else if (p == "handover_cost") {
    for (auto& c : s.cells) {
      if (c.kind == hcn::SbsKind::kRenewable) c.handover_cost = v;
    }
  }
  return s;
}

int CmdSweep(const CommonFlags& f, const SweepFlags& sw) {
  const hcn::LoadedScenario ls = Load(f);
  if (sw.param != "rho0" && sw.param != "energy_arrival" &&
      sw.param != "handover_cost" && sw.param != "energy_peak") {
    throw InputError("--param: expected rho0, energy_arrival, energy_peak or "
                     "handover_cost");
  }
  if (sw.param == "energy_peak" && !sw.daily) {
    throw InputError("--param energy_peak needs --daily");
  }
  if (sw.values.empty()) throw InputError("--values is required");
  const std::vector<double> values = ParseList(sw.values, "--values");
  const std::vector<PlanMethod> methods = ParseMethods(
      f, sw.daily ? kDailyDefault : std::vector<PlanMethod>{
                                                PlanMethod::kTeato,
                                                PlanMethod::kGreedySleep,
                                                PlanMethod::kGreedyNoSleep});
  std::string csv = "param,value,method,feasible,p_mbs,p_sbs_total,p_ho,total,"
                    "normalized\n";
  json j = json::array();
  bool all_feasible = true;
  for (double v : values) {
    if (v < 0.0) throw InputError("--values must be >= 0");
    if (sw.daily) {
      hcn::DailyProfiles profiles = ResolveProfiles(ls, sw.profiles);
      hcn::Scenario s = ls.scenario;
      if (sw.param == "energy_peak") {
        profiles.energy_peak = v;
      } else if (sw.param == "rho0") {
        s = SweepScenario(ls.scenario, sw.param, v);
        profiles.traffic_peak = 0.0;
      } else {
        s = SweepScenario(ls.scenario, sw.param, v);
        if (sw.param == "energy_arrival") profiles.energy_peak = v;
      }
      const hcn::DailyResult r = hcn::daily_run(s, profiles, methods);
      for (PlanMethod m : methods) {
        double mbs = 0, sbs = 0, ho = 0;
        int infeasible = 0;
        for (const auto& row : r.rows) {
          if (row.method != m) continue;
          mbs += row.power.mbs;
          sbs += row.power.sbs_total;
          ho += row.power.handover;
          if (!row.feasible) ++infeasible;
        }
        const double n = profiles.periods;
        const std::string name(hcn::PlanMethodName(m));
        csv += sw.param + "," + Num(v) + "," + name + "," +
               (infeasible == 0 ? "1" : "0") + "," + Num(mbs / n) + "," +
               Num(sbs / n) + "," + Num(ho / n) + "," +
               Num(r.mean_power.at(m)) + "," + Num(r.mean_normalized.at(m)) +
               "\n";
        j.push_back({{"param", sw.param},
                     {"value", v},
                     {"method", name},
                     {"infeasible_periods", infeasible},
                     {"mean_power", r.mean_power.at(m)},
                     {"mean_normalized", r.mean_normalized.at(m)}});
      }
      continue;
    }
    const hcn::Scenario s = SweepScenario(ls.scenario, sw.param, v);
    const double ref = hcn::reference_power(s);
    for (PlanMethod m : methods) {
      const hcn::NetworkPlan plan = hcn::make_plan(s, m);
      all_feasible = all_feasible && plan.feasible;
      const std::string name(hcn::PlanMethodName(m));
      csv += sw.param + "," + Num(v) + "," + name + "," +
             (plan.feasible ? "1" : "0") + "," + Num(plan.power.mbs) + "," +
             Num(plan.power.sbs_total) + "," + Num(plan.power.handover) + "," +
             Num(plan.power.total) + "," + Num(plan.power.total / ref) + "\n";
      json row = PlanJson(plan, s);
      row["param"] = sw.param;
      row["value"] = v;
      j.push_back(row);
    }
  }
  Emit(f, f.json ? j.dump(2) + "\n" : csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-aware traffic offloading for two-tier cellular networks"};
  app.require_subcommand(1);

  CommonFlags common;
  QueueFlags queue;
  SingleFlags single;
  DailyFlags daily;
  SweepFlags sweep;

  auto* validate = app.add_subcommand(
      "validate-outage", "Closed-form outage against Monte Carlo");
  AddCommon(validate, common, true, false);

  auto* queue_cmd = app.add_subcommand(
      "queue", "Battery queue: analytic distribution against simulation");
  AddCommon(queue_cmd, common, false, false);
  queue_cmd->add_option("--mu", queue.mu, "Consumption rate (units/s)");
  queue_cmd->add_option("--rho", queue.rhos, "Comma-separated loads in (0, 1)");
  queue_cmd->add_option("--horizon", queue.horizon,
                        "Simulated seconds (0: 1e6 services)");

  auto* single_cmd =
      app.add_subcommand("single", "Power saving of one SBS over a sweep");
  AddCommon(single_cmd, common, true, false);
  single_cmd->add_option("--cell", single.cell, "Cell id (default: first)");
  single_cmd->add_option("--param", single.param,
                         "energy_arrival, user_density or handover_cost");
  single_cmd->add_option("--values", single.values, "Comma-separated values");
  single_cmd->add_option("--handover-cost", single.handover_cost,
                         "Override the cell's handover cost (J)");

  auto* plan_cmd = app.add_subcommand("plan", "Activation plan of a network");
  AddCommon(plan_cmd, common, true, true);

  auto* daily_cmd =
      app.add_subcommand("daily", "Plan every period of a day per method");
  AddCommon(daily_cmd, common, true, true);
  daily_cmd->add_option("--profiles", daily.profiles_csv,
                        "CSV with header period,traffic,energy");
  daily_cmd->add_option("--kind", daily.kind, "Synthetic profile: sunny|cloudy");
  daily_cmd->add_option("--periods", daily.periods, "Synthetic profile periods");
  daily_cmd->add_option("--summary", daily.summary, "Also write summary JSON");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "Network power over a parameter sweep");
  AddCommon(sweep_cmd, common, true, true);
  sweep_cmd->add_option("--param", sweep.param,
                        "rho0, energy_arrival, energy_peak or handover_cost");
  sweep_cmd->add_option("--values", sweep.values, "Comma-separated values");
  sweep_cmd->add_flag("--daily", sweep.daily, "Average over a daily run");
  sweep_cmd->add_option("--profiles", sweep.profiles.profiles_csv,
                        "CSV with header period,traffic,energy");
  sweep_cmd->add_option("--kind", sweep.profiles.kind,
                        "Synthetic profile: sunny|cloudy");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (validate->parsed()) return CmdValidateOutage(common);
    if (queue_cmd->parsed()) return CmdQueue(common, queue);
    if (single_cmd->parsed()) return CmdSingle(common, single);
    if (plan_cmd->parsed()) return CmdPlan(common);
    if (daily_cmd->parsed()) return CmdDaily(common, daily);
    if (sweep_cmd->parsed()) return CmdSweep(common, sweep);
  } catch (const hcn::ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
