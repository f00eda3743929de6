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

#include "hcn/multi_cell.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "hcn/energy_queue.h"
#include "hcn/outage.h"

namespace hcn {

namespace {

struct NetworkTables {
  std::vector<SpectralEfficiencies> taus;
  double w_mm = 0.0;
};

NetworkTables MakeTables(const Scenario& scenario) {
  NetworkTables t;
  t.w_mm = macro_only_bandwidth(scenario);
  t.taus.reserve(scenario.cells.size());
  for (const SmallCellConfig& c : scenario.cells) {
    t.taus.push_back(spectral_efficiencies(c, scenario));
  }
  return t;
}

double ArrivalRate(const SmallCellConfig& c) {
  return c.kind == SbsKind::kConventional ? 0.0 : c.energy_arrival;
}

// Bandwidth the MBS actually spends on the MSUs of cell n.
double ExpectedMsuBandwidth(const SmallCellConfig& c, const CellAllocation& a) {
  if (!a.active) return a.w_ms_off;
  if (c.kind == SbsKind::kRenewable) {
    const double q0 = empty_probability(c.energy_arrival, a.mu_e);
    return (1.0 - q0) * a.w_ms_active + q0 * a.w_ms_off;
  }
  return a.w_ms_active;
}

NetworkPlan Assemble(const Scenario& scenario, const NetworkTables& tables,
                     std::vector<CellDecision> decisions, PlanMethod method) {
  if (decisions.size() != scenario.cells.size()) {
    throw std::invalid_argument("assemble_plan: one decision per cell");
  }
  NetworkPlan plan;
  plan.method = method;
  plan.decisions = std::move(decisions);
  plan.allocation.w_mm = tables.w_mm;
  plan.allocation.cells.resize(scenario.cells.size());
  bool sbs_ok = true;
  for (size_t n = 0; n < scenario.cells.size(); ++n) {
    const SmallCellConfig& c = scenario.cells[n];
    const CellDecision& d = plan.decisions[n];
    CellAllocation& a = plan.allocation.cells[n];
    a.active = d.active;
    if (d.active) {
      a.mu_e = d.mu_e;
      a.phi = d.phi;
      a.w_ss = d.w_ss;
    }
    const CellBandwidths bw =
        cell_bandwidths(c, tables.taus[n], scenario.qos, a.phi);
    a.w_ms_active = bw.w_ms_active;
    a.w_ms_off = bw.w_ms_off;
    if (a.w_ss > c.power.bandwidth) sbs_ok = false;
  }
  plan.w_m_max = w_m_max(plan, scenario);
  plan.deficit = std::max(0.0, plan.w_m_max - scenario.macro.power.bandwidth);
  plan.feasible = sbs_ok && plan.w_m_max <= scenario.macro.power.bandwidth;
  plan.power = network_power(plan, scenario);
  return plan;
}

std::vector<CellDecision> StageOne(const Scenario& scenario,
                                   const NetworkTables& tables) {
  std::vector<CellDecision> out;
  out.reserve(scenario.cells.size());
  for (size_t n = 0; n < scenario.cells.size(); ++n) {
    const CellContext ctx{scenario.cells[n], tables.taus[n],
                          scenario.macro.power, scenario.qos};
    out.push_back(decide(ctx));
  }
  return out;
}

double Cost(const ReactivationCandidate& c) { return -c.gain / c.relief; }

}  // namespace

std::string_view PlanMethodName(PlanMethod method) {
  switch (method) {
    case PlanMethod::kTeato:
      return "teato";
    case PlanMethod::kGreedyNoSleep:
      return "greedy_no_sleep";
    case PlanMethod::kGreedySleep:
      return "greedy_sleep";
    case PlanMethod::kExhaustive:
      return "exhaustive";
  }
  return "unknown";
}

std::optional<PlanMethod> ParsePlanMethod(std::string_view name) {
  for (PlanMethod m : {PlanMethod::kTeato, PlanMethod::kGreedyNoSleep,
                       PlanMethod::kGreedySleep, PlanMethod::kExhaustive}) {
    if (name == PlanMethodName(m)) return m;
  }
  return std::nullopt;
}

NetworkPlan assemble_plan(const Scenario& scenario,
                          std::vector<CellDecision> decisions,
                          PlanMethod method) {
  return Assemble(scenario, MakeTables(scenario), std::move(decisions), method);
}

double mbs_power(const NetworkPlan& plan, const Scenario& scenario) {
  const BsPowerParams& m = scenario.macro.power;
  double w = plan.allocation.w_mm;
  for (size_t n = 0; n < scenario.cells.size(); ++n) {
    w += ExpectedMsuBandwidth(scenario.cells[n], plan.allocation.cells[n]);
  }
  // Not bs_power: an overloaded plan still gets a power figure.
  return m.p_const + m.beta * m.p_tx / m.bandwidth * w;
}

PowerBreakdown network_power(const NetworkPlan& plan,
                             const Scenario& scenario) {
  const BsPowerParams& m = scenario.macro.power;
  PowerBreakdown p;
  p.mbs_const = m.p_const;
  p.mbs = mbs_power(plan, scenario);
  p.mbs_rf = p.mbs - p.mbs_const;
  const size_t n_cells = scenario.cells.size();
  p.cell_grid.assign(n_cells, 0.0);
  p.cell_handover.assign(n_cells, 0.0);
  for (size_t n = 0; n < n_cells; ++n) {
    const SmallCellConfig& c = scenario.cells[n];
    const CellAllocation& a = plan.allocation.cells[n];
    if (!a.active) continue;
    const double draw = c.power.p_const +
                        a.w_ss / c.power.bandwidth * c.power.beta * c.power.p_tx;
    switch (c.kind) {
      case SbsKind::kRenewable:
        p.cell_handover[n] =
            handover_power(c.energy_arrival, a.mu_e, c.handover_cost, true);
        break;
      case SbsKind::kHybrid:
        p.cell_grid[n] = empty_probability(ArrivalRate(c), a.mu_e) * draw;
        break;
      case SbsKind::kConventional:
        p.cell_grid[n] = draw;
        break;
    }
    p.sbs_total += p.cell_grid[n];
    p.handover += p.cell_handover[n];
  }
  p.total = p.mbs + p.sbs_total + p.handover;
  return p;
}

double w_m_max(const NetworkPlan& plan, const Scenario& scenario) {
  double w = plan.allocation.w_mm;
  for (size_t n = 0; n < scenario.cells.size(); ++n) {
    const CellAllocation& a = plan.allocation.cells[n];
    const bool worst_case =
        !a.active || scenario.cells[n].kind == SbsKind::kRenewable;
    w += worst_case ? a.w_ms_off : a.w_ms_active;
  }
  return w;
}

std::vector<ReactivationCandidate> reactivation_order(
    std::vector<ReactivationCandidate> candidates) {
  for (const ReactivationCandidate& c : candidates) {
    if (!(c.relief > 0.0)) {
      throw std::invalid_argument("reactivation_order: relief must be > 0");
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const ReactivationCandidate& a,
                      const ReactivationCandidate& b) {
                     const double ca = Cost(a), cb = Cost(b);
                     if (ca != cb) return ca < cb;
                     return a.cell < b.cell;
                   });
  return candidates;
}

ReactivationSet reactivate_knapsack(
    const std::vector<ReactivationCandidate>& candidates, double deficit) {
  if (!(deficit > 0.0)) {
    throw std::invalid_argument("reactivate_knapsack: deficit must be > 0");
  }
  ReactivationSet out;
  for (const ReactivationCandidate& c : reactivation_order(candidates)) {
    out.cells.push_back(c.cell);
    out.relief += c.relief;
    out.cost += -c.gain;
    if (out.relief >= deficit) {
      out.feasible = true;
      break;
    }
  }
  return out;
}

NetworkPlan teato(const Scenario& scenario) {
  const NetworkTables tables = MakeTables(scenario);
  std::vector<CellDecision> decisions = StageOne(scenario, tables);
  NetworkPlan plan =
      Assemble(scenario, tables, decisions, PlanMethod::kTeato);
  if (plan.w_m_max <= scenario.macro.power.bandwidth) return plan;

  std::vector<ReactivationCandidate> candidates;
  for (size_t n = 0; n < decisions.size(); ++n) {
    if (scenario.cells[n].kind == SbsKind::kRenewable) continue;
    if (decisions[n].active || !(decisions[n].delta_bw > 0.0)) continue;
    candidates.push_back({n, std::min(0.0, decisions[n].gain),
                          decisions[n].delta_bw});
  }
  // Relief is additive, so the shortest covering prefix is found by
  // re-evaluating the plan; this keeps the stopping test on the same
  // floating-point path as the feasibility flag.
  std::vector<size_t> added;
  for (const ReactivationCandidate& c : reactivation_order(candidates)) {
    decisions[c.cell].active = true;
    added.push_back(c.cell);
    plan = Assemble(scenario, tables, decisions, PlanMethod::kTeato);
    if (plan.w_m_max <= scenario.macro.power.bandwidth) break;
  }
  if (plan.w_m_max <= scenario.macro.power.bandwidth) {
    // Drop items made redundant by later, larger ones, most expensive first.
    std::vector<size_t> by_cost = added;
    std::stable_sort(by_cost.begin(), by_cost.end(), [&](size_t a, size_t b) {
      return decisions[a].gain < decisions[b].gain;
    });
    for (size_t n : by_cost) {
      decisions[n].active = false;
      NetworkPlan trial =
          Assemble(scenario, tables, decisions, PlanMethod::kTeato);
      if (trial.feasible) {
        plan = std::move(trial);
        added.erase(std::find(added.begin(), added.end(), n));
      } else {
        decisions[n].active = true;
      }
    }
  }
  plan.reactivated = std::move(added);
  return plan;
}

NetworkPlan greedy_no_sleep(const Scenario& scenario) {
  const NetworkTables tables = MakeTables(scenario);
  std::vector<CellDecision> decisions;
  for (size_t n = 0; n < scenario.cells.size(); ++n) {
    const CellContext ctx{scenario.cells[n], tables.taus[n],
                          scenario.macro.power, scenario.qos};
    decisions.push_back(greedy_decision(ctx));
  }
  return Assemble(scenario, tables, std::move(decisions),
                  PlanMethod::kGreedyNoSleep);
}

NetworkPlan greedy_with_sleep(const Scenario& scenario) {
  const NetworkTables tables = MakeTables(scenario);
  std::vector<CellDecision> decisions;
  std::vector<double> sleep_gain;
  for (size_t n = 0; n < scenario.cells.size(); ++n) {
    const CellContext ctx{scenario.cells[n], tables.taus[n],
                          scenario.macro.power, scenario.qos};
    decisions.push_back(greedy_decision(ctx));
    sleep_gain.push_back(scenario.cells[n].kind == SbsKind::kConventional
                             ? decide_hsbs(ctx).gain
                             : 0.0);
  }
  NetworkPlan plan =
      Assemble(scenario, tables, decisions, PlanMethod::kGreedySleep);
  for (size_t n = 0; n < decisions.size(); ++n) {
    if (scenario.cells[n].kind != SbsKind::kConventional) continue;
    if (sleep_gain[n] > 0.0) continue;
    decisions[n].active = false;
    NetworkPlan trial =
        Assemble(scenario, tables, decisions, PlanMethod::kGreedySleep);
    if (trial.w_m_max <= scenario.macro.power.bandwidth) {
      plan = std::move(trial);
    } else {
      decisions[n].active = true;
    }
  }
  return plan;
}

NetworkPlan exhaustive_search(const Scenario& scenario) {
  const size_t n_cells = scenario.cells.size();
  if (n_cells > kMaxExhaustiveCells) {
    throw std::invalid_argument(
        "exhaustive_search: " + std::to_string(n_cells) +
        " cells exceed the limit of " + std::to_string(kMaxExhaustiveCells) +
        "; use teato for large networks");
  }
  const NetworkTables tables = MakeTables(scenario);
  std::vector<CellDecision> decisions = StageOne(scenario, tables);
  std::optional<NetworkPlan> best;
  const uint64_t masks = uint64_t{1} << n_cells;
  for (uint64_t mask = 0; mask < masks; ++mask) {
    for (size_t n = 0; n < n_cells; ++n) {
      decisions[n].active = (mask >> n) & 1U;
    }
    NetworkPlan plan =
        Assemble(scenario, tables, decisions, PlanMethod::kExhaustive);
    if (!best) {
      best = std::move(plan);
      continue;
    }
    // Feasible beats infeasible; among infeasible plans the smaller deficit
    // wins; otherwise the lower power.
    bool better;
    if (plan.feasible != best->feasible) {
      better = plan.feasible;
    } else if (!plan.feasible && plan.deficit != best->deficit) {
      better = plan.deficit < best->deficit;
    } else {
      better = plan.power.total < best->power.total;
    }
    if (better) best = std::move(plan);
  }
  return std::move(*best);
}

NetworkPlan make_plan(const Scenario& scenario, PlanMethod method) {
  switch (method) {
    case PlanMethod::kTeato:
      return teato(scenario);
    case PlanMethod::kGreedyNoSleep:
      return greedy_no_sleep(scenario);
    case PlanMethod::kGreedySleep:
      return greedy_with_sleep(scenario);
    case PlanMethod::kExhaustive:
      return exhaustive_search(scenario);
  }
  throw std::invalid_argument("make_plan: unknown method");
}

}  // namespace hcn
