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

// Network-level power accounting and activation planners for one MBS with
// several small cells.
//
// The MBS must reserve bandwidth for the worst case in which every RSBS runs
// dry at once (w_m_max). Planners differ in which cells they switch on:
//   * teato: per-cell optimization, then reactivation of sleeping hybrid or
//     grid cells in increasing cost-per-relieved-Hz order while the MBS is
//     overloaded;
//   * greedy_no_sleep: every SBS on, offloading as many users as possible;
//   * greedy_sleep: as above, but grid-only cells with non-positive gain
//     sleep whenever the MBS can absorb their users;
//   * exhaustive: all 2^N activation vectors.

#ifndef HCN_MULTI_CELL_H_
#define HCN_MULTI_CELL_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "hcn/model.h"
#include "hcn/single_cell.h"

namespace hcn {

enum class PlanMethod { kTeato, kGreedyNoSleep, kGreedySleep, kExhaustive };

std::string_view PlanMethodName(PlanMethod method);
std::optional<PlanMethod> ParsePlanMethod(std::string_view name);

struct NetworkPlan {
  PlanMethod method = PlanMethod::kTeato;
  std::vector<CellDecision> decisions;  // `active` holds the final state
  OffloadDecision allocation;
  double w_m_max = 0.0;
  double deficit = 0.0;  // max(0, w_m_max - W_m)
  bool feasible = false;
  PowerBreakdown power;
  std::vector<size_t> reactivated;  // cells switched on to relieve the MBS
};

// Builds allocation, bandwidth and power figures for fixed decisions.
NetworkPlan assemble_plan(const Scenario& scenario,
                          std::vector<CellDecision> decisions,
                          PlanMethod method);

double mbs_power(const NetworkPlan& plan, const Scenario& scenario);
PowerBreakdown network_power(const NetworkPlan& plan, const Scenario& scenario);
double w_m_max(const NetworkPlan& plan, const Scenario& scenario);

struct ReactivationCandidate {
  size_t cell = 0;
  double gain = 0.0;    // <= 0
  double relief = 0.0;  // > 0 (Hz)
};

struct ReactivationSet {
  std::vector<size_t> cells;  // in activation order
  bool feasible = false;
  double relief = 0.0;
  double cost = 0.0;  // sum of -gain
};

// Sorts by cost per relieved Hz, ties by cell index.
std::vector<ReactivationCandidate> reactivation_order(
    std::vector<ReactivationCandidate> candidates);

// Shortest prefix of reactivation_order whose relief covers `deficit`. When
// no prefix does, returns every candidate with feasible = false.
ReactivationSet reactivate_knapsack(
    const std::vector<ReactivationCandidate>& candidates, double deficit);

NetworkPlan teato(const Scenario& scenario);
NetworkPlan greedy_no_sleep(const Scenario& scenario);
NetworkPlan greedy_with_sleep(const Scenario& scenario);

inline constexpr size_t kMaxExhaustiveCells = 20;

// Throws std::invalid_argument above kMaxExhaustiveCells cells.
NetworkPlan exhaustive_search(const Scenario& scenario);

NetworkPlan make_plan(const Scenario& scenario, PlanMethod method);

}  // namespace hcn

#endif  // HCN_MULTI_CELL_H_
