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

// Single small-cell optimization: the on-grid power saved by activating one
// SBS as a function of its energy consumption rate mu_e, the optimal rate and
// the activation rule.
//
// Notation used throughout:
//   zeta  = (W_s tau_ss beta_m P_Tm) / (W_m tau_ms beta_s P_Ts), the ratio of
//           bits per joule at the SBS to bits per joule at the MBS;
//   kappa = zeta P_Cs + beta_m P_Tm R_Q / (W_m tau_ms), the fixed on-grid
//           price of switching the SBS on.
//
// A grid-only cell is handled as a hybrid cell with zero energy arrival.

#ifndef HCN_SINGLE_CELL_H_
#define HCN_SINGLE_CELL_H_

#include <cstddef>

#include "hcn/model.h"
#include "hcn/outage.h"

namespace hcn {

struct CellContext {
  SmallCellConfig cell;
  SpectralEfficiencies taus;
  BsPowerParams macro;
  QosConfig qos;
};

// Recomputes the spectral efficiencies of cell `index` from the scenario.
CellContext make_cell_context(const Scenario& scenario, size_t index);
CellContext make_cell_context(const SmallCellConfig& cell,
                              const Scenario& scenario);

struct CellDecision {
  bool active = false;
  double mu_e = 0.0;      // optimal consumption rate (also kept when inactive)
  double phi = 0.0;       // offload ratio the cell would serve at mu_e
  double w_ss = 0.0;      // SBS bandwidth at mu_e
  double gain = 0.0;      // power saving of activation at mu_e (W)
  double delta_bw = 0.0;  // MBS bandwidth relieved by activation (Hz); 0 for RSBS
};

struct MuBounds {
  double lower = 0.0;  // idle SBS: P_Cs / E
  double upper = 0.0;  // SBS serving as many users as its bandwidth allows
};

MuBounds feasible_mu(const CellContext& ctx);

double zeta_ee(const CellContext& ctx);
double kappa(const CellContext& ctx);

// Largest offload ratio the SBS supports at consumption rate mu_e, in [0, 1].
double offload_ratio(const CellContext& ctx, double mu_e);

// MBS bandwidth relieved (w_ms_off - w_ms_active) at consumption rate mu_e.
double bandwidth_relief(const CellContext& ctx, double mu_e);

// Power saving of a hybrid (or grid-only) SBS. Piecewise linear in mu_e with
// a single breakpoint at the energy arrival rate. Throws std::domain_error
// outside feasible_mu.
double gain_hsbs(double mu_e, const CellContext& ctx);

double optimal_mu_hsbs(const CellContext& ctx);

// `mbs_overloaded` forces activation: the MBS cannot carry the cell's users.
CellDecision decide_hsbs(const CellContext& ctx, bool mbs_overloaded = false);

// MBS power saved by a renewable SBS before handover costs.
double mbs_saving_rsbs(double mu_e, const CellContext& ctx);

// Power saving of a renewable-only SBS: MBS saving minus handover power.
double gain_rsbs(double mu_e, const CellContext& ctx);

// f(x) = e^-x (e^x - 1 - x + x^2) / x^2. Decreasing on (0, 1) from 3/2 to
// 1 - 1/e. For mu_e > lambda_e the slope of gain_rsbs in x = lambda_e / mu_e
// is -kappa + 2 lambda_e C_HO f(x).
double handover_slope_factor(double x);

enum class RsbsRegime {
  kIncreasing,  // kappa >= 3 lambda C: gain increases with mu_e
  kDecreasing,  // gain decreases for mu_e > lambda_e
  kInterior,    // concave in x with a stationary point in (0, 1)
  kNoArrivals,  // lambda_e = 0: the cell never runs
};

RsbsRegime rsbs_regime(const CellContext& ctx);

double optimal_mu_rsbs(const CellContext& ctx);

CellDecision decide_rsbs(const CellContext& ctx);

// Dispatches on the cell kind.
CellDecision decide(const CellContext& ctx, bool mbs_overloaded = false);

// Conventional greedy offloading: always active and serving as many users as
// possible.
CellDecision greedy_decision(const CellContext& ctx);

}  // namespace hcn

#endif  // HCN_SINGLE_CELL_H_
