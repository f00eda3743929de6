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

// Asymptotic (high SINR, large bandwidth) rate-outage probabilities and the
// minimum-bandwidth constraints they induce.
//
// Users form a Poisson point process, share their serving BS's bandwidth
// equally and see Rayleigh fading. With R = rate_req / w and N the mean
// number of users sharing w, the outage of a tagged user is approximately
//
//   G = c * (2^(R (1 + N)) - 1),
//
// where c collects noise, interference and path loss at the relevant
// distance. G <= eta is then equivalent to w / (1 + N) * tau >= rate_req with
// tau = log2(1 + eta / c), the edge spectral efficiency.

#ifndef HCN_OUTAGE_H_
#define HCN_OUTAGE_H_

#include <vector>

#include "hcn/model.h"

namespace hcn {

struct SpectralEfficiencies {
  double tau_ss = 0.0;  // SSU edge efficiency of the cell (bit/s/Hz)
  double tau_mm = 0.0;  // MMU edge efficiency (bit/s/Hz)
  double tau_ms = 0.0;  // MSU efficiency of the cell (bit/s/Hz)
};

struct OutageEstimate {
  double probability = 0.0;  // clamped to [0, 1]
  double raw = 0.0;          // unclamped closed-form value
  bool regime_violation = false;
};

// Mean number of users in a cell served by one BS: density * pi * D^2.
double mean_users(double density, double radius);

// Outage of an SSU of `cell` when the SBS uses bandwidth w_ss and a fraction
// phi of the cell's users is offloaded to it.
OutageEstimate outage_ssu_closed(const SmallCellConfig& cell,
                                 const RadioEnv& env, const QosConfig& qos,
                                 double w_ss, double phi);

// Outage of an MSU of `cell` served by the MBS with bandwidth w_ms; all MSUs
// are placed at the SBS location.
OutageEstimate outage_msu_closed(const SmallCellConfig& cell,
                                 const Scenario& scenario, double w_ms,
                                 double phi);

double tau_ss(const SmallCellConfig& cell, const RadioEnv& env,
              const QosConfig& qos);

// Density of macro-only users spread uniformly over the whole macro disc.
double mmu_effective_density(const Scenario& scenario);

double tau_mm(const Scenario& scenario);

// Throws std::domain_error when the SBS is co-located with the MBS.
double tau_ms(const SmallCellConfig& cell, const Scenario& scenario);

SpectralEfficiencies spectral_efficiencies(const SmallCellConfig& cell,
                                           const Scenario& scenario);

struct CellBandwidths {
  double w_ms_active = 0.0;
  double w_ms_off = 0.0;
  double w_ss_min = 0.0;
};

struct BandwidthRequirements {
  double w_mm = 0.0;
  std::vector<CellBandwidths> cells;
};

// Minimum bandwidths meeting every outage constraint for the given per-cell
// offload ratios. `phi` must have one entry per cell.
BandwidthRequirements required_bandwidths(const Scenario& scenario,
                                          const std::vector<double>& phi);

// Single-cell form of required_bandwidths.
CellBandwidths cell_bandwidths(const SmallCellConfig& cell,
                               const SpectralEfficiencies& taus,
                               const QosConfig& qos, double phi);

double macro_only_bandwidth(const Scenario& scenario);

}  // namespace hcn

#endif  // HCN_OUTAGE_H_
