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

// Domain types of a two-tier heterogeneous cellular network (one macro base
// station plus non-overlapping small cells) and the base-station power
// primitives shared by every other module.
//
// All quantities are SI: W, Hz, J, m, users/m^2, energy units per second.

#ifndef HCN_MODEL_H_
#define HCN_MODEL_H_

#include <string>
#include <string_view>
#include <vector>

namespace hcn {

// Power model of one base station: P = P_C + (w / W) * beta * P_T while
// active, zero while asleep.
struct BsPowerParams {
  double p_tx = 0.0;       // transmit power level P_T (W)
  double p_const = 0.0;    // constant site power P_C (W)
  double beta = 0.0;       // inverse power-amplifier efficiency
  double bandwidth = 0.0;  // system bandwidth available to the BS (Hz)
};

// EARTH power-model rows. Bandwidth is left to the caller.
BsPowerParams MacroPowerParams(double bandwidth);
BsPowerParams MicroPowerParams(double bandwidth);
BsPowerParams PicoPowerParams(double bandwidth);
BsPowerParams FemtoPowerParams(double bandwidth);

struct QosConfig {
  double rate_req = 0.0;  // per-user rate requirement (bit/s)
  double eta = 0.0;       // maximum outage probability, in (0, 1)
};

struct RadioEnv {
  double alpha_m = 0.0;        // macro-tier path-loss exponent
  double alpha_s = 0.0;        // small-cell-tier path-loss exponent
  double theta_m = 0.0;        // macro-tier interference-to-noise ratio
  double theta_s = 0.0;        // small-cell-tier interference-to-noise ratio
  double noise_density = 0.0;  // noise power spectral density (W/Hz)
};

// Converts a noise density given in dBm/MHz to W/Hz.
double NoiseDensityFromDbmPerMhz(double dbm_per_mhz);

enum class SbsKind {
  kConventional,  // CSBS: on-grid only
  kRenewable,     // RSBS: harvested energy only
  kHybrid,        // HSBS: harvested energy with on-grid backup
};

std::string_view SbsKindName(SbsKind kind);

struct SmallCellConfig {
  std::string id;
  SbsKind kind = SbsKind::kConventional;
  double radius = 0.0;       // coverage radius D_n (m)
  double dist_to_mbs = 0.0;  // distance between SBS and MBS (m)
  double azimuth = 0.0;      // bearing of the SBS seen from the MBS (rad)
  BsPowerParams power;
  double energy_unit = 1.0;     // size of one battery unit E (J)
  double energy_arrival = 0.0;  // harvested units per second
  double handover_cost = 0.0;   // J per handover event (RSBS only)
  double user_density = 0.0;    // users/m^2 inside the small cell
};

struct MacroCell {
  double radius = 0.0;  // D_0 (m)
  BsPowerParams power;
};

struct Scenario {
  MacroCell macro;
  RadioEnv env;
  QosConfig qos;
  std::vector<SmallCellConfig> cells;
  double rho0 = 0.0;  // user density outside all small cells (users/m^2)
};

// Per-cell share of an offloading decision.
struct CellAllocation {
  bool active = false;
  double mu_e = 0.0;         // energy consumption rate (units/s)
  double phi = 0.0;          // offload ratio
  double w_ss = 0.0;         // SBS utilized bandwidth (Hz)
  double w_ms_active = 0.0;  // MBS bandwidth for this cell's MSUs, SBS on
  double w_ms_off = 0.0;     // MBS bandwidth for this cell's MSUs, SBS off
};

struct OffloadDecision {
  std::vector<CellAllocation> cells;
  double w_mm = 0.0;  // MBS bandwidth reserved for macro-only users (Hz)
};

// On-grid power of a network, split by source.
struct PowerBreakdown {
  double mbs_const = 0.0;
  double mbs_rf = 0.0;
  double mbs = 0.0;                 // mbs_const + mbs_rf
  std::vector<double> cell_grid;    // on-grid draw of each SBS
  std::vector<double> cell_handover;  // handover power of each SBS
  double sbs_total = 0.0;
  double handover = 0.0;
  double total = 0.0;
};

enum class BsMode { kActive, kSleep };

// Power drawn by a base station using `w_used` of its bandwidth.
// Throws std::domain_error when w_used lies outside [0, bandwidth].
double bs_power(const BsPowerParams& params, double w_used,
                BsMode mode = BsMode::kActive);

// Battery units consumed per second by an SBS using bandwidth `w_ss`.
double energy_service_rate(const BsPowerParams& params, double w_ss,
                           double energy_unit);

// Inverse of energy_service_rate. Throws std::domain_error when
// mu_e * energy_unit is below the constant power.
double sbs_bandwidth_from_rate(double mu_e, const BsPowerParams& params,
                               double energy_unit);

struct Violation {
  std::string field;
  std::string message;
};

std::vector<Violation> validate_scenario(const Scenario& s);

}  // namespace hcn

#endif  // HCN_MODEL_H_
