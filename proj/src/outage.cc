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

#include "hcn/outage.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hcn {

namespace {

// Outage scale of a user uniformly placed in a disc of radius `radius`
// around the BS (distance pdf 2d / D^2).
double DiscOutageScale(double radius, double alpha, double theta,
                       double noise_density, const BsPowerParams& p) {
  return 2.0 * std::pow(radius, alpha) * (theta + 1.0) * noise_density *
         p.bandwidth / ((alpha + 2.0) * p.p_tx);
}

// Outage scale of a user at a fixed distance.
double PointOutageScale(double distance, double alpha, double theta,
                        double noise_density, const BsPowerParams& p) {
  return std::pow(distance, alpha) * (theta + 1.0) * noise_density *
         p.bandwidth / p.p_tx;
}

OutageEstimate ClosedForm(double scale, double rate_ratio, double sharers) {
  OutageEstimate out;
  out.raw = scale * (std::exp2(rate_ratio * (1.0 + sharers)) - 1.0);
  out.regime_violation = !(out.raw >= 0.0 && out.raw <= 1.0);
  out.probability = std::clamp(out.raw, 0.0, 1.0);
  return out;
}

}  // namespace

double mean_users(double density, double radius) {
  return density * std::numbers::pi * radius * radius;
}

OutageEstimate outage_ssu_closed(const SmallCellConfig& cell,
                                 const RadioEnv& env, const QosConfig& qos,
                                 double w_ss, double phi) {
  if (!(w_ss > 0.0)) throw std::domain_error("outage_ssu_closed: w_ss <= 0");
  if (!(phi >= 0.0 && phi <= 1.0)) {
    throw std::domain_error("outage_ssu_closed: phi outside [0, 1]");
  }
  const double scale = DiscOutageScale(cell.radius, env.alpha_s, env.theta_s,
                                       env.noise_density, cell.power);
  return ClosedForm(scale, qos.rate_req / w_ss,
                    phi * mean_users(cell.user_density, cell.radius));
}

OutageEstimate outage_msu_closed(const SmallCellConfig& cell,
                                 const Scenario& scenario, double w_ms,
                                 double phi) {
  if (!(w_ms > 0.0)) throw std::domain_error("outage_msu_closed: w_ms <= 0");
  if (!(cell.dist_to_mbs > 0.0)) {
    throw std::domain_error("outage_msu_closed: SBS co-located with MBS");
  }
  if (!(phi >= 0.0 && phi <= 1.0)) {
    throw std::domain_error("outage_msu_closed: phi outside [0, 1]");
  }
  const RadioEnv& env = scenario.env;
  const double scale =
      PointOutageScale(cell.dist_to_mbs, env.alpha_m, env.theta_m,
                       env.noise_density, scenario.macro.power);
  return ClosedForm(scale, scenario.qos.rate_req / w_ms,
                    (1.0 - phi) * mean_users(cell.user_density, cell.radius));
}

double tau_ss(const SmallCellConfig& cell, const RadioEnv& env,
              const QosConfig& qos) {
  const double scale = DiscOutageScale(cell.radius, env.alpha_s, env.theta_s,
                                       env.noise_density, cell.power);
  return std::log2(1.0 + qos.eta / scale);
}

double mmu_effective_density(const Scenario& scenario) {
  const double d0_sq = scenario.macro.radius * scenario.macro.radius;
  double covered = 0.0;
  for (const SmallCellConfig& c : scenario.cells) covered += c.radius * c.radius;
  return scenario.rho0 * (d0_sq - covered) / d0_sq;
}

double tau_mm(const Scenario& scenario) {
  const RadioEnv& env = scenario.env;
  const double scale =
      DiscOutageScale(scenario.macro.radius, env.alpha_m, env.theta_m,
                      env.noise_density, scenario.macro.power);
  return std::log2(1.0 + scenario.qos.eta / scale);
}

double tau_ms(const SmallCellConfig& cell, const Scenario& scenario) {
  if (!(cell.dist_to_mbs > 0.0)) {
    throw std::domain_error("tau_ms: SBS co-located with MBS");
  }
  const RadioEnv& env = scenario.env;
  const double scale =
      PointOutageScale(cell.dist_to_mbs, env.alpha_m, env.theta_m,
                       env.noise_density, scenario.macro.power);
  return std::log2(1.0 + scenario.qos.eta / scale);
}

SpectralEfficiencies spectral_efficiencies(const SmallCellConfig& cell,
                                           const Scenario& scenario) {
  return {tau_ss(cell, scenario.env, scenario.qos), tau_mm(scenario),
          tau_ms(cell, scenario)};
}

CellBandwidths cell_bandwidths(const SmallCellConfig& cell,
                               const SpectralEfficiencies& taus,
                               const QosConfig& qos, double phi) {
  const double users = mean_users(cell.user_density, cell.radius);
  const double per_ms = qos.rate_req / taus.tau_ms;
  CellBandwidths out;
  out.w_ms_off = per_ms * (1.0 + users);
  out.w_ms_active = per_ms * (1.0 + (1.0 - phi) * users);
  out.w_ss_min = qos.rate_req / taus.tau_ss * (1.0 + phi * users);
  return out;
}

double macro_only_bandwidth(const Scenario& scenario) {
  return scenario.qos.rate_req / tau_mm(scenario) *
         (1.0 + mean_users(mmu_effective_density(scenario),
                           scenario.macro.radius));
}

BandwidthRequirements required_bandwidths(const Scenario& scenario,
                                          const std::vector<double>& phi) {
  if (phi.size() != scenario.cells.size()) {
    throw std::invalid_argument("required_bandwidths: one phi per cell");
  }
  BandwidthRequirements out;
  out.w_mm = macro_only_bandwidth(scenario);
  out.cells.reserve(phi.size());
  for (size_t n = 0; n < phi.size(); ++n) {
    const SmallCellConfig& cell = scenario.cells[n];
    out.cells.push_back(cell_bandwidths(
        cell, spectral_efficiencies(cell, scenario), scenario.qos, phi[n]));
  }
  return out;
}

}  // namespace hcn
