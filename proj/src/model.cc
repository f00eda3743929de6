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

#include "hcn/model.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hcn {

namespace {

// Relative slack for bandwidth range checks; optimizer outputs land exactly on
// the bounds up to rounding.
constexpr double kBandwidthSlack = 1e-12;

void CheckPositive(std::vector<Violation>& out, const std::string& field,
                   double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    out.push_back({field, "must be finite and > 0"});
  }
}

void CheckNonNegative(std::vector<Violation>& out, const std::string& field,
                      double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    out.push_back({field, "must be finite and >= 0"});
  }
}

void CheckPower(std::vector<Violation>& out, const std::string& prefix,
                const BsPowerParams& p) {
  CheckPositive(out, prefix + ".p_tx", p.p_tx);
  CheckPositive(out, prefix + ".p_const", p.p_const);
  CheckPositive(out, prefix + ".beta", p.beta);
  CheckPositive(out, prefix + ".bandwidth", p.bandwidth);
}

}  // namespace

BsPowerParams MacroPowerParams(double bandwidth) {
  return {20.0, 130.0, 4.7, bandwidth};
}
BsPowerParams MicroPowerParams(double bandwidth) {
  return {6.3, 56.0, 2.6, bandwidth};
}
BsPowerParams PicoPowerParams(double bandwidth) {
  return {0.13, 6.8, 4.0, bandwidth};
}
BsPowerParams FemtoPowerParams(double bandwidth) {
  return {0.05, 4.8, 8.0, bandwidth};
}

double NoiseDensityFromDbmPerMhz(double dbm_per_mhz) {
  // dBm -> W is 10^(x/10 - 3); per MHz -> per Hz is 1e-6.
  return std::pow(10.0, dbm_per_mhz / 10.0 - 3.0) * 1e-6;
}

std::string_view SbsKindName(SbsKind kind) {
  switch (kind) {
    case SbsKind::kConventional:
      return "CSBS";
    case SbsKind::kRenewable:
      return "RSBS";
    case SbsKind::kHybrid:
      return "HSBS";
  }
  return "?";
}

double bs_power(const BsPowerParams& params, double w_used, BsMode mode) {
  if (!(w_used >= 0.0) ||
      w_used > params.bandwidth * (1.0 + kBandwidthSlack)) {
    throw std::domain_error("bs_power: utilized bandwidth " +
                            std::to_string(w_used) + " outside [0, " +
                            std::to_string(params.bandwidth) + "]");
  }
  if (mode == BsMode::kSleep) return 0.0;
  return params.p_const + (w_used / params.bandwidth) * params.beta * params.p_tx;
}

double energy_service_rate(const BsPowerParams& params, double w_ss,
                           double energy_unit) {
  if (!(energy_unit > 0.0)) {
    throw std::domain_error("energy_service_rate: energy unit must be > 0");
  }
  return bs_power(params, w_ss) / energy_unit;
}

double sbs_bandwidth_from_rate(double mu_e, const BsPowerParams& params,
                               double energy_unit) {
  if (!(energy_unit > 0.0)) {
    throw std::domain_error("sbs_bandwidth_from_rate: energy unit must be > 0");
  }
  const double drain = mu_e * energy_unit;
  if (drain < params.p_const) {
    throw std::domain_error(
        "sbs_bandwidth_from_rate: consumption rate below constant power");
  }
  return (drain - params.p_const) * params.bandwidth /
         (params.beta * params.p_tx);
}

std::vector<Violation> validate_scenario(const Scenario& s) {
  std::vector<Violation> out;
  CheckPositive(out, "macro.radius", s.macro.radius);
  CheckPower(out, "macro.power", s.macro.power);

  CheckPositive(out, "qos.rate_req", s.qos.rate_req);
  if (!(s.qos.eta > 0.0 && s.qos.eta < 1.0)) {
    out.push_back({"qos.eta", "must lie in (0, 1)"});
  }

  if (!(s.env.alpha_m > 2.0)) out.push_back({"env.alpha_m", "must be > 2"});
  if (!(s.env.alpha_s > 2.0)) out.push_back({"env.alpha_s", "must be > 2"});
  CheckNonNegative(out, "env.theta_m", s.env.theta_m);
  CheckNonNegative(out, "env.theta_s", s.env.theta_s);
  CheckPositive(out, "env.noise_density", s.env.noise_density);
  CheckNonNegative(out, "rho0", s.rho0);

  double area_sum = 0.0;
  for (size_t n = 0; n < s.cells.size(); ++n) {
    const SmallCellConfig& c = s.cells[n];
    const std::string prefix = "cells[" + std::to_string(n) + "]";
    CheckPositive(out, prefix + ".radius", c.radius);
    CheckNonNegative(out, prefix + ".dist_to_mbs", c.dist_to_mbs);
    CheckPower(out, prefix + ".power", c.power);
    CheckPositive(out, prefix + ".energy_unit", c.energy_unit);
    CheckNonNegative(out, prefix + ".energy_arrival", c.energy_arrival);
    CheckNonNegative(out, prefix + ".handover_cost", c.handover_cost);
    CheckNonNegative(out, prefix + ".user_density", c.user_density);
    if (c.kind == SbsKind::kConventional && c.energy_arrival != 0.0) {
      out.push_back({prefix + ".energy_arrival",
                     "must be 0 for a grid-only (CSBS) cell"});
    }
    if (c.dist_to_mbs + c.radius > s.macro.radius) {
      out.push_back({prefix + ".dist_to_mbs",
                     "small cell disc extends beyond the macro cell (" +
                         std::to_string(c.dist_to_mbs + c.radius) + " > " +
                         std::to_string(s.macro.radius) + ")"});
    }
    area_sum += c.radius * c.radius;
  }

  if (!s.cells.empty() && !(area_sum < s.macro.radius * s.macro.radius)) {
    out.push_back({"cells", "sum of squared small-cell radii must be below "
                            "the squared macro radius"});
  }

  for (size_t i = 0; i < s.cells.size(); ++i) {
    const SmallCellConfig& a = s.cells[i];
    const double ax = a.dist_to_mbs * std::cos(a.azimuth);
    const double ay = a.dist_to_mbs * std::sin(a.azimuth);
    for (size_t j = i + 1; j < s.cells.size(); ++j) {
      const SmallCellConfig& b = s.cells[j];
      const double bx = b.dist_to_mbs * std::cos(b.azimuth);
      const double by = b.dist_to_mbs * std::sin(b.azimuth);
      const double gap = std::hypot(ax - bx, ay - by);
      // Tangent discs are accepted; the 1e-9 m slack absorbs trigonometry.
      if (gap + 1e-9 < a.radius + b.radius) {
        out.push_back({"cells[" + std::to_string(i) + "],cells[" +
                           std::to_string(j) + "]",
                       "small cell discs overlap (center gap " +
                           std::to_string(gap) + " m)"});
      }
    }
  }
  return out;
}

}  // namespace hcn
