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

// Scenario files, daily traffic and energy profiles, and the day-long
// experiment that plans every period independently with several methods.
//
// Scenario JSON (SI units unless the key says otherwise):
//
//   {
//     "macro": {"radius": 1000, "power": "macro", "bandwidth": 10e6},
//     "env":   {"alpha_m": 3.5, "alpha_s": 4, "theta_m": 1000,
//               "theta_s": 500, "noise_dbm_per_mhz": -105},
//     "qos":   {"rate_req": 3e5, "eta": 0.05},
//     "rho0":  2e-5,
//     "cells": [{"id": "s1", "kind": "hybrid", "radius": 300,
//                "dist_to_mbs": 600, "azimuth_deg": 0, "power": "micro",
//                "bandwidth": 5e6, "energy_unit": 1, "energy_arrival": 10,
//                "handover_cost": 0, "user_density": 4e-5}],
//     "profiles": {"kind": "sunny", "periods": 24}
//   }
//
// "power" is a preset name (macro, micro, pico, femto) or an object with
// p_tx, p_const and beta. Omitted radio fields take the reference values
// above; theta_s defaults to 500 with at most one small cell and 2000
// otherwise. A cell's user_density defaults to twice rho0, its dist_to_mbs
// to 600 m and its azimuth to an even spread around the MBS.

#ifndef HCN_SCENARIO_H_
#define HCN_SCENARIO_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hcn/model.h"
#include "hcn/multi_cell.h"

namespace hcn {

// Parse or validation failure. `path` names the offending field, e.g.
// "cells[2].radius".
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Shapes are sampled at hour 24 t / T for t = 0..T-1.
struct DailyProfiles {
  int periods = 24;
  std::vector<double> traffic_shape;  // in [0, 1]
  std::vector<double> energy_shape;   // in [0, 1]
  // users/m^2 outside small cells at traffic_shape = 1; 0 keeps the
  // scenario's rho0 as the peak.
  double traffic_peak = 0.0;
  // Harvested units/s at energy_shape = 1; 0 keeps each cell's own
  // energy_arrival as its peak.
  double energy_peak = 0.0;
};

enum class ProfileKind { kSunny, kCloudy };

inline constexpr double kSunnyEnergyPeak = 500.0;
inline constexpr double kCloudyEnergyPeak = 50.0;

std::optional<ProfileKind> ParseProfileKind(std::string_view name);

// Traffic: raised cosine from 10% of peak at 04:00 up to the peak at 20:00
// and back down by 04:00. Energy: 0.5 (1 + cos(pi (h - 13) / 7)) between
// 06:00 and 20:00, zero otherwise. Both rescaled so the sampled maximum is 1.
// Sunny and cloudy days differ only in energy_peak.
DailyProfiles synthetic_profiles(ProfileKind kind, int periods = 24);

struct LoadedScenario {
  Scenario scenario;
  std::optional<DailyProfiles> profiles;
};

// `base_dir` resolves a relative profiles CSV path.
LoadedScenario parse_scenario(std::string_view json_text,
                              const std::string& base_dir = ".");
LoadedScenario load_scenario(const std::string& path);

// CSV with header `period,traffic,energy` and one row per period.
DailyProfiles parse_profiles_csv(std::string_view csv_text);
DailyProfiles load_profiles_csv(const std::string& path);

// The scenario of period t: all user densities scaled by the traffic shape,
// harvesting cells' arrival rates by the energy shape.
Scenario scenario_at_period(const Scenario& base, const DailyProfiles& profiles,
                            int period);

// Every SBS grid-powered, always on at full bandwidth, MBS at full bandwidth.
double reference_power(const Scenario& scenario);

struct PeriodResult {
  int period = 0;
  PlanMethod method = PlanMethod::kTeato;
  bool feasible = false;
  PowerBreakdown power;
  double reference = 0.0;
  double normalized = 0.0;
  std::vector<bool> active;
};

struct DailyResult {
  std::vector<PlanMethod> methods;
  std::vector<PeriodResult> rows;  // period-major, methods in given order
  std::map<PlanMethod, double> mean_power;
  std::map<PlanMethod, double> mean_normalized;
};

DailyResult daily_run(const Scenario& scenario, const DailyProfiles& profiles,
                      const std::vector<PlanMethod>& methods);

// (mean power of `baseline` - mean power of `method`) / mean of `baseline`.
double mean_saving(const DailyResult& result, PlanMethod method,
                   PlanMethod baseline);

// `period,method,feasible,p_mbs,p_sbs_total,p_ho,total,normalized`
std::string results_csv(const DailyResult& result);

// Per-method means and pairwise savings (percent).
std::string summary_json(const DailyResult& result);

}  // namespace hcn

#endif  // HCN_SCENARIO_H_
