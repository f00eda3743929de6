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

// Simulation oracles that share no code path with the closed forms:
//  * rate outage with Poisson user counts, uniform placement in the disc and
//    Rayleigh fading, evaluated on the exact (non-asymptotic) rate;
//  * an event-driven battery queue with Poisson arrivals and deterministic
//    unit consumption.
//
// Every trial draws from its own generator seeded from (seed, trial index),
// so results are bit-identical for a given seed and independent of how many
// trials follow.

#ifndef HCN_MONTECARLO_H_
#define HCN_MONTECARLO_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hcn/model.h"

namespace hcn {

enum class FadingEstimator {
  // Fading is integrated out per trial: each trial contributes
  // P(h < threshold | K, d) = 1 - exp(-threshold). Unbiased, lower variance.
  kConditional,
  // Each trial draws h ~ Exp(1) and counts rate < rate_req.
  kSampled,
};

struct SimConfig {
  int64_t trials = 10000;
  uint64_t seed = 1;
  double horizon = 0.0;  // queue oracle horizon (s); 0 means 1e6 / mu
  double warmup_fraction = 0.1;
  FadingEstimator fading = FadingEstimator::kConditional;
};

struct OutageSample {
  double probability = 0.0;
  double std_error = 0.0;
  int64_t trials = 0;
};

OutageSample simulate_outage_ssu(const SmallCellConfig& cell,
                                 const RadioEnv& env, const QosConfig& qos,
                                 double w_ss, double phi,
                                 const SimConfig& cfg);

// MSUs sit at the SBS location, served by the MBS over bandwidth w_ms.
OutageSample simulate_outage_msu(const SmallCellConfig& cell,
                                 const Scenario& scenario, double w_ms,
                                 double phi, const SimConfig& cfg);

struct QueueSimResult {
  std::vector<double> q;      // time-averaged fraction at each level
  double empty_fraction = 0.0;
  double shutdown_rate = 0.0;  // non-empty -> empty transitions per second
  double observed_time = 0.0;  // seconds after warm-up
  uint64_t arrivals = 0;
  uint64_t departures = 0;
};

QueueSimResult simulate_energy_queue(double lambda_e, double mu_e,
                                     const SimConfig& cfg);

// 0.5 * sum |p - q|, padding the shorter vector with zeros.
double total_variation(const std::vector<double>& p,
                       const std::vector<double>& q);

// Closed form against simulation over a rate sweep.
enum class UserClass { kSsu, kMsu };

struct OutageSweepSpec {
  std::vector<double> ssu_rates;       // bit/s
  double ssu_phi = 1.0;                // SSU bandwidth is the cell's W_s
  std::vector<double> msu_rates;       // bit/s
  std::vector<double> msu_distances;   // m
  double msu_bandwidth = 3e6;          // Hz
  double msu_phi = 0.0;
  double threshold = 0.1;              // compare only below this outage
  double tolerance = 0.1;              // relative error bound
};

OutageSweepSpec default_outage_sweep();

struct OutageComparison {
  UserClass user_class = UserClass::kSsu;
  std::string cell_id;
  double rate_req = 0.0;
  double dist_to_mbs = 0.0;
  double bandwidth = 0.0;
  double phi = 0.0;
  double closed_form = 0.0;
  bool regime_violation = false;
  double monte_carlo = 0.0;
  double std_error = 0.0;
  double rel_error = 0.0;  // |closed - mc| / mc
  bool counted = false;    // below threshold and inside the regime
  bool pass = true;
};

// SSU sweep for every cell; MSU sweep for every cell at each distance.
std::vector<OutageComparison> compare_outage(const Scenario& scenario,
                                             const OutageSweepSpec& sweep,
                                             const SimConfig& cfg);

// Generator for trial `index` of a run seeded with `seed`.
std::mt19937_64 TrialEngine(uint64_t seed, uint64_t index);

}  // namespace hcn

#endif  // HCN_MONTECARLO_H_
