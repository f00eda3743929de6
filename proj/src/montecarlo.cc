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

#include "hcn/montecarlo.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hcn/outage.h"

namespace hcn {

namespace {

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct LinkBudget {
  double bandwidth;      // shared by all users of the BS (Hz)
  double snr_scale;      // P_T / ((theta + 1) sigma^2 W_bs), per unit d^-alpha
  double alpha;
  double mean_sharers;   // mean number of other users on the same bandwidth
};

// Either the outage indicator of one trial or its conditional probability
// given the user count and distance.
double TrialOutage(const LinkBudget& link, double rate_req, double distance,
                   std::mt19937_64& rng, FadingEstimator fading) {
  int others = 0;
  if (link.mean_sharers > 0.0) {
    std::poisson_distribution<int> count(link.mean_sharers);
    others = count(rng);
  }
  const double mean_snr = link.snr_scale * std::pow(distance, -link.alpha);
  if (fading == FadingEstimator::kSampled) {
    std::exponential_distribution<double> fade(1.0);
    const double sinr = mean_snr * fade(rng);
    const double rate =
        link.bandwidth / (others + 1.0) * std::log2(1.0 + sinr);
    return rate < rate_req ? 1.0 : 0.0;
  }
  // rate < R  <=>  h < (2^((K+1) R / w) - 1) / mean_snr, with h ~ Exp(1).
  const double threshold =
      std::expm1((others + 1.0) * rate_req / link.bandwidth * std::numbers::ln2) /
      mean_snr;
  return -std::expm1(-threshold);
}

OutageSample Summarize(double sum, double sum_sq, int64_t trials) {
  OutageSample out;
  out.trials = trials;
  out.probability = sum / trials;
  const double var =
      trials > 1 ? std::max(0.0, (sum_sq - sum * sum / trials) / (trials - 1))
                 : 0.0;
  out.std_error = std::sqrt(var / trials);
  return out;
}

void CheckTrials(const SimConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("SimConfig: trials < 1");
}

}  // namespace

std::mt19937_64 TrialEngine(uint64_t seed, uint64_t index) {
  std::seed_seq seq{static_cast<uint32_t>(SplitMix64(seed)),
                    static_cast<uint32_t>(SplitMix64(seed) >> 32),
                    static_cast<uint32_t>(SplitMix64(index ^ 0x5bd1e995ULL)),
                    static_cast<uint32_t>(SplitMix64(index) >> 32)};
  return std::mt19937_64(seq);
}

OutageSample simulate_outage_ssu(const SmallCellConfig& cell,
                                 const RadioEnv& env, const QosConfig& qos,
                                 double w_ss, double phi,
                                 const SimConfig& cfg) {
  CheckTrials(cfg);
  if (!(w_ss > 0.0)) throw std::domain_error("simulate_outage_ssu: w_ss <= 0");
  const LinkBudget link{
      w_ss,
      cell.power.p_tx /
          ((env.theta_s + 1.0) * env.noise_density * cell.power.bandwidth),
      env.alpha_s,
      phi * cell.user_density * std::numbers::pi * cell.radius * cell.radius};
  double sum = 0.0, sum_sq = 0.0;
  for (int64_t t = 0; t < cfg.trials; ++t) {
    std::mt19937_64 rng = TrialEngine(cfg.seed, static_cast<uint64_t>(t));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    // Uniform in the disc: d = D sqrt(U) has pdf 2d / D^2.
    const double distance = cell.radius * std::sqrt(unit(rng));
    const double v = TrialOutage(link, qos.rate_req, distance, rng, cfg.fading);
    sum += v;
    sum_sq += v * v;
  }
  return Summarize(sum, sum_sq, cfg.trials);
}

OutageSample simulate_outage_msu(const SmallCellConfig& cell,
                                 const Scenario& scenario, double w_ms,
                                 double phi, const SimConfig& cfg) {
  CheckTrials(cfg);
  if (!(w_ms > 0.0)) throw std::domain_error("simulate_outage_msu: w_ms <= 0");
  const RadioEnv& env = scenario.env;
  const BsPowerParams& macro = scenario.macro.power;
  const LinkBudget link{
      w_ms,
      macro.p_tx / ((env.theta_m + 1.0) * env.noise_density * macro.bandwidth),
      env.alpha_m,
      (1.0 - phi) * cell.user_density * std::numbers::pi * cell.radius *
          cell.radius};
  double sum = 0.0, sum_sq = 0.0;
  for (int64_t t = 0; t < cfg.trials; ++t) {
    std::mt19937_64 rng = TrialEngine(cfg.seed, static_cast<uint64_t>(t));
    const double v = TrialOutage(link, scenario.qos.rate_req,
                                 cell.dist_to_mbs, rng, cfg.fading);
    sum += v;
    sum_sq += v * v;
  }
  return Summarize(sum, sum_sq, cfg.trials);
}

QueueSimResult simulate_energy_queue(double lambda_e, double mu_e,
                                     const SimConfig& cfg) {
  if (!(mu_e > 0.0)) throw std::domain_error("simulate_energy_queue: mu <= 0");
  if (!(lambda_e >= 0.0)) {
    throw std::domain_error("simulate_energy_queue: lambda < 0");
  }
  const double service = 1.0 / mu_e;
  const double horizon = cfg.horizon > 0.0 ? cfg.horizon : 1e6 * service;
  const double warmup = cfg.warmup_fraction * horizon;
  constexpr double kNever = std::numeric_limits<double>::infinity();

  std::mt19937_64 rng = TrialEngine(cfg.seed, 0);
  std::exponential_distribution<double> gap(lambda_e > 0.0 ? lambda_e : 1.0);

  QueueSimResult out;
  std::vector<double> occupancy(1, 0.0);
  uint64_t shutdowns = 0;
  size_t level = 0;
  double now = 0.0;
  double next_arrival = lambda_e > 0.0 ? gap(rng) : kNever;
  double next_departure = kNever;

  auto account = [&](double until) {
    const double from = std::max(now, warmup);
    const double to = std::min(until, horizon);
    if (to > from) {
      if (level >= occupancy.size()) occupancy.resize(level + 1, 0.0);
      occupancy[level] += to - from;
    }
  };

  while (now < horizon) {
    const double next = std::min(next_arrival, next_departure);
    account(next);
    if (next >= horizon) break;
    now = next;
    const bool observed = now >= warmup;
    if (next_arrival <= next_departure) {
      if (level == 0) next_departure = now + service;
      ++level;
      next_arrival = now + gap(rng);
      if (observed) ++out.arrivals;
    } else {
      --level;
      next_departure = level > 0 ? now + service : kNever;
      if (observed) {
        ++out.departures;
        if (level == 0) ++shutdowns;
      }
    }
  }

  out.observed_time = horizon - warmup;
  out.q.resize(occupancy.size());
  for (size_t i = 0; i < occupancy.size(); ++i) {
    out.q[i] = occupancy[i] / out.observed_time;
  }
  out.empty_fraction = out.q.empty() ? 1.0 : out.q[0];
  out.shutdown_rate = shutdowns / out.observed_time;
  return out;
}

double total_variation(const std::vector<double>& p,
                       const std::vector<double>& q) {
  const size_t n = std::max(p.size(), q.size());
  double sum = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double a = i < p.size() ? p[i] : 0.0;
    const double b = i < q.size() ? q[i] : 0.0;
    sum += std::abs(a - b);
  }
  return 0.5 * sum;
}

OutageSweepSpec default_outage_sweep() {
  OutageSweepSpec s;
  for (int k = 1; k <= 10; ++k) s.ssu_rates.push_back(100e3 * k);
  s.msu_rates = {20e3, 50e3, 100e3, 150e3, 200e3, 300e3, 400e3};
  s.msu_distances = {300.0, 600.0, 900.0};
  return s;
}

namespace {

void Finish(OutageComparison& c, const OutageEstimate& closed,
            const OutageSample& mc, const OutageSweepSpec& sweep) {
  c.closed_form = closed.raw;
  c.regime_violation = closed.regime_violation;
  c.monte_carlo = mc.probability;
  c.std_error = mc.std_error;
  c.rel_error = mc.probability > 0.0
                    ? std::abs(closed.raw - mc.probability) / mc.probability
                    : (closed.raw == 0.0 ? 0.0 : 1.0);
  c.counted = !closed.regime_violation && closed.raw < sweep.threshold;
  c.pass = !c.counted || c.rel_error < sweep.tolerance;
}

}  // namespace

std::vector<OutageComparison> compare_outage(const Scenario& scenario,
                                             const OutageSweepSpec& sweep,
                                             const SimConfig& cfg) {
  std::vector<OutageComparison> out;
  for (const SmallCellConfig& cell : scenario.cells) {
    for (double rate : sweep.ssu_rates) {
      QosConfig qos = scenario.qos;
      qos.rate_req = rate;
      OutageComparison c;
      c.user_class = UserClass::kSsu;
      c.cell_id = cell.id;
      c.rate_req = rate;
      c.dist_to_mbs = cell.dist_to_mbs;
      c.bandwidth = cell.power.bandwidth;
      c.phi = sweep.ssu_phi;
      Finish(c,
             outage_ssu_closed(cell, scenario.env, qos, c.bandwidth, c.phi),
             simulate_outage_ssu(cell, scenario.env, qos, c.bandwidth, c.phi,
                                 cfg),
             sweep);
      out.push_back(std::move(c));
    }
    for (double dist : sweep.msu_distances) {
      SmallCellConfig moved = cell;
      moved.dist_to_mbs = dist;
      for (double rate : sweep.msu_rates) {
        Scenario s = scenario;
        s.qos.rate_req = rate;
        OutageComparison c;
        c.user_class = UserClass::kMsu;
        c.cell_id = cell.id;
        c.rate_req = rate;
        c.dist_to_mbs = dist;
        c.bandwidth = sweep.msu_bandwidth;
        c.phi = sweep.msu_phi;
        Finish(c, outage_msu_closed(moved, s, c.bandwidth, c.phi),
               simulate_outage_msu(moved, s, c.bandwidth, c.phi, cfg), sweep);
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

}  // namespace hcn
