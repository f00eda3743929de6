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

#include "hcn/single_cell.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hcn/energy_queue.h"

namespace hcn {

namespace {

constexpr double kMuSlack = 1e-9;

void CheckFeasible(double mu_e, const CellContext& ctx, const char* who) {
  const MuBounds b = feasible_mu(ctx);
  const double slack = kMuSlack * std::max(1.0, b.upper);
  if (!(mu_e >= b.lower - slack && mu_e <= b.upper + slack)) {
    throw std::domain_error(std::string(who) +
                            ": consumption rate outside feasible range");
  }
}

double ArrivalRate(const CellContext& ctx) {
  return ctx.cell.kind == SbsKind::kConventional ? 0.0
                                                 : ctx.cell.energy_arrival;
}

double MacroRfPerHz(const CellContext& ctx) {
  return ctx.macro.beta * ctx.macro.p_tx / ctx.macro.bandwidth;
}

// Argmax of a unimodal function on [lo, hi] by golden-section search.
template <typename F>
double GoldenSectionMax(F f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) > 1e-12 * std::max(1.0, hi); ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

CellDecision Evaluate(const CellContext& ctx, double mu_e, double gain) {
  CellDecision d;
  d.mu_e = mu_e;
  d.gain = gain;
  d.phi = offload_ratio(ctx, mu_e);
  d.w_ss = sbs_bandwidth_from_rate(mu_e, ctx.cell.power, ctx.cell.energy_unit);
  d.w_ss = std::clamp(d.w_ss, 0.0, ctx.cell.power.bandwidth);
  d.delta_bw = bandwidth_relief(ctx, mu_e);
  return d;
}

}  // namespace

CellContext make_cell_context(const SmallCellConfig& cell,
                              const Scenario& scenario) {
  return {cell, spectral_efficiencies(cell, scenario), scenario.macro.power,
          scenario.qos};
}

CellContext make_cell_context(const Scenario& scenario, size_t index) {
  return make_cell_context(scenario.cells.at(index), scenario);
}

MuBounds feasible_mu(const CellContext& ctx) {
  const SmallCellConfig& c = ctx.cell;
  const double users = mean_users(c.user_density, c.radius);
  const double load = std::min(
      1.0, ctx.qos.rate_req / (ctx.taus.tau_ss * c.power.bandwidth) *
               (users + 1.0));
  return {c.power.p_const / c.energy_unit,
          (c.power.p_const + load * c.power.beta * c.power.p_tx) /
              c.energy_unit};
}

double zeta_ee(const CellContext& ctx) {
  const BsPowerParams& s = ctx.cell.power;
  return (s.bandwidth * ctx.taus.tau_ss * ctx.macro.beta * ctx.macro.p_tx) /
         (ctx.macro.bandwidth * ctx.taus.tau_ms * s.beta * s.p_tx);
}

double kappa(const CellContext& ctx) {
  return zeta_ee(ctx) * ctx.cell.power.p_const +
         MacroRfPerHz(ctx) * ctx.qos.rate_req / ctx.taus.tau_ms;
}

double offload_ratio(const CellContext& ctx, double mu_e) {
  const SmallCellConfig& c = ctx.cell;
  const double w_ss =
      std::max(0.0, (mu_e * c.energy_unit - c.power.p_const) *
                        c.power.bandwidth / (c.power.beta * c.power.p_tx));
  const double servable = ctx.taus.tau_ss * w_ss / ctx.qos.rate_req - 1.0;
  if (servable <= 0.0) return 0.0;
  const double users = mean_users(c.user_density, c.radius);
  if (users <= 0.0) return 1.0;
  return std::min(1.0, servable / users);
}

double bandwidth_relief(const CellContext& ctx, double mu_e) {
  const CellBandwidths bw =
      cell_bandwidths(ctx.cell, ctx.taus, ctx.qos, offload_ratio(ctx, mu_e));
  return bw.w_ms_off - bw.w_ms_active;
}

double gain_hsbs(double mu_e, const CellContext& ctx) {
  CheckFeasible(mu_e, ctx, "gain_hsbs");
  const double zeta = zeta_ee(ctx);
  const double e = ctx.cell.energy_unit;
  const double lambda = ArrivalRate(ctx);
  const double fixed = zeta * ctx.cell.power.p_const +
                       MacroRfPerHz(ctx) * ctx.qos.rate_req / ctx.taus.tau_ms;
  if (mu_e <= lambda) return zeta * mu_e * e - fixed;
  return (zeta - 1.0) * mu_e * e - fixed + lambda * e;
}

double optimal_mu_hsbs(const CellContext& ctx) {
  const MuBounds b = feasible_mu(ctx);
  if (zeta_ee(ctx) > 1.0) return b.upper;
  // Serving at the MBS is at least as efficient: the gain rises up to the
  // arrival rate and is flat or falling beyond it.
  auto f = [&](double mu) { return gain_hsbs(mu, ctx); };
  double best = GoldenSectionMax(f, b.lower, b.upper);
  const double kink = std::clamp(ArrivalRate(ctx), b.lower, b.upper);
  for (double c : {b.lower, kink, b.upper}) {
    if (f(c) > f(best)) best = c;
  }
  return best;
}

CellDecision decide_hsbs(const CellContext& ctx, bool mbs_overloaded) {
  const double mu = optimal_mu_hsbs(ctx);
  CellDecision d = Evaluate(ctx, mu, gain_hsbs(mu, ctx));
  d.active = d.gain > 0.0 || mbs_overloaded;
  return d;
}

double mbs_saving_rsbs(double mu_e, const CellContext& ctx) {
  const double zeta = zeta_ee(ctx);
  const double e = ctx.cell.energy_unit;
  const double lambda = ctx.cell.energy_arrival;
  const double k = kappa(ctx);
  if (mu_e <= lambda) return zeta * mu_e * e - k;
  return zeta * lambda * e - (lambda / mu_e) * k;
}

double gain_rsbs(double mu_e, const CellContext& ctx) {
  CheckFeasible(mu_e, ctx, "gain_rsbs");
  return mbs_saving_rsbs(mu_e, ctx) -
         handover_power(ctx.cell.energy_arrival, mu_e, ctx.cell.handover_cost,
                        true);
}

double handover_slope_factor(double x) {
  if (x < 1e-4) return (1.5 + x / 6.0) * std::exp(-x);
  return std::exp(-x) * (std::expm1(x) - x + x * x) / (x * x);
}

RsbsRegime rsbs_regime(const CellContext& ctx) {
  const double lambda = ctx.cell.energy_arrival;
  if (!(lambda > 0.0)) return RsbsRegime::kNoArrivals;
  const double k = kappa(ctx);
  const double scale = 2.0 * lambda * ctx.cell.handover_cost;
  if (k >= scale * handover_slope_factor(0.0)) return RsbsRegime::kIncreasing;
  if (k <= scale * handover_slope_factor(1.0)) return RsbsRegime::kDecreasing;
  return RsbsRegime::kInterior;
}

double optimal_mu_rsbs(const CellContext& ctx) {
  const MuBounds b = feasible_mu(ctx);
  const double lambda = ctx.cell.energy_arrival;
  const RsbsRegime regime = rsbs_regime(ctx);
  if (regime == RsbsRegime::kNoArrivals) return b.lower;

  std::array<double, 4> candidates = {b.lower, std::clamp(lambda, b.lower, b.upper),
                                      b.upper, b.upper};
  if (regime == RsbsRegime::kInterior) {
    // Stationary point of the concave gain in x = lambda / mu_e: the slope
    // -kappa + 2 lambda C f(x) is strictly decreasing in x.
    const double k = kappa(ctx);
    const double scale = 2.0 * lambda * ctx.cell.handover_cost;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-13) {
      const double mid = 0.5 * (lo + hi);
      if (scale * handover_slope_factor(mid) - k > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double x = 0.5 * (lo + hi);
    candidates[3] = std::clamp(lambda / x, b.lower, b.upper);
  }
  double best = candidates[0];
  double best_gain = gain_rsbs(best, ctx);
  for (double c : candidates) {
    const double g = gain_rsbs(c, ctx);
    if (g > best_gain) {
      best = c;
      best_gain = g;
    }
  }
  return best;
}

CellDecision decide_rsbs(const CellContext& ctx) {
  const double mu = optimal_mu_rsbs(ctx);
  CellDecision d = Evaluate(ctx, mu, gain_rsbs(mu, ctx));
  d.active = d.gain > 0.0;
  // The MBS keeps w_ms_off reserved for an RSBS either way.
  d.delta_bw = 0.0;
  return d;
}

CellDecision decide(const CellContext& ctx, bool mbs_overloaded) {
  if (ctx.cell.kind == SbsKind::kRenewable) return decide_rsbs(ctx);
  return decide_hsbs(ctx, mbs_overloaded);
}

CellDecision greedy_decision(const CellContext& ctx) {
  const double mu = feasible_mu(ctx).upper;
  const bool renewable = ctx.cell.kind == SbsKind::kRenewable;
  CellDecision d =
      Evaluate(ctx, mu, renewable ? gain_rsbs(mu, ctx) : gain_hsbs(mu, ctx));
  d.active = true;
  if (renewable) d.delta_bw = 0.0;
  return d;
}

}  // namespace hcn
