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

#include "hcn/energy_queue.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hcn {

namespace {

constexpr int kMaxLevels = 200000;
constexpr double kTailTarget = 1e-10;

// Largest root z > 1 of exp(rho (z - 1)) = z. The stationary tail decays
// like z^-L.
double TailDecayRoot(double rho) {
  // f(z) = exp(rho (z - 1)) - z is convex; Newton started right of the root
  // decreases monotonically onto it.
  double z = 2.0;
  while (z < 1e12 && (std::exp(rho * (z - 1.0)) <= z ||
                      rho * std::exp(rho * (z - 1.0)) <= 1.0)) {
    z *= 2.0;
  }
  for (int it = 0; it < 200; ++it) {
    const double e = std::exp(rho * (z - 1.0));
    const double next = z - (e - z) / (rho * e - 1.0);
    if (std::abs(next - z) < 1e-14 * z) return next;
    z = next;
  }
  return z;
}

}  // namespace

double arrival_probability(int i, double rho) {
  if (!(rho > 0.0)) throw std::domain_error("arrival_probability: rho <= 0");
  if (i < 0) throw std::domain_error("arrival_probability: negative count");
  return std::exp(-rho + i * std::log(rho) - std::lgamma(i + 1.0));
}

QueueStationary stationary_distribution(double lambda_e, double mu_e,
                                        int l_max, double tol) {
  if (!(lambda_e > 0.0) || !(mu_e > 0.0)) {
    throw std::domain_error("stationary_distribution: rates must be > 0");
  }
  if (lambda_e >= mu_e) throw UnstableQueue();
  const double rho = lambda_e / mu_e;
  const double z = TailDecayRoot(rho);
  if (l_max <= 0) {
    const double levels = std::log(1.0 / kTailTarget) / std::log(z);
    l_max = static_cast<int>(std::min<double>(kMaxLevels, std::ceil(levels) + 8));
  }

  // Poisson pmf and tails a_bar[k] = P(A > k), summed from the far end so
  // that small tails keep full relative precision.
  const int n_pmf = l_max + 64 + static_cast<int>(10.0 * std::sqrt(rho) + rho);
  std::vector<double> a(n_pmf + 1);
  for (int i = 0; i <= n_pmf; ++i) a[i] = arrival_probability(i, rho);
  std::vector<double> a_bar(n_pmf + 1, 0.0);
  for (int k = n_pmf - 1; k >= 0; --k) a_bar[k] = a_bar[k + 1] + a[k + 1];

  // Level crossing between {<= j} and {> j} of the embedded chain:
  //   pi[j+1] a0 = pi[0] a_bar[j] + sum_{i=1..j} pi[i] a_bar[j-i+1].
  // Every term is non-negative, so the forward substitution is stable.
  std::vector<double> pi(l_max + 1, 0.0);
  pi[0] = 1.0;
  for (int j = 0; j < l_max; ++j) {
    double flow = pi[0] * a_bar[j];
    for (int i = 1; i <= j; ++i) flow += pi[i] * a_bar[j - i + 1];
    pi[j + 1] = flow / a[0];
  }

  QueueStationary out;
  out.rho = rho;
  // Geometric tail beyond the last level.
  const double tail = pi[l_max] / (z - 1.0);
  const double total = std::accumulate(pi.begin(), pi.end(), 0.0) + tail;
  for (double& p : pi) p /= total;
  out.tail_bound = tail / total;
  out.q = std::move(pi);
  out.q0 = out.q[0];
  out.q1 = out.q.size() > 1 ? out.q[1] : 0.0;
  if (out.tail_bound > tol) {
    throw std::runtime_error(
        "stationary_distribution: truncation too coarse for requested tol");
  }
  return out;
}

double empty_probability(double lambda_e, double mu_e) {
  if (!(mu_e > 0.0)) throw std::domain_error("empty_probability: mu <= 0");
  return std::max(0.0, 1.0 - lambda_e / mu_e);
}

double handover_power(double lambda_e, double mu_e, double c_ho, bool active) {
  if (!active || lambda_e >= mu_e) return 0.0;
  const double x = lambda_e / mu_e;
  // Shutdown frequency q1 * a0 * mu, doubled for the matching reactivation.
  return 2.0 * (1.0 - x) * (1.0 - std::exp(-x)) * mu_e * c_ho;
}

}  // namespace hcn
