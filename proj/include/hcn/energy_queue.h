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

// Battery of an energy-harvesting small cell viewed as an M/D/1 queue:
// harvested units arrive as a Poisson process and the cell drains one unit
// every 1/mu_e seconds while the battery is non-empty.

#ifndef HCN_ENERGY_QUEUE_H_
#define HCN_ENERGY_QUEUE_H_

#include <stdexcept>
#include <vector>

namespace hcn {

// Raised when the arrival rate reaches the consumption rate. In that regime
// the battery never runs dry.
class UnstableQueue : public std::runtime_error {
 public:
  UnstableQueue() : std::runtime_error("energy queue is unstable (lambda >= mu)") {}
};

struct QueueStationary {
  double rho = 0.0;
  std::vector<double> q;  // q[L] for L = 0..l_max
  double q0 = 0.0;
  double q1 = 0.0;
  double tail_bound = 0.0;  // estimated mass beyond l_max
};

// Probability of i arrivals during one deterministic service time.
double arrival_probability(int i, double rho);

// Stationary queue-length distribution of the embedded chain. `l_max` = 0
// picks the truncation level automatically from the geometric decay rate of
// the tail.
QueueStationary stationary_distribution(double lambda_e, double mu_e,
                                        int l_max = 0, double tol = 1e-8);

// Long-run fraction of time the battery is empty; zero when lambda >= mu.
double empty_probability(double lambda_e, double mu_e);

// Average power spent on handing users over when an RSBS toggles with its
// battery state.
double handover_power(double lambda_e, double mu_e, double c_ho, bool active);

}  // namespace hcn

#endif  // HCN_ENERGY_QUEUE_H_
