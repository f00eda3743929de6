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
#include <cmath>

#include "common/test_support.h"
#include "doctest.h"
#include "hcn/energy_queue.h"
#include "hcn/montecarlo.h"
#include "hcn/outage.h"

namespace hcn {
namespace {

using testing::ReferenceCell;

TEST_SUITE("montecarlo") {

TEST_CASE("fixed seed gives bit-identical results") {
  const Scenario s = ReferenceCell();
  SimConfig cfg;
  cfg.trials = 2000;
  cfg.seed = 99;
  const OutageSample a = simulate_outage_ssu(s.cells[0], s.env, s.qos, 3e6, 1.0, cfg);
  const OutageSample b = simulate_outage_ssu(s.cells[0], s.env, s.qos, 3e6, 1.0, cfg);
  CHECK(a.probability == b.probability);
  CHECK(a.std_error == b.std_error);
  cfg.seed = 100;
  const OutageSample c = simulate_outage_ssu(s.cells[0], s.env, s.qos, 3e6, 1.0, cfg);
  CHECK(c.probability != a.probability);

  SimConfig q;
  q.seed = 4;
  q.horizon = 2e4;
  const QueueSimResult x = simulate_energy_queue(0.6, 1.0, q);
  const QueueSimResult y = simulate_energy_queue(0.6, 1.0, q);
  CHECK(x.q == y.q);
  CHECK(x.shutdown_rate == y.shutdown_rate);
}

TEST_CASE("trial substreams depend only on seed and index") {
  auto e1 = TrialEngine(7, 12);
  auto e2 = TrialEngine(7, 12);
  auto e3 = TrialEngine(7, 13);
  const auto v1 = e1();
  CHECK(v1 == e2());
  CHECK(v1 != e3());
}

TEST_CASE("lone tagged user matches the closed form at low outage") {
  const Scenario s = ReferenceCell();
  SimConfig cfg;
  cfg.trials = 20000;
  cfg.seed = 5;
  for (double w : {1e6, 2e6, 5e6}) {
    const double cf = outage_ssu_closed(s.cells[0], s.env, s.qos, w, 0.0).raw;
    const OutageSample mc =
        simulate_outage_ssu(s.cells[0], s.env, s.qos, w, 0.0, cfg);
    if (cf < 0.1) CHECK(std::abs(cf - mc.probability) / mc.probability < 0.1);
  }
  // MSUs all offloaded: only the tagged user remains.
  const double cf = outage_msu_closed(s.cells[0], s, 3e6, 1.0).raw;
  const OutageSample mc = simulate_outage_msu(s.cells[0], s, 3e6, 1.0, cfg);
  CHECK(cf < 0.1);
  CHECK(std::abs(cf - mc.probability) / mc.probability < 0.1);
}

TEST_CASE("sampled and conditional fading agree") {
  const Scenario s = ReferenceCell();
  SimConfig cond;
  cond.trials = 20000;
  cond.seed = 11;
  SimConfig sampled = cond;
  sampled.fading = FadingEstimator::kSampled;
  const OutageSample a = simulate_outage_ssu(s.cells[0], s.env, s.qos, 2e6, 0.5, cond);
  const OutageSample b = simulate_outage_ssu(s.cells[0], s.env, s.qos, 2e6, 0.5, sampled);
  CHECK(std::abs(a.probability - b.probability) <
        4.0 * std::hypot(a.std_error, b.std_error));
  CHECK(a.std_error <= b.std_error);
}

TEST_CASE("standard error shrinks like one over root n") {
  const Scenario s = ReferenceCell();
  SimConfig cfg;
  cfg.seed = 3;
  cfg.fading = FadingEstimator::kSampled;
  cfg.trials = 4000;
  const double e1 =
      simulate_outage_ssu(s.cells[0], s.env, s.qos, 2e6, 1.0, cfg).std_error;
  cfg.trials = 16000;
  const double e4 =
      simulate_outage_ssu(s.cells[0], s.env, s.qos, 2e6, 1.0, cfg).std_error;
  CHECK(e1 / e4 == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("msu outage grows with distance") {
  Scenario s = ReferenceCell();
  SimConfig cfg;
  cfg.trials = 5000;
  double prev = -1.0;
  for (double d : {300.0, 600.0, 900.0}) {
    SmallCellConfig c = s.cells[0];
    c.dist_to_mbs = d;
    const double p = simulate_outage_msu(c, s, 3e6, 0.0, cfg).probability;
    CHECK(p > prev);
    prev = p;
  }
}

TEST_CASE("battery simulation") {
  SimConfig cfg;
  cfg.seed = 21;
  const QueueSimResult none = simulate_energy_queue(0.0, 2.0, cfg);
  CHECK(none.empty_fraction == 1.0);
  CHECK(none.shutdown_rate == 0.0);

  const QueueSimResult half = simulate_energy_queue(5.0, 10.0, cfg);
  CHECK(half.empty_fraction == doctest::Approx(0.5).epsilon(0.02));
  CHECK(total_variation(stationary_distribution(5.0, 10.0).q, half.q) < 0.01);

  // Each busy period ends with exactly one shutdown, so the rate is the
  // arrival rate times the empty probability.
  for (double rho : {0.3, 0.5, 0.9}) {
    const QueueSimResult r = simulate_energy_queue(rho, 1.0, cfg);
    CHECK(r.shutdown_rate == doctest::Approx(rho * (1.0 - rho)).epsilon(0.03));
  }
}

TEST_CASE("total variation") {
  CHECK(total_variation({0.5, 0.5}, {0.5, 0.5}) == 0.0);
  CHECK(total_variation({1.0}, {0.0, 1.0}) == doctest::Approx(1.0));
  CHECK(total_variation({0.2, 0.8}, {0.4, 0.6}) == doctest::Approx(0.2));
}

TEST_CASE("outage sweep comparison on the reference cell") {
  SimConfig cfg;
  cfg.trials = 4000;
  cfg.seed = 8;
  const auto rows = compare_outage(ReferenceCell(), default_outage_sweep(), cfg);
  int counted = 0;
  for (const OutageComparison& r : rows) {
    CHECK(r.counted == (!r.regime_violation && r.closed_form < 0.1));
    if (r.counted) ++counted;
  }
  CHECK(counted > 5);
}

}  // TEST_SUITE

}  // namespace
}  // namespace hcn
