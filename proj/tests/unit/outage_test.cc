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
#include <numbers>
#include <vector>

#include "common/test_support.h"
#include "doctest.h"
#include "hcn/outage.h"

namespace hcn {
namespace {

using testing::ReferenceCell;

TEST_SUITE("outage") {

TEST_CASE("golden spectral efficiencies of the reference cell") {
  const Scenario s = ReferenceCell();
  const SpectralEfficiencies t = spectral_efficiencies(s.cells[0], s);
  CHECK(t.tau_ss == doctest::Approx(1.3061362284).epsilon(1e-9));
  CHECK(t.tau_mm == doctest::Approx(0.350186354929).epsilon(1e-9));
  CHECK(t.tau_ms == doctest::Approx(0.675441576283).epsilon(1e-9));
}

TEST_CASE("ssu outage vanishes with bandwidth and grows with load") {
  const Scenario s = ReferenceCell();
  const SmallCellConfig& c = s.cells[0];
  CHECK(outage_ssu_closed(c, s.env, s.qos, 1e15, 1.0).probability < 1e-6);
  double prev = 0.0;
  for (double r : {1e5, 2e5, 3e5, 5e5, 8e5}) {
    QosConfig q = s.qos;
    q.rate_req = r;
    const double p = outage_ssu_closed(c, s.env, q, 5e6, 1.0).raw;
    CHECK(p > prev);
    prev = p;
  }
  prev = 0.0;
  for (double phi : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double p = outage_ssu_closed(c, s.env, s.qos, 5e6, phi).raw;
    CHECK(p > prev);
    prev = p;
  }
  CHECK_THROWS_AS(outage_ssu_closed(c, s.env, s.qos, 0.0, 1.0),
                  std::domain_error);
}

TEST_CASE("out-of-regime outage is clamped and flagged") {
  const Scenario s = ReferenceCell();
  const OutageEstimate e = outage_ssu_closed(s.cells[0], s.env, s.qos, 1e4, 1.0);
  CHECK(e.regime_violation);
  CHECK(e.raw > 1.0);
  CHECK(e.probability == 1.0);
}

TEST_CASE("efficiencies move in the expected directions") {
  const Scenario base = ReferenceCell();
  const SmallCellConfig& c = base.cells[0];
  QosConfig low = base.qos;
  low.eta = 1e-12;
  CHECK(tau_ss(c, base.env, low) < 1e-9);
  SmallCellConfig wide = c;
  wide.radius = 350.0;
  CHECK(tau_ss(wide, base.env, base.qos) < tau_ss(c, base.env, base.qos));
  QosConfig high = base.qos;
  high.eta = 0.09;
  CHECK(tau_ss(c, base.env, high) > tau_ss(c, base.env, base.qos));
  CHECK(tau_mm([&] { Scenario s = base; s.qos = high; return s; }()) >
        tau_mm(base));
  double prev = 1e300;
  for (double d : {300.0, 500.0, 700.0}) {
    SmallCellConfig moved = c;
    moved.dist_to_mbs = d;
    const double t = tau_ms(moved, base);
    CHECK(t < prev);
    prev = t;
  }
  SmallCellConfig at_edge = c;
  at_edge.dist_to_mbs = base.macro.radius;
  CHECK(tau_ms(at_edge, base) < tau_mm(base));
  SmallCellConfig centre = c;
  centre.dist_to_mbs = 0.0;
  CHECK_THROWS_AS(tau_ms(centre, base), std::domain_error);
}

TEST_CASE("macro-only user density excludes small-cell discs") {
  Scenario s = ReferenceCell();
  CHECK(mmu_effective_density(s) == doctest::Approx(0.91 * s.rho0));
  s.cells.clear();
  CHECK(mmu_effective_density(s) == s.rho0);
}

TEST_CASE("bandwidth requirements") {
  const Scenario s = ReferenceCell();
  const SmallCellConfig& c = s.cells[0];
  const SpectralEfficiencies t = spectral_efficiencies(c, s);
  const double users = mean_users(c.user_density, c.radius);
  CHECK(users == doctest::Approx(c.user_density * std::numbers::pi * 9e4));

  const CellBandwidths none = cell_bandwidths(c, t, s.qos, 0.0);
  CHECK(none.w_ms_active == doctest::Approx(none.w_ms_off));
  const CellBandwidths all = cell_bandwidths(c, t, s.qos, 1.0);
  CHECK(all.w_ms_active == doctest::Approx(s.qos.rate_req / t.tau_ms));
  for (double phi : {0.1, 0.4, 0.8}) {
    const CellBandwidths b = cell_bandwidths(c, t, s.qos, phi);
    CHECK(b.w_ms_off - b.w_ms_active ==
          doctest::Approx(s.qos.rate_req / t.tau_ms * phi * users));
    CHECK(b.w_ss_min ==
          doctest::Approx(s.qos.rate_req / t.tau_ss * (1.0 + phi * users)));
  }

  const BandwidthRequirements req = required_bandwidths(s, {0.5});
  CHECK(req.w_mm == doctest::Approx(macro_only_bandwidth(s)));
  CHECK(req.w_mm ==
        doctest::Approx(s.qos.rate_req / t.tau_mm *
                        (1.0 + mmu_effective_density(s) * std::numbers::pi *
                                   1e6)));
  CHECK_THROWS_AS(required_bandwidths(s, {}), std::invalid_argument);
}

TEST_CASE("outage equals eta exactly at the minimum bandwidth") {
  for (double eta : {0.01, 0.05, 0.1}) {
    for (double density : {10e-6, 70e-6, 200e-6}) {
      for (double phi : {0.0, 0.3, 1.0}) {
        Scenario s = ReferenceCell(SbsKind::kHybrid, density);
        s.qos.eta = eta;
        const SmallCellConfig& c = s.cells[0];
        const SpectralEfficiencies t = spectral_efficiencies(c, s);
        const CellBandwidths b = cell_bandwidths(c, t, s.qos, phi);
        CHECK(outage_ssu_closed(c, s.env, s.qos, b.w_ss_min, phi).raw ==
              doctest::Approx(eta).epsilon(1e-6));
        CHECK(outage_msu_closed(c, s, b.w_ms_active, phi).raw ==
              doctest::Approx(eta).epsilon(1e-6));
      }
    }
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace hcn
