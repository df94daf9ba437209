// Copyright 2026 The secjam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "secjam/oracle.hpp"

#include <cmath>
#include <complex>

#include "gtest/gtest.h"
#include "secjam/channel.hpp"
#include "secjam/design.hpp"

namespace secjam::oracle {
namespace {

using namespace std::complex_literals;

constexpr double kP0 = 1e-4;

ChannelState make_csi(ComplexScalar h_sd, ComplexScalar h_se, ComplexVector h_rd, ComplexVector h_re,
                      double sigma2) {
  const std::size_t n = h_rd.size();
  return ChannelState{h_sd, h_se, ComplexVector::zeros(n), std::move(h_rd), std::move(h_re), sigma2};
}

ChannelState random_csi(TrialStream& rng, std::size_t n) {
  const double d_se = 5.0 + 90.0 * rng.uniform();
  return realize(Geometry{50.0, 25.0, d_se}, ChannelParams{3.5, 1e-10, n, 1.0}, rng);
}

TEST(GridSpec, Validation) {
  EXPECT_THROW(validate(GridSpec{1, 0.0, 1.0}), InvalidArgument);
  EXPECT_THROW(validate(GridSpec{10, 1.0, 1.0}), InvalidArgument);
  const GridSpec g{5, 1.0, 2.0};
  EXPECT_EQ(g.at(0), 1.0);
  EXPECT_EQ(g.at(2), 1.5);
  EXPECT_EQ(g.at(4), 2.0);
}

TEST(GridBestRatemax, NeverBeatsClosedForm) {
  auto rng = TrialStream::keyed(51, {});
  for (int t = 0; t < 200; ++t) {
    const auto csi = random_csi(rng, 2 + t % 3);
    const auto best = grid_best_ps_ratemax(csi, kP0, GridSpec{10000, kP0 / 10000, kP0});
    const auto design = design_rate_max({csi, kP0});
    EXPECT_LE(best.value, design.secrecy_rate + 1e-9);
    // Grid resolution bound at default scales.
    EXPECT_LE(design.secrecy_rate - best.value, 1e-5);
  }
}

TEST(GridBestRatemax, ExactWhenGridHitsOptimum) {
  const auto csi = make_csi(1.0, 1.0, {1.0, 0.0}, {0.0, 1.0}, 1.0);
  // Analytic optimum of this instance is Ps = 0.5 with P0 = 1.
  const auto best = grid_best_ps_ratemax(csi, 1.0, GridSpec{3, 0.25, 0.75});
  EXPECT_EQ(best.ps_mw, 0.5);
  EXPECT_NEAR(best.value, design_rate_max({csi, 1.0}).secrecy_rate, 1e-12);
}

TEST(GridBestRatemax, NegligibleJammingPicksFullBudget) {
  // h_RE almost parallel to h_RD: |v^H h_RE|^2 ~ 1e-10 |h_RE|^2.
  const auto csi = make_csi(1.0, 0.5, {1.0, 0.0}, {1.0, 1e-5}, 1.0);
  const auto best = grid_best_ps_ratemax(csi, 1.0, GridSpec{1000, 1e-3, 1.0});
  EXPECT_EQ(best.ps_mw, 1.0);
}

TEST(GridBestRatemax, Errors) {
  const auto csi = make_csi(1.0, 0.5, {1.0, 0.0}, {2.0, 0.0}, 1.0);
  EXPECT_THROW(grid_best_ps_ratemax(csi, 1.0, GridSpec{10, 0.1, 1.0}), DegenerateChannels);
  const auto ok = make_csi(1.0, 0.5, {1.0, 0.0}, {0.0, 1.0}, 1.0);
  EXPECT_THROW(grid_best_ps_ratemax(ok, 1.0, GridSpec{10, 0.0, 1.0}), InvalidArgument);
  EXPECT_THROW(grid_best_ps_ratemax(ok, 1.0, GridSpec{10, 0.1, 2.0}), InvalidArgument);
}

TEST(GridBestPowermin, NeverBeatsClosedForm) {
  auto rng = TrialStream::keyed(52, {});
  for (int t = 0; t < 200; ++t) {
    const auto csi = random_csi(rng, 2 + t % 3);
    const double floor = powermin_floor(csi, 1.0);
    const auto p_dt = direct_transmission_power(csi, 1.0);
    const double hi = p_dt ? *p_dt : 1000.0 * floor;
    const auto best = grid_best_ps_powermin(csi, 1.0, GridSpec{10000, floor + (hi - floor) / 10000, hi});
    const auto design = design_power_min({csi, 1.0});
    ASSERT_NE(design.mode, DesignMode::Infeasible);
    EXPECT_GE(best.value, design.total_power_mw * (1.0 - 1e-9));
  }
}

TEST(GridBestPowermin, WorkedExampleLocatesQuadraticRoot) {
  const auto csi = make_csi(1.0, 1.0, {1.0, 0.0}, {0.0, 1.0}, 1.0);
  const auto best = grid_best_ps_powermin(csi, 1.0, GridSpec{100001, 1.0, 11.0});
  const auto design = design_power_min({csi, 1.0});
  EXPECT_NEAR(best.ps_mw, design.ps_mw, 1e-4);
  EXPECT_NEAR(best.value, design.total_power_mw, 1e-8);
}

TEST(GridBestPowermin, NoJammingNeededReturnsDirectPoint) {
  // a = 1, b = 0.01: direct transmission reaches Rs0 = 1 at 1 / 0.98.
  const auto csi = make_csi(1.0, 0.1, {1.0, 0.0}, {0.0, 1.0}, 1.0);
  const auto best = grid_best_ps_powermin(csi, 1.0, GridSpec{1000, 1.5, 3.0});
  EXPECT_EQ(best.ps_mw, 1.5);
  EXPECT_EQ(best.value, 1.5);
}

TEST(GridBestPowermin, EmptyDomain) {
  const auto csi = make_csi(1.0, 0.1, {1.0, 0.0}, {0.0, 1.0}, 1.0);
  EXPECT_THROW(grid_best_ps_powermin(csi, 1.0, GridSpec{10, 0.1, 0.9}), InfeasiblePs);
}

TEST(SubspaceWeightSearch, TwoAntennasAlwaysOptimal) {
  auto rng = TrialStream::keyed(53, {});
  const auto csi = random_csi(rng, 2);
  const double found = subspace_weight_search(csi, kP0 / 2, kP0 / 2, 3, rng);
  EXPECT_NEAR(found, analytic_jamming_optimum(csi, kP0 / 2), 1e-9 * found);
}

TEST(SubspaceWeightSearch, FourAntennasWithinOnePercent) {
  auto rng = TrialStream::keyed(54, {});
  for (int t = 0; t < 3; ++t) {
    const auto csi = random_csi(rng, 4);
    const double analytic = analytic_jamming_optimum(csi, 1.0);
    const double found = subspace_weight_search(csi, 0.0, 1.0, 100000, rng);
    EXPECT_LE(found, analytic * (1.0 + 1e-9));
    EXPECT_GE(found, 0.99 * analytic);
  }
}

TEST(SubspaceWeightSearch, ParallelChannelsGiveZero) {
  TrialStream rng(5);
  const auto csi = make_csi(1.0, 1.0, {1.0, 1i}, {2i, -2.0}, 1.0);
  EXPECT_NEAR(subspace_weight_search(csi, 1.0, 1.0, 1000, rng), 0.0, 1e-24);
}

TEST(SubspaceWeightSearch, Errors) {
  TrialStream rng(5);
  EXPECT_THROW(subspace_weight_search(make_csi(1.0, 1.0, {1.0}, {1.0}, 1.0), 1.0, 1.0, 10, rng),
               DegenerateChannels);
  EXPECT_THROW(subspace_weight_search(make_csi(1.0, 1.0, {1.0, 0.0}, {0.0, 1.0}, 1.0), 1.0, 1.0, 0, rng),
               InvalidArgument);
}

}  // namespace
}  // namespace secjam::oracle
