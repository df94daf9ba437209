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

#pragma once

// Brute-force verifiers for the closed-form designs. They share only the
// secrecy-rate evaluator and the nulling direction with the designs; the
// power split is found by exhaustive grid search and the jamming direction by
// random sampling of the nulling subspace.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <vector>

#include "secjam/channel.hpp"
#include "secjam/cvec.hpp"
#include "secjam/design.hpp"
#include "secjam/errors.hpp"
#include "secjam/rng.hpp"

namespace secjam::oracle {

/// Uniform grid of `points` values from lo to hi inclusive.
struct GridSpec {
  std::size_t points = 10000;
  double lo = 0.0;
  double hi = 1.0;

  double at(std::size_t k) const {
    if (k + 1 == points) return hi;
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1);
  }
};

inline void validate(const GridSpec& g) {
  if (g.points < 2) throw InvalidArgument("grid needs at least 2 points");
  if (!(g.lo < g.hi)) throw InvalidArgument("grid needs lo < hi");
}

struct GridOptimum {
  double ps_mw;
  double value;  // secrecy rate (rate-max) or total power (power-min)
};

/// Best source power on the grid for the rate-max nulling design.
/// The rate is evaluated directly, without the quadratic coefficients.
inline GridOptimum grid_best_ps_ratemax(const ChannelState& csi, double p0_mw, const GridSpec& grid) {
  validate(grid);
  if (!(grid.lo > 0.0) || grid.hi > p0_mw) throw InvalidArgument("grid must lie within (0, P0]");
  const ComplexVector v = ratemax_direction(csi.h_rd, csi.h_re);
  GridOptimum best{grid.hi, -std::numeric_limits<double>::infinity()};
  for (std::size_t k = 0; k < grid.points; ++k) {
    const double ps = grid.at(k);
    const double r = secrecy_rate_raw(csi, ps, scale(std::sqrt(p0_mw - ps), v));
    if (r > best.value) best = {ps, r};
  }
  best.value = std::max(0.0, best.value);
  return best;
}

/// Minimum of Ps + max(rho(Ps), 0) |v|^2 over the feasible grid points.
inline GridOptimum grid_best_ps_powermin(const ChannelState& csi, double rs0, const GridSpec& grid) {
  validate(grid);
  const ComplexVector v = powermin_direction(csi.h_rd, csi.h_re);
  const double vv = norm_sq(v);
  GridOptimum best{0.0, std::numeric_limits<double>::infinity()};
  bool any = false;
  for (std::size_t k = 0; k < grid.points; ++k) {
    const double ps = grid.at(k);
    double rho = 0.0;
    try {
      rho = rho_threshold(csi, ps, rs0);
    } catch (const InfeasiblePs&) {
      continue;
    }
    any = true;
    const double total = ps + std::max(rho, 0.0) * vv;
    if (total < best.value) best = {ps, total};
  }
  if (!any) throw InfeasiblePs("no feasible grid point");
  return best;
}

/// Largest |w^H h_RE|^2 over `samples` random w with w^H h_RD = 0 and
/// |w|^2 = pj. Directions are complex Gaussian draws projected off h_RD.
inline double subspace_weight_search(const ChannelState& csi, double /*ps_mw*/, double pj_mw,
                                     std::size_t samples, TrialStream& rng) {
  const std::size_t n = csi.n_antennas();
  if (n < 2) throw DegenerateChannels();
  if (samples < 1) throw InvalidArgument("samples must be >= 1");
  const ComplexVector& h_rd = csi.h_rd;
  const double rd_sq = norm_sq(h_rd);

  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<ComplexScalar> draw(n);
  double best = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    for (auto& z : draw) z = {gauss(rng), gauss(rng)};
    ComplexVector x(draw);
    x = axpy(1.0, x, -hermitian_inner(h_rd, x) / rd_sq, h_rd);
    const double xx = norm_sq(x);
    if (xx == 0.0) continue;
    const ComplexVector w = scale(std::sqrt(pj_mw / xx), x);
    best = std::max(best, std::norm(hermitian_inner(w, csi.h_re)));
  }
  return best;
}

/// Closed-form optimum of the same search: pj |v^H h_RE|^2 with v the
/// unit-norm rate-max direction.
inline double analytic_jamming_optimum(const ChannelState& csi, double pj_mw) {
  const ComplexVector v = ratemax_direction(csi.h_rd, csi.h_re);
  return pj_mw * std::norm(hermitian_inner(v, csi.h_re));
}

}  // namespace secjam::oracle
