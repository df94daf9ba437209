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

// Line-of-sight channel realizations for nodes placed on a line: source at
// the origin, destination, relay and eavesdropper at positive coordinates.
// Every gain has magnitude d^(-alpha/2) and an independent uniform phase.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "secjam/cvec.hpp"
#include "secjam/errors.hpp"
#include "secjam/rng.hpp"

namespace secjam {

/// Node positions along the line, in meters from the source.
struct Geometry {
  double d_sd = 50.0;  // source-destination
  double d_sr = 25.0;  // source-relay
  double d_se = 40.0;  // source-eavesdropper

  double d_rd() const { return std::abs(d_sd - d_sr); }
  double d_re() const { return std::abs(d_se - d_sr); }
};

struct ChannelParams {
  double alpha = 3.5;       // path-loss exponent
  double sigma2_mw = 1e-10; // noise power
  std::size_t n_antennas = 2;
  // Distances below this are raised to it. Zero means coincident nodes are
  // rejected outright.
  double min_distance_m = 0.0;
};

/// Full CSI snapshot. h_sr is carried for completeness; no design reads it.
struct ChannelState {
  ComplexScalar h_sd;
  ComplexScalar h_se;
  ComplexVector h_sr;
  ComplexVector h_rd;
  ComplexVector h_re;
  double sigma2_mw;

  std::size_t n_antennas() const { return h_rd.size(); }
};

inline ComplexScalar los_gain(double d, double alpha, TrialStream& rng) {
  if (!(d > 0.0) || !std::isfinite(d))
    throw InvalidArgument("los_gain: distance must be positive and finite");
  const double magnitude = std::pow(d, -alpha / 2.0);
  return std::polar(magnitude, rng.phase());
}

inline void validate(const ChannelParams& params) {
  if (!(params.alpha > 0.0)) throw InvalidArgument("alpha must be > 0");
  if (!(params.sigma2_mw > 0.0)) throw InvalidArgument("sigma2 must be > 0");
  if (params.n_antennas < 1) throw InvalidArgument("antenna count must be >= 1");
  if (!(params.min_distance_m >= 0.0)) throw InvalidArgument("min distance must be >= 0");
}

namespace detail {
inline double floored(double d, double floor_m, const char* what) {
  const double out = d < floor_m ? floor_m : d;
  if (!(out > 0.0)) throw InvalidArgument(std::string("coincident nodes: ") + what);
  return out;
}
}  // namespace detail

/// Link distances (sd, se, sr, rd, re) after validation and flooring.
struct LinkDistances {
  double sd, se, sr, rd, re;
};

inline LinkDistances link_distances(const Geometry& geom, const ChannelParams& params) {
  if (!(geom.d_sd > 0.0) || !(geom.d_sr > 0.0) || !(geom.d_se > 0.0))
    throw InvalidArgument("all source distances must be > 0");
  const double f = params.min_distance_m;
  return {detail::floored(geom.d_sd, f, "source/destination"),
          detail::floored(geom.d_se, f, "source/eavesdropper"),
          detail::floored(geom.d_sr, f, "source/relay"),
          detail::floored(geom.d_rd(), f, "relay/destination"),
          detail::floored(geom.d_re(), f, "relay/eavesdropper")};
}

inline ChannelState realize(const Geometry& geom, const ChannelParams& params, TrialStream& rng) {
  validate(params);
  const LinkDistances d = link_distances(geom, params);
  const auto vector_gain = [&](double dist) {
    std::vector<ComplexScalar> h(params.n_antennas);
    for (auto& z : h) z = los_gain(dist, params.alpha, rng);
    return ComplexVector(std::move(h));
  };
  // Draw order is fixed: scalars first, then h_sr, h_rd, h_re.
  const ComplexScalar h_sd = los_gain(d.sd, params.alpha, rng);
  const ComplexScalar h_se = los_gain(d.se, params.alpha, rng);
  ComplexVector h_sr = vector_gain(d.sr);
  ComplexVector h_rd = vector_gain(d.rd);
  ComplexVector h_re = vector_gain(d.re);
  return ChannelState{h_sd, h_se, std::move(h_sr), std::move(h_rd), std::move(h_re),
                      params.sigma2_mw};
}

}  // namespace secjam
