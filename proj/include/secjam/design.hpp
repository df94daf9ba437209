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

// Null-steering cooperative jamming designs.
//
// The relay transmits w z with w constrained to w^H h_RD = 0, so the jamming
// signal never reaches the destination. Two problems are solved in closed
// form:
//   * rate maximization: maximize the secrecy rate subject to Ps + |w|^2 = P0;
//   * power minimization: minimize Ps + |w|^2 subject to a target secrecy rate.
// In both cases the optimal w lies in span{h_RD, h_RE} and the remaining
// scalar problem in Ps is a ratio (e0 + e1 Ps + e2 Ps^2) / (f0 + f1 Ps) whose
// stationary points solve a quadratic.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string_view>

#include "secjam/channel.hpp"
#include "secjam/cvec.hpp"
#include "secjam/errors.hpp"
#include "secjam/quadratic.hpp"

namespace secjam {

enum class DesignMode { CooperativeJamming, DirectTransmission, Infeasible };

inline std::string_view to_string(DesignMode mode) {
  switch (mode) {
    case DesignMode::CooperativeJamming: return "cooperative_jamming";
    case DesignMode::DirectTransmission: return "direct_transmission";
    case DesignMode::Infeasible: return "infeasible";
  }
  return "unknown";
}

struct RateMaxProblem {
  ChannelState csi;
  double p0_mw;  // total power budget
};

struct PowerMinProblem {
  ChannelState csi;
  double rs0;  // secrecy-rate target, bits/s/Hz
};

struct DesignOutcome {
  DesignMode mode = DesignMode::Infeasible;
  double ps_mw = 0.0;
  ComplexVector w = ComplexVector::zeros(1);
  double pj_mw = 0.0;           // |w|^2
  double secrecy_rate = 0.0;    // max{0, Rd - Re}
  double raw_secrecy_rate = 0.0;  // Rd - Re, may be negative
  double total_power_mw = 0.0;  // ps + pj
};

/// Coefficients of the ratio (e0 + e1 x + e2 x^2) / (f0 + f1 x).
struct QuadCoeffs {
  double e0 = 0.0, e1 = 0.0, e2 = 0.0, f0 = 0.0, f1 = 0.0;

  double ratio(double ps) const { return (e0 + e1 * ps + e2 * ps * ps) / (f0 + f1 * ps); }

  // Zeros of the numerator of d(ratio)/d(ps):
  //   e2 f1 x^2 + 2 e2 f0 x + (e1 f0 - e0 f1) = 0.
  RealRoots stationary_points() const {
    return solve_quadratic(e2 * f1, 2.0 * e2 * f0, e1 * f0 - e0 * f1);
  }
};

// ---------------------------------------------------------------------------
// Secrecy rate

/// Rd - Re in bits/s/Hz without clamping.
inline double secrecy_rate_raw(const ChannelState& csi, double ps_mw, const ComplexVector& w) {
  if (!(ps_mw >= 0.0)) throw InvalidArgument("source power must be >= 0");
  const double s = csi.sigma2_mw;
  const double leak_d = std::norm(hermitian_inner(w, csi.h_rd));
  const double jam_e = std::norm(hermitian_inner(w, csi.h_re));
  const double snr_d = ps_mw * std::norm(csi.h_sd) / (leak_d + s);
  const double snr_e = ps_mw * std::norm(csi.h_se) / (jam_e + s);
  return (std::log1p(snr_d) - std::log1p(snr_e)) / std::numbers::ln2;
}

inline double secrecy_rate(const ChannelState& csi, double ps_mw, const ComplexVector& w) {
  return std::max(0.0, secrecy_rate_raw(csi, ps_mw, w));
}

inline double direct_transmission_rate(const ChannelState& csi, double p_mw) {
  return secrecy_rate(csi, p_mw, ComplexVector::zeros(csi.n_antennas()));
}

// ---------------------------------------------------------------------------
// Nulling directions

inline constexpr double kGramTolerance = 1e-12;

namespace detail {

// u = -(h_RD^H h_RE) h_RD + |h_RD|^2 h_RE, the component of h_RE orthogonal
// to h_RD scaled by |h_RD|^2. Satisfies u^H h_RD = 0, u^H h_RE = g and
// |u|^2 = |h_RD|^2 g with g the Gram determinant.
struct NullingBasis {
  ComplexVector u;
  double rd_sq;  // |h_RD|^2
  double gram;   // |h_RD|^2 |h_RE|^2 - |h_RD^H h_RE|^2
};

inline NullingBasis nulling_basis(const ComplexVector& h_rd, const ComplexVector& h_re) {
  detail::require_same_size(h_rd, h_re);
  if (h_rd.size() < 2) throw DegenerateChannels();
  const double rd_sq = norm_sq(h_rd);
  const double re_sq = norm_sq(h_re);
  if (rd_sq == 0.0 || re_sq == 0.0) throw DegenerateChannels();

  const ComplexScalar c = hermitian_inner(h_rd, h_re);
  ComplexVector u = axpy(-c, h_rd, rd_sq, h_re);
  // One re-orthogonalization pass; exact arithmetic leaves u unchanged.
  u = axpy(1.0, u, -hermitian_inner(h_rd, u) / rd_sq, h_rd);

  const double gram = norm_sq(u) / rd_sq;
  if (!(gram > kGramTolerance * rd_sq * re_sq)) throw DegenerateChannels();
  return {std::move(u), rd_sq, gram};
}

}  // namespace detail

/// Unit-norm direction maximizing |v^H h_RE| subject to v^H h_RD = 0.
inline ComplexVector ratemax_direction(const ComplexVector& h_rd, const ComplexVector& h_re) {
  const auto basis = detail::nulling_basis(h_rd, h_re);
  // mu = (|h_RD|^4 |h_RE|^2 - |h_RD|^2 |h_RD^H h_RE|^2)^(-1/2) = 1 / |u|.
  const double mu = 1.0 / std::sqrt(basis.rd_sq * basis.gram);
  return scale(mu, basis.u);
}

/// Minimum-norm direction with v^H h_RD = 0 and v^H h_RE = 1, so that
/// w = sqrt(rho) v delivers exactly |w^H h_RE|^2 = rho.
inline ComplexVector powermin_direction(const ComplexVector& h_rd, const ComplexVector& h_re) {
  const auto basis = detail::nulling_basis(h_rd, h_re);
  return scale(1.0 / basis.gram, basis.u);
}

// ---------------------------------------------------------------------------
// Rate maximization

inline QuadCoeffs ratemax_coeffs(const ChannelState& csi, const ComplexVector& v, double p0_mw) {
  const double s = csi.sigma2_mw;
  const double a = std::norm(csi.h_sd);
  const double b = std::norm(csi.h_se);
  const double jam = std::norm(hermitian_inner(v, csi.h_re));  // |v^H h_RE|^2
  QuadCoeffs c;
  c.e0 = s * (s + p0_mw * jam);
  c.e1 = (a * p0_mw - s) * jam + a * s;
  c.e2 = -a * jam;
  c.f0 = s * (s + p0_mw * jam);
  c.f1 = s * (b - jam);
  return c;
}

/// Source power in (0, P0] maximizing the rate ratio. P0 (no jamming) is
/// always a candidate and wins ties.
inline double solve_power_split(const QuadCoeffs& c, double p0_mw) {
  double best_ps = p0_mw;
  double best = c.ratio(p0_mw);
  for (double x : c.stationary_points()) {
    if (!(x > 0.0 && x <= p0_mw)) continue;
    const double r = c.ratio(x);
    if (r > best) {
      best = r;
      best_ps = x;
    }
  }
  return best_ps;
}

namespace detail {

inline DesignOutcome direct_outcome(const ChannelState& csi, double ps_mw) {
  DesignOutcome out;
  out.mode = DesignMode::DirectTransmission;
  out.ps_mw = ps_mw;
  out.w = ComplexVector::zeros(csi.n_antennas());
  out.pj_mw = 0.0;
  out.raw_secrecy_rate = secrecy_rate_raw(csi, ps_mw, out.w);
  out.secrecy_rate = std::max(0.0, out.raw_secrecy_rate);
  out.total_power_mw = ps_mw;
  return out;
}

inline DesignOutcome jamming_outcome(const ChannelState& csi, double ps_mw, ComplexVector w) {
  DesignOutcome out;
  out.mode = DesignMode::CooperativeJamming;
  out.ps_mw = ps_mw;
  out.pj_mw = norm_sq(w);
  out.raw_secrecy_rate = secrecy_rate_raw(csi, ps_mw, w);
  out.secrecy_rate = std::max(0.0, out.raw_secrecy_rate);
  out.total_power_mw = ps_mw + out.pj_mw;
  out.w = std::move(w);
  return out;
}

inline DesignOutcome infeasible_outcome(const ChannelState& csi) {
  DesignOutcome out;
  out.w = ComplexVector::zeros(csi.n_antennas());
  return out;
}

}  // namespace detail

/// Direct-transmission baseline for a power budget: all of it at the source.
inline DesignOutcome direct_transmission_ratemax(const ChannelState& csi, double p0_mw) {
  return detail::direct_outcome(csi, p0_mw);
}

inline void validate(const RateMaxProblem& p) {
  if (!(p.p0_mw > 0.0) || !std::isfinite(p.p0_mw)) throw InvalidArgument("P0 must be > 0");
}

inline DesignOutcome design_rate_max(const RateMaxProblem& p) {
  validate(p);
  DesignOutcome direct = detail::direct_outcome(p.csi, p.p0_mw);
  ComplexVector v = ComplexVector::zeros(1);
  try {
    v = ratemax_direction(p.csi.h_rd, p.csi.h_re);
  } catch (const DegenerateChannels&) {
    return direct;
  }
  const double ps = solve_power_split(ratemax_coeffs(p.csi, v, p.p0_mw), p.p0_mw);
  if (ps >= p.p0_mw) return direct;

  DesignOutcome jam = detail::jamming_outcome(p.csi, ps, scale(std::sqrt(p.p0_mw - ps), v));
  // Keep direct transmission unless jamming is strictly better as evaluated.
  return jam.raw_secrecy_rate > direct.raw_secrecy_rate ? jam : direct;
}

// ---------------------------------------------------------------------------
// Power minimization

/// Eavesdropper jamming level |w^H h_RE|^2 at which the nulling design hits
/// exactly rs0 for source power ps. Negative means no jamming is needed.
inline double rho_threshold(const ChannelState& csi, double ps_mw, double rs0) {
  const double s = csi.sigma2_mw;
  const double d = std::exp2(-rs0) * (1.0 + ps_mw * std::norm(csi.h_sd) / s) - 1.0;
  if (!(d > 0.0)) throw InfeasiblePs("source power too low for the target secrecy rate");
  return ps_mw * std::norm(csi.h_se) / d - s;
}

inline QuadCoeffs powermin_coeffs(const ChannelState& csi, const ComplexVector& v, double rs0) {
  const double s = csi.sigma2_mw;
  const double a = std::norm(csi.h_sd);
  const double b = std::norm(csi.h_se);
  const double vv = norm_sq(v);
  const double q = std::exp2(-rs0);
  QuadCoeffs c;
  c.e0 = -(q - 1.0) * s * vv;
  c.e1 = q - 1.0 + (b - q * a) * vv;
  c.e2 = q * a / s;
  c.f0 = q - 1.0;
  c.f1 = q * a / s;
  return c;
}

/// Smallest source power at which D(Ps) > 0, i.e. below which no amount of
/// jamming reaches rs0.
inline double powermin_floor(const ChannelState& csi, double rs0) {
  return csi.sigma2_mw * std::expm1(rs0 * std::numbers::ln2) / std::norm(csi.h_sd);
}

/// Power at which direct transmission reaches exactly rs0, if it ever does.
inline std::optional<double> direct_transmission_power(const ChannelState& csi, double rs0) {
  const double a = std::norm(csi.h_sd);
  const double b = std::norm(csi.h_se);
  const double gain = std::exp2(rs0);
  const double margin = a - gain * b;
  if (!(margin > 0.0)) return std::nullopt;
  return csi.sigma2_mw * std::expm1(rs0 * std::numbers::ln2) / margin;
}

/// Direct-transmission baseline for a rate target; Infeasible when the
/// eavesdropper's channel is too strong for any source power.
inline DesignOutcome direct_transmission_powermin(const ChannelState& csi, double rs0) {
  if (const auto p_dt = direct_transmission_power(csi, rs0)) return detail::direct_outcome(csi, *p_dt);
  return detail::infeasible_outcome(csi);
}

inline void validate(const PowerMinProblem& p) {
  if (!(p.rs0 > 0.0) || !std::isfinite(p.rs0)) throw InvalidArgument("Rs0 must be > 0");
}

inline DesignOutcome design_power_min(const PowerMinProblem& p) {
  validate(p);
  const auto p_dt = direct_transmission_power(p.csi, p.rs0);

  std::optional<DesignOutcome> best;
  try {
    const ComplexVector v = powermin_direction(p.csi.h_rd, p.csi.h_re);
    for (double ps : powermin_coeffs(p.csi, v, p.rs0).stationary_points()) {
      double rho = 0.0;
      try {
        rho = rho_threshold(p.csi, ps, p.rs0);
      } catch (const InfeasiblePs&) {
        continue;
      }
      // rho <= 0 is the region where direct transmission alone suffices.
      if (!(rho > 0.0)) continue;
      DesignOutcome cand = detail::jamming_outcome(p.csi, ps, scale(std::sqrt(rho), v));
      if (!best || cand.total_power_mw < best->total_power_mw) best = std::move(cand);
    }
  } catch (const DegenerateChannels&) {
  }

  if (best && (!p_dt || best->total_power_mw < *p_dt)) return *best;
  if (p_dt) return detail::direct_outcome(p.csi, *p_dt);
  return detail::infeasible_outcome(p.csi);
}

}  // namespace secjam
