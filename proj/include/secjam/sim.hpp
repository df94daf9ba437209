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

// Monte Carlo sweep over the eavesdropper position on the line geometry.
// For every (d_SE, N) cell, `trials` independent channel realizations are
// drawn from per-trial counter-based streams, the configured design is
// applied and the results averaged. Cells run on a thread pool; the output
// does not depend on scheduling.

#include <algorithm>
#include <atomic>
#include <exception>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "secjam/channel.hpp"
#include "secjam/design.hpp"
#include "secjam/errors.hpp"
#include "secjam/rng.hpp"
#include "secjam/units.hpp"

namespace secjam::sim {

enum class SweepMode { RateMax, PowerMin };

struct SweepConfig {
  double d_sd_m = 50.0;
  double d_sr_m = 25.0;
  double d_se_lo_m = 10.0;
  double d_se_hi_m = 90.0;
  double d_se_step_m = 5.0;
  double alpha = 3.5;
  double sigma2_mw = 1e-10;  // -100 dBm
  SweepMode mode = SweepMode::RateMax;
  double p0_mw = 1e-4;  // -40 dBm
  double rs0 = 1.0;
  std::vector<std::size_t> antenna_counts{2, 4};
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  double min_distance_m = 1.0;
  unsigned threads = 0;  // 0: hardware concurrency

  std::vector<double> d_se_points() const {
    std::vector<double> out;
    const double span = d_se_hi_m - d_se_lo_m;
    const auto steps = static_cast<std::size_t>(std::floor(span / d_se_step_m + 1e-9));
    for (std::size_t k = 0; k <= steps; ++k)
      out.push_back(d_se_lo_m + static_cast<double>(k) * d_se_step_m);
    return out;
  }
};

inline void validate(const SweepConfig& cfg) {
  if (cfg.trials < 1) throw InvalidArgument("trials must be >= 1");
  if (!(cfg.d_se_step_m > 0.0)) throw InvalidArgument("d_se step must be > 0");
  if (!(cfg.d_se_lo_m > 0.0) || cfg.d_se_hi_m < cfg.d_se_lo_m)
    throw InvalidArgument("d_se range must be nonempty and positive");
  if (!(cfg.rs0 > 0.0)) throw InvalidArgument("rs0 must be > 0");
  if (!(cfg.p0_mw > 0.0)) throw InvalidArgument("P0 must be > 0");
  for (auto n : cfg.antenna_counts)
    if (n < 1) throw InvalidArgument("antenna counts must be >= 1");
  ChannelParams params{cfg.alpha, cfg.sigma2_mw, 1, cfg.min_distance_m};
  secjam::validate(params);
  for (double d_se : cfg.d_se_points())
    link_distances(Geometry{cfg.d_sd_m, cfg.d_sr_m, d_se}, params);
}

/// One averaged cell. n_antennas == 0 labels direct transmission.
/// Power is averaged in dB: the linear mean is dominated by near-parallel
/// relay channels, whose required jamming power has no finite expectation.
struct SweepRow {
  double d_se_m = 0.0;
  std::size_t n_antennas = 0;
  double mean_secrecy_rate = 0.0;
  double mean_total_power_dbm = 0.0;
  double feasible_fraction = 0.0;
  std::size_t trials = 0;
  // Debug columns.
  double mean_raw_secrecy_rate = 0.0;
  double stderr_secrecy_rate = 0.0;
};

struct TrialResult {
  DesignOutcome jamming;  // configured design on this realization
  DesignOutcome direct;   // direct-transmission baseline on the same realization
};

inline ChannelState trial_channel(const SweepConfig& cfg, std::size_t d_index, std::size_t n,
                                  std::size_t trial) {
  const double d_se = cfg.d_se_points().at(d_index);
  auto rng = TrialStream::keyed(cfg.seed, {d_index, n, trial});
  const ChannelParams params{cfg.alpha, cfg.sigma2_mw, n == 0 ? 1 : n,
                             cfg.min_distance_m};
  return realize(Geometry{cfg.d_sd_m, cfg.d_sr_m, d_se}, params, rng);
}

inline DesignOutcome direct_design(const SweepConfig& cfg, const ChannelState& csi) {
  if (cfg.mode == SweepMode::RateMax) return direct_transmission_ratemax(csi, cfg.p0_mw);
  return direct_transmission_powermin(csi, cfg.rs0);
}

inline DesignOutcome jamming_design(const SweepConfig& cfg, const ChannelState& csi) {
  if (cfg.mode == SweepMode::RateMax) return design_rate_max({csi, cfg.p0_mw});
  return design_power_min({csi, cfg.rs0});
}

inline TrialResult simulate_trial(const SweepConfig& cfg, std::size_t d_index, std::size_t n,
                                  std::size_t trial) {
  const ChannelState csi = trial_channel(cfg, d_index, n, trial);
  return {jamming_design(cfg, csi), direct_design(cfg, csi)};
}

/// Pairwise summation in index order.
inline double pairwise_sum(std::span<const double> x) {
  if (x.size() <= 8) {
    double acc = 0.0;
    for (double v : x) acc += v;
    return acc;
  }
  const std::size_t half = x.size() / 2;
  return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

namespace detail {

inline SweepRow run_cell(const SweepConfig& cfg, std::size_t d_index, std::size_t n) {
  std::vector<double> rate, raw, power;
  rate.reserve(cfg.trials);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const ChannelState csi = trial_channel(cfg, d_index, n, t);
    const DesignOutcome out = n == 0 ? direct_design(cfg, csi) : jamming_design(cfg, csi);
    if (out.mode == DesignMode::Infeasible) continue;
    rate.push_back(out.secrecy_rate);
    raw.push_back(out.raw_secrecy_rate);
    power.push_back(mw_to_dbm(out.total_power_mw));
  }

  SweepRow row;
  row.d_se_m = cfg.d_se_points()[d_index];
  row.n_antennas = n;
  row.trials = cfg.trials;
  row.feasible_fraction = static_cast<double>(rate.size()) / static_cast<double>(cfg.trials);
  if (rate.empty()) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.mean_secrecy_rate = row.mean_total_power_dbm = row.mean_raw_secrecy_rate = nan;
    row.stderr_secrecy_rate = nan;
    return row;
  }
  const auto k = static_cast<double>(rate.size());
  row.mean_secrecy_rate = pairwise_sum(rate) / k;
  row.mean_raw_secrecy_rate = pairwise_sum(raw) / k;
  row.mean_total_power_dbm = pairwise_sum(power) / k;
  if (rate.size() > 1) {
    std::vector<double> dev(rate.size());
    for (std::size_t i = 0; i < rate.size(); ++i)
      dev[i] = (rate[i] - row.mean_secrecy_rate) * (rate[i] - row.mean_secrecy_rate);
    row.stderr_secrecy_rate = std::sqrt(pairwise_sum(dev) / (k - 1.0) / k);
  }
  return row;
}

}  // namespace detail

/// Rows ordered by d_SE, then the configured antenna counts, then N = 0.
inline std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  const auto points = cfg.d_se_points();
  std::vector<std::size_t> ns = cfg.antenna_counts;
  ns.push_back(0);

  const std::size_t cells = points.size() * ns.size();
  std::vector<SweepRow> rows(cells);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    for (std::size_t c = next++; c < cells && !failed; c = next++) {
      try {
        rows[c] = detail::run_cell(cfg, c / ns.size(), ns[c % ns.size()]);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr const char* kCsvHeader =
    "d_se_m,n_antennas,mean_secrecy_rate_bps_hz,mean_total_power_dbm,feasible_fraction,trials";
inline constexpr const char* kCsvDebugHeader = ",mean_raw_secrecy_rate_bps_hz,stderr_secrecy_rate";

inline std::string format_g9(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

inline void write_csv(const std::vector<SweepRow>& rows, std::ostream& os, bool debug_columns = false) {
  os << kCsvHeader << (debug_columns ? kCsvDebugHeader : "") << '\n';
  for (const auto& r : rows) {
    os << format_g9(r.d_se_m) << ',' << r.n_antennas << ',' << format_g9(r.mean_secrecy_rate) << ','
       << format_g9(r.mean_total_power_dbm) << ',' << format_g9(r.feasible_fraction) << ','
       << r.trials;
    if (debug_columns)
      os << ',' << format_g9(r.mean_raw_secrecy_rate) << ',' << format_g9(r.stderr_secrecy_rate);
    os << '\n';
  }
}

inline void write_csv(const std::vector<SweepRow>& rows, const std::string& path, bool debug_columns = false) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_csv(rows, out, debug_columns);
  out.flush();
  if (!out) throw Error("write to '" + path + "' failed");
}

/// Parses the six standard columns; extra columns are ignored.
inline std::vector<SweepRow> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind(kCsvHeader, 0) != 0) throw Error("missing sweep CSV header");
  std::vector<SweepRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() < 6) throw Error("short CSV row: " + line);
    SweepRow r;
    r.d_se_m = std::stod(f[0]);
    r.n_antennas = std::stoul(f[1]);
    r.mean_secrecy_rate = std::stod(f[2]);
    r.mean_total_power_dbm = std::stod(f[3]);
    r.feasible_fraction = std::stod(f[4]);
    r.trials = std::stoul(f[5]);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace secjam::sim
