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

// Command-line front end: single-shot designs, sweeps and oracle checks.
//
// Precedence for every setting: command-line flag, then config file, then
// the SECJAM_SEED environment variable (seed only), then built-in defaults.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "secjam/channel.hpp"
#include "secjam/design.hpp"
#include "secjam/errors.hpp"
#include "secjam/oracle.hpp"
#include "secjam/rng.hpp"
#include "secjam/sim.hpp"
#include "secjam/units.hpp"

namespace secjam::cli {

enum class Command { DesignRateMax, DesignPowerMin, Sweep, Verify };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Thrown by parse_args. exit_code is 0 for --help, 2 otherwise.
class UsageError : public Error {
 public:
  UsageError(const std::string& what, int exit_code = kExitUsage) : Error(what), exit_code(exit_code) {}
  int exit_code;
};

struct CliConfig {
  Command command = Command::Sweep;
  // Powers are already in mW; geometry, mode, trials and seed live here too.
  sim::SweepConfig sweep;
  // Explicit --n values; empty means the per-command default.
  std::vector<std::size_t> antennas;
  double d_se_m = 40.0;  // single-shot designs
  std::string out_path;  // empty: stdout
  bool verbose = false;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Flat `key = value` lines, `#` starts a comment.
inline std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

struct RawOptions {
  std::string command;
  double d_sd = 50.0, d_sr = 25.0, d_se = 40.0;
  std::string d_se_range = "10:90:5";
  double alpha = 3.5, sigma2_dbm = -100.0, p0_dbm = -40.0, rs0 = 1.0;
  double min_distance = 1.0;
  std::vector<std::size_t> n;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::string out, config, mode = "ratemax";
  bool verbose = false;
};

inline const std::vector<std::string>& long_flags() {
  static const std::vector<std::string> flags{
      "--d-sd", "--d-sr",  "--d-se", "--d-se-range", "--alpha", "--sigma2-dbm", "--p0-dbm", "--rs0",
      "--n",    "--trials", "--seed", "--out",        "--mode",  "--verbose",    "--min-distance"};
  return flags;
}

inline void build_app(CLI::App& app, RawOptions& o) {
  app.require_subcommand(1, 1);
  const std::pair<const char*, const char*> subcommands[] = {
      {"design-ratemax", "max secrecy rate under --p0-dbm for one channel draw"},
      {"design-powermin", "min total power meeting --rs0 for one channel draw"},
      {"sweep", "Monte Carlo sweep over eavesdropper positions, CSV output"},
      {"verify", "check the designs against brute-force oracles"}};
  for (const auto& [name, help] : subcommands) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&o, sub] { o.command = sub->get_name(); });
  }
  app.add_option("--d-sd", o.d_sd, "source-destination distance [m]");
  app.add_option("--d-sr", o.d_sr, "source-relay distance [m]");
  app.add_option("--d-se", o.d_se, "source-eavesdropper distance for single-shot designs [m]");
  app.add_option("--d-se-range", o.d_se_range, "sweep range lo:hi:step [m]");
  app.add_option("--alpha", o.alpha, "path-loss exponent");
  app.add_option("--sigma2-dbm", o.sigma2_dbm, "noise power [dBm]");
  app.add_option("--p0-dbm", o.p0_dbm, "total power budget for rate maximization [dBm]");
  app.add_option("--rs0", o.rs0, "secrecy-rate target for power minimization [b/s/Hz]");
  app.add_option("--min-distance", o.min_distance, "floor on link distances [m]; 0 rejects coincident nodes");
  app.add_option("--n", o.n, "relay antenna count (repeatable)")->allow_extra_args(false);
  app.add_option("--trials", o.trials, "Monte Carlo trials per cell");
  app.add_option("--seed", o.seed, "64-bit seed (fallback: SECJAM_SEED)");
  app.add_option("--out", o.out, "output CSV path (default stdout)");
  app.add_option("--config", o.config, "flat key = value config file");
  app.add_option("--mode", o.mode, "sweep design: ratemax or powermin")
      ->check(CLI::IsMember({"ratemax", "powermin"}));
  app.add_flag("--verbose", o.verbose, "extra diagnostics and debug CSV columns");
}

inline void parse_once(const std::vector<std::string>& args, RawOptions& o, CLI::App& app) {
  build_app(app, o);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help(), kExitOk);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what() + std::string("\n") + app.help());
  }
}

inline double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("invalid " + what + ": '" + text + "'");
  return v;
}

}  // namespace detail

/// args excludes the program name.
inline CliConfig parse_args(const std::vector<std::string>& args) {
  detail::RawOptions o;
  auto app = std::make_unique<CLI::App>("secjam: null-steering cooperative jamming designs", "secjam");
  detail::parse_once(args, o, *app);

  if (!o.config.empty()) {
    std::vector<std::string> merged = args;
    for (const auto& [key, value] : detail::read_config_file(o.config)) {
      std::string flag = "--" + key;
      std::replace(flag.begin(), flag.end(), '_', '-');
      const auto& known = detail::long_flags();
      if (std::find(known.begin(), known.end(), flag) == known.end())
        throw UsageError("unknown config key '" + key + "'");
      if (app->count(flag) > 0) continue;
      if (flag == "--verbose") {
        if (value == "true" || value == "1") merged.push_back(flag);
        else if (value != "false" && value != "0") throw UsageError("invalid verbose value '" + value + "'");
        continue;
      }
      merged.push_back(flag);
      merged.push_back(value);
    }
    o = detail::RawOptions{};
    app = std::make_unique<CLI::App>("secjam: null-steering cooperative jamming designs", "secjam");
    detail::parse_once(merged, o, *app);
  }

  if (app->count("--seed") == 0) {
    if (const char* env = std::getenv("SECJAM_SEED")) {
      const std::string text = env;
      std::size_t used = 0;
      try {
        o.seed = std::stoull(text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != text.size()) throw UsageError("invalid SECJAM_SEED '" + text + "'");
    }
  }

  CliConfig cfg;
  if (o.command == "design-ratemax") cfg.command = Command::DesignRateMax;
  else if (o.command == "design-powermin") cfg.command = Command::DesignPowerMin;
  else if (o.command == "sweep") cfg.command = Command::Sweep;
  else cfg.command = Command::Verify;

  auto& s = cfg.sweep;
  s.d_sd_m = o.d_sd;
  s.d_sr_m = o.d_sr;
  s.alpha = o.alpha;
  s.sigma2_mw = dbm_to_mw(o.sigma2_dbm);
  s.p0_mw = dbm_to_mw(o.p0_dbm);
  s.rs0 = o.rs0;
  s.min_distance_m = o.min_distance;
  s.mode = o.mode == "powermin" ? sim::SweepMode::PowerMin : sim::SweepMode::RateMax;
  s.trials = o.trials;
  s.seed = o.seed;
  cfg.antennas = o.n;
  if (!o.n.empty()) s.antenna_counts = o.n;
  cfg.d_se_m = o.d_se;
  cfg.out_path = o.out;
  cfg.verbose = o.verbose;

  std::vector<std::string> parts;
  std::stringstream ss(o.d_se_range);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw UsageError("--d-se-range expects lo:hi:step");
  s.d_se_lo_m = detail::parse_number(parts[0], "--d-se-range lo");
  s.d_se_hi_m = detail::parse_number(parts[1], "--d-se-range hi");
  s.d_se_step_m = detail::parse_number(parts[2], "--d-se-range step");

  try {
    sim::validate(s);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

namespace detail {

inline std::string g9(double x) { return sim::format_g9(x); }

inline std::string dbm_text(double mw) { return mw > 0.0 ? g9(mw_to_dbm(mw)) : "-inf"; }

inline ChannelState single_shot_channel(const CliConfig& cfg) {
  const auto& s = cfg.sweep;
  const std::size_t n = cfg.antennas.empty() ? 4 : cfg.antennas.front();
  const ChannelParams params{s.alpha, s.sigma2_mw, n, s.min_distance_m};
  auto rng = TrialStream::keyed(s.seed, {0});
  return realize(Geometry{s.d_sd_m, s.d_sr_m, cfg.d_se_m}, params, rng);
}

inline void print_outcome(const DesignOutcome& out, std::ostream& os) {
  os << "  result    " << to_string(out.mode) << ": Ps=" << dbm_text(out.ps_mw)
     << " dBm, Pj=" << dbm_text(out.pj_mw) << " dBm, Rs=" << g9(out.secrecy_rate) << " b/s/Hz\n"
     << "mode=" << to_string(out.mode) << '\n'
     << "ps_mw=" << g9(out.ps_mw) << '\n'
     << "pj_mw=" << g9(out.pj_mw) << '\n'
     << "secrecy_rate=" << g9(out.secrecy_rate) << '\n'
     << "total_power_mw=" << g9(out.total_power_mw) << '\n';
}

inline void print_header(const CliConfig& cfg, const ChannelState& csi, const char* title, std::ostream& os) {
  const auto& s = cfg.sweep;
  os << "secjam " << title << '\n'
     << "  geometry  d_sd=" << g9(s.d_sd_m) << " m, d_sr=" << g9(s.d_sr_m) << " m, d_se=" << g9(cfg.d_se_m)
     << " m\n"
     << "  channel   alpha=" << g9(s.alpha) << ", sigma2=" << dbm_text(s.sigma2_mw)
     << " dBm, N=" << csi.n_antennas() << ", seed=" << s.seed << '\n';
}

inline int run_design_ratemax(const CliConfig& cfg, std::ostream& os) {
  const ChannelState csi = single_shot_channel(cfg);
  print_header(cfg, csi, "design-ratemax", os);
  os << "  budget    P0=" << dbm_text(cfg.sweep.p0_mw) << " dBm\n";
  print_outcome(design_rate_max({csi, cfg.sweep.p0_mw}), os);
  return kExitOk;
}

inline int run_design_powermin(const CliConfig& cfg, std::ostream& os) {
  const ChannelState csi = single_shot_channel(cfg);
  print_header(cfg, csi, "design-powermin", os);
  os << "  target    Rs0=" << g9(cfg.sweep.rs0) << " b/s/Hz\n";
  const DesignOutcome out = design_power_min({csi, cfg.sweep.rs0});
  print_outcome(out, os);
  return out.mode == DesignMode::Infeasible ? kExitFailure : kExitOk;
}

inline int run_sweep(const CliConfig& cfg, std::ostream& os, std::ostream& err) {
  const auto rows = sim::run_sweep(cfg.sweep);
  if (cfg.out_path.empty()) {
    sim::write_csv(rows, os, cfg.verbose);
  } else {
    try {
      sim::write_csv(rows, cfg.out_path, cfg.verbose);
    } catch (const Error& e) {
      err << "secjam: " << e.what() << '\n';
      return kExitFailure;
    }
  }
  if (cfg.verbose) err << "secjam: wrote " << rows.size() << " rows\n";
  return kExitOk;
}

// Oracle tolerances.
inline constexpr double kRateTol = 1e-9;
inline constexpr double kPowerRelTol = 1e-9;
inline constexpr double kNullTol = 1e-24;
inline constexpr double kBudgetRelTol = 1e-12;
inline constexpr std::size_t kGridPoints = 10000;
inline constexpr std::size_t kSubspaceRealizations = 5;
inline constexpr std::size_t kSubspaceSamples = 100000;

inline bool nulled(const ChannelState& csi, const DesignOutcome& out) {
  const double leak = std::norm(hermitian_inner(out.w, csi.h_rd));
  return leak <= kNullTol * out.pj_mw * norm_sq(csi.h_rd);
}

inline int run_verify(const CliConfig& cfg, std::ostream& os) {
  auto s = cfg.sweep;
  if (cfg.antennas.empty()) s.antenna_counts = {2, 4};
  const auto points = s.d_se_points();
  std::size_t checks = 0, violations = 0;
  auto check = [&](bool ok, const std::string& what, std::size_t t) {
    ++checks;
    if (!ok) {
      ++violations;
      os << "VIOLATION trial " << t << ": " << what << '\n';
    }
  };

  for (std::size_t t = 0; t < s.trials; ++t) {
    const std::size_t di = t % points.size();
    const std::size_t n = s.antenna_counts[t % s.antenna_counts.size()];
    const ChannelState csi = sim::trial_channel(s, di, n, t);

    const DesignOutcome rm = design_rate_max({csi, s.p0_mw});
    check(rm.raw_secrecy_rate >= direct_transmission_ratemax(csi, s.p0_mw).raw_secrecy_rate,
          "rate-max below direct transmission", t);
    if (rm.mode == DesignMode::CooperativeJamming) {
      check(nulled(csi, rm), "rate-max jamming leaks to destination", t);
      check(std::abs(rm.ps_mw + rm.pj_mw - s.p0_mw) <= kBudgetRelTol * s.p0_mw, "rate-max budget", t);
    }
    try {
      const oracle::GridSpec grid{kGridPoints, s.p0_mw / kGridPoints, s.p0_mw};
      const auto best = oracle::grid_best_ps_ratemax(csi, s.p0_mw, grid);
      check(rm.secrecy_rate >= best.value - kRateTol, "rate-max beaten by grid", t);
    } catch (const DegenerateChannels&) {
    }

    const DesignOutcome pm = design_power_min({csi, s.rs0});
    if (pm.mode == DesignMode::CooperativeJamming) {
      check(nulled(csi, pm), "power-min jamming leaks to destination", t);
      check(std::abs(pm.raw_secrecy_rate - s.rs0) <= kRateTol, "power-min rate not tight", t);
    }
    if (const auto p_dt = direct_transmission_power(csi, s.rs0))
      check(pm.total_power_mw <= *p_dt, "power-min above direct transmission", t);
    try {
      const double floor = powermin_floor(csi, s.rs0);
      const auto p_dt = direct_transmission_power(csi, s.rs0);
      const double hi = p_dt ? *p_dt : 1000.0 * floor;
      const oracle::GridSpec grid{kGridPoints, floor + (hi - floor) / kGridPoints, hi};
      const auto best = oracle::grid_best_ps_powermin(csi, s.rs0, grid);
      check(pm.mode != DesignMode::Infeasible &&
                pm.total_power_mw <= best.value * (1.0 + kPowerRelTol),
            "power-min beaten by grid", t);
    } catch (const DegenerateChannels&) {
    }

    if (t < kSubspaceRealizations && n >= 2) {
      auto rng = TrialStream::keyed(s.seed, {0xC0FFEE, t});
      const double pj = s.p0_mw / 2.0;
      const double found = oracle::subspace_weight_search(csi, s.p0_mw - pj, pj, kSubspaceSamples, rng);
      const double analytic = oracle::analytic_jamming_optimum(csi, pj);
      check(found <= analytic * (1.0 + kRateTol), "subspace search beats closed form", t);
      if (n <= 4) check(found >= 0.99 * analytic, "subspace search far from closed form", t);
    }
  }
  os << "verify: " << s.trials << " realizations, " << checks << " checks, " << violations
     << " violations\n";
  return violations == 0 ? kExitOk : kExitFailure;
}

}  // namespace detail

inline int run(const CliConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    switch (cfg.command) {
      case Command::DesignRateMax: return detail::run_design_ratemax(cfg, out);
      case Command::DesignPowerMin: return detail::run_design_powermin(cfg, out);
      case Command::Sweep: return detail::run_sweep(cfg, out, err);
      case Command::Verify: return detail::run_verify(cfg, out);
    }
  } catch (const InvalidArgument& e) {
    err << "secjam: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "secjam: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

/// argv-style entry point used by the executable.
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CliConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const UsageError& e) {
    (e.exit_code == kExitOk ? out : err) << e.what() << '\n';
    return e.exit_code;
  }
  return run(cfg, out, err);
}

}  // namespace secjam::cli
