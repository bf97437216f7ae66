#include "corrdyn/trajectory.hpp"

#include "corrdyn/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <ostream>
#include <vector>

namespace corrdyn {

std::string format_fixed9(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", value);
  // All-zero negative output is just rounding noise; drop the sign.
  if (buf[0] == '-' && std::strspn(buf + 1, "0.") == std::strlen(buf + 1)) {
    return std::string(buf + 1);
  }
  return std::string(buf);
}

namespace {

TrajectoryRecord make_record(double gamma_t, const CorrelationVector& state) {
  TrajectoryRecord row;
  row.gamma_t = gamma_t;
  row.state = state;
  row.spectrum = bell_spectrum(state);
  row.sorted = sorted_spectrum(row.spectrum);
  const CorrelationReport report = full_report(state);
  row.mutual_info = report.mutual_info;
  row.classical = report.classical;
  row.discord = report.discord;
  row.entanglement = report.entanglement;
  row.dissonance = report.dissonance;
  const ClassicalStateDescriptor descriptor = closest_classical(row.spectrum);
  row.q_cl = descriptor.q;
  row.pair_high = descriptor.pair_high;
  return row;
}

void write_metadata(std::ostream& out, const RunConfig& config) {
  out << "# corrdyn " << kVersion << "\n";
  out << "# channel = " << channel_name(config.channel.kind) << "\n";
  out << "# gamma = " << format_fixed9(config.channel.gamma) << "\n";
  out << "# c1 = " << format_fixed9(config.initial.c1) << "\n";
  out << "# c2 = " << format_fixed9(config.initial.c2) << "\n";
  out << "# c3 = " << format_fixed9(config.initial.c3) << "\n";
  out << "# tmax = " << format_fixed9(config.t_max) << "\n";
  out << "# samples = " << config.samples << "\n";
}

}  // namespace

Trajectory run_trajectory(const RunConfig& config) {
  if (config.samples < 2) throw ConfigError("run_trajectory: samples must be >= 2");
  if (!(config.t_max > 0.0)) throw ConfigError("run_trajectory: tmax must be > 0");
  if (!(config.channel.gamma > 0.0)) throw ConfigError("run_trajectory: gamma must be > 0");
  make_state(config.initial.c1, config.initial.c2, config.initial.c3);

  Trajectory trajectory;
  trajectory.config = config;
  trajectory.rows.reserve(config.samples);
  const double gamma = config.channel.gamma;
  for (int i = 0; i < config.samples; ++i) {
    const double gamma_t = config.t_max * i / (config.samples - 1);
    const CorrelationVector state = evolve(config.initial, config.channel, gamma_t / gamma);
    trajectory.rows.push_back(make_record(gamma_t, state));
  }

  if (config.lindblad_check) {
    double max_dev = 0.0;
    DensityMatrix rho = to_density_matrix(config.initial);
    double t_prev = 0.0;
    const double dt = config.lindblad_dt / gamma;
    for (const TrajectoryRecord& row : trajectory.rows) {
      const double t = row.gamma_t / gamma;
      if (t > t_prev) rho = integrate(rho, config.channel, t - t_prev, dt);
      t_prev = t;
      const double dev = (rho - to_density_matrix(row.state)).cwiseAbs().maxCoeff();
      max_dev = std::max(max_dev, dev);
    }
    trajectory.lindblad_max_dev = max_dev;
  }

  if (config.optimizer_grid_n > 0) {
    double max_dev = 0.0;
    for (const TrajectoryRecord& row : trajectory.rows) {
      const double numeric =
          classical_correlations_numeric(row.state, config.optimizer_grid_n).value;
      max_dev = std::max(max_dev, std::abs(numeric - row.classical));
    }
    trajectory.optimizer_max_dev = max_dev;
  }
  return trajectory;
}

std::optional<TransitionEstimate> detect_transition(const Trajectory& trajectory) {
  const auto& rows = trajectory.rows;
  const std::size_t n = rows.size();
  if (n < 16) throw ConfigError("detect_transition: need at least 16 rows");

  // Largest second difference of the discord column marks the kink.
  std::vector<double> mags;
  mags.reserve(n - 2);
  std::size_t kink = 1;
  double max_mag = -1.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double d2 = rows[i + 1].discord - 2.0 * rows[i].discord + rows[i - 1].discord;
    const double mag = std::abs(d2);
    mags.push_back(mag);
    if (mag > max_mag) {
      max_mag = mag;
      kink = i;
    }
  }
  std::nth_element(mags.begin(), mags.begin() + mags.size() / 2, mags.end());
  const double noise_floor = std::max(mags[mags.size() / 2], 1e-13);
  if (max_mag < 10.0 * noise_floor) return std::nullopt;

  // Refine on the analytic chi crossing of the initial state.
  const CorrelationVector& c0 = trajectory.config.initial;
  const int keep = preserved_index(trajectory.config.channel.kind);
  const double mags0[3] = {std::abs(c0.c1), std::abs(c0.c2), std::abs(c0.c3)};
  double chi_d = 0.0;
  for (int i = 1; i <= 3; ++i) {
    if (i != keep) chi_d = std::max(chi_d, mags0[i - 1]);
  }
  const double chi_p = mags0[keep - 1];
  auto crossing = [&](double gamma_t) { return chi_d * std::exp(-2.0 * gamma_t) - chi_p; };

  const double step = rows[1].gamma_t - rows[0].gamma_t;
  double lo = rows[kink - 1].gamma_t;
  double hi = rows[std::min(kink + 1, n - 1)].gamma_t;
  if (crossing(lo) * crossing(hi) > 0.0) {
    lo = rows.front().gamma_t;
    hi = rows.back().gamma_t;
    if (crossing(lo) * crossing(hi) > 0.0) return std::nullopt;
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (crossing(lo) * crossing(mid) <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return TransitionEstimate{0.5 * (lo + hi), step};
}

void write_csv(std::ostream& out, const Trajectory& trajectory) {
  write_metadata(out, trajectory.config);
  if (trajectory.lindblad_max_dev) {
    out << "# lindblad_dt = " << format_fixed9(trajectory.config.lindblad_dt) << "\n";
    out << "# lindblad_max_dev = " << format_fixed9(*trajectory.lindblad_max_dev) << "\n";
  }
  if (trajectory.optimizer_max_dev) {
    out << "# optimizer_grid_n = " << trajectory.config.optimizer_grid_n << "\n";
    out << "# optimizer_max_dev = " << format_fixed9(*trajectory.optimizer_max_dev) << "\n";
  }
  out << "gamma_t,c1,c2,c3,lam1,lam2,lam3,lam4,I,C,D,E,Q,q_cl,pair_high\n";
  for (const TrajectoryRecord& row : trajectory.rows) {
    out << format_fixed9(row.gamma_t) << ',' << format_fixed9(row.state.c1) << ','
        << format_fixed9(row.state.c2) << ',' << format_fixed9(row.state.c3);
    for (const SpectrumEntry& entry : row.sorted) out << ',' << format_fixed9(entry.lambda);
    out << ',' << format_fixed9(row.mutual_info) << ',' << format_fixed9(row.classical)
        << ',' << format_fixed9(row.discord) << ',' << format_fixed9(row.entanglement)
        << ',' << (row.dissonance ? format_fixed9(*row.dissonance) : "nan") << ','
        << format_fixed9(row.q_cl) << ',' << label_name(row.pair_high[0]) << ';'
        << label_name(row.pair_high[1]) << "\n";
  }
}

std::vector<std::string> reproduce_figure(int id, const std::string& outdir) {
  RunConfig config;
  config.channel = ChannelSpec{ChannelKind::PhaseFlip, 1.0};
  config.samples = 512;
  switch (id) {
    case 1:
    case 3:
      config.initial = class_state(ChannelKind::PhaseFlip, TransitionClassParams{+1, 0.6});
      config.t_max = 1.0;
      break;
    case 2:
      config.initial = class_state(ChannelKind::PhaseFlip, TransitionClassParams{+1, 0.3});
      config.t_max = 2.0;
      break;
    default:
      throw ConfigError("reproduce_figure: unknown figure id " + std::to_string(id));
  }
  const Trajectory trajectory = run_trajectory(config);

  const std::string path = outdir + "/fig" + std::to_string(id) + ".csv";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("reproduce_figure: cannot open " + path);
  write_metadata(out, config);
  if (id == 1) {
    out << "gamma_t,I,C,D,lam_psi_plus,lam_psi_minus,lam_phi_plus,lam_phi_minus\n";
    for (const TrajectoryRecord& row : trajectory.rows) {
      out << format_fixed9(row.gamma_t) << ',' << format_fixed9(row.mutual_info) << ','
          << format_fixed9(row.classical) << ',' << format_fixed9(row.discord) << ','
          << format_fixed9(row.spectrum.psi_plus) << ','
          << format_fixed9(row.spectrum.psi_minus) << ','
          << format_fixed9(row.spectrum.phi_plus) << ','
          << format_fixed9(row.spectrum.phi_minus) << "\n";
    }
  } else if (id == 2) {
    out << "gamma_t,E,D\n";
    for (const TrajectoryRecord& row : trajectory.rows) {
      out << format_fixed9(row.gamma_t) << ',' << format_fixed9(row.entanglement) << ','
          << format_fixed9(row.discord) << "\n";
    }
  } else {
    out << "gamma_t,E,D,Q\n";
    for (const TrajectoryRecord& row : trajectory.rows) {
      out << format_fixed9(row.gamma_t) << ',' << format_fixed9(row.entanglement) << ','
          << format_fixed9(row.discord) << ','
          << (row.dissonance ? format_fixed9(*row.dissonance) : "nan") << "\n";
    }
  }
  return {path};
}

}  // namespace corrdyn
