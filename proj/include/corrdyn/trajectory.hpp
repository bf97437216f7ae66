#ifndef CORRDYN_TRAJECTORY_HPP
#define CORRDYN_TRAJECTORY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "corrdyn/bell_state.hpp"
#include "corrdyn/channels.hpp"
#include "corrdyn/correlations.hpp"

// Time-grid evolution driver, transition detection, figure data files and
// the oracle-equivalence validation suites. Backs the corrdyn CLI.

namespace corrdyn {

inline constexpr const char* kVersion = "0.1.0";

struct RunConfig {
  CorrelationVector initial;
  ChannelSpec channel;
  double t_max = 1.0;  // trajectory span as the dimensionless product gamma*t
  int samples = 256;   // >= 2

  // Oracle toggles: cross-check rows against the RK4 Lindblad integrator
  // and/or the measurement optimizer; deviations land in the Trajectory.
  bool lindblad_check = false;
  double lindblad_dt = 1e-4;  // step as gamma*dt
  int optimizer_grid_n = 0;   // 0 = off
};

struct TrajectoryRecord {
  double gamma_t;
  CorrelationVector state;
  BellSpectrum spectrum;                  // populations by Bell label
  std::array<SpectrumEntry, 4> sorted;    // non-increasing, fixed tie-break
  double mutual_info;
  double classical;
  double discord;
  double entanglement;
  std::optional<double> dissonance;
  double q_cl;
  std::array<BellLabel, 2> pair_high;
};

struct Trajectory {
  RunConfig config;
  std::vector<TrajectoryRecord> rows;
  // Largest deviations seen by the enabled oracle toggles.
  std::optional<double> lindblad_max_dev;
  std::optional<double> optimizer_max_dev;
};

// Uniform grid of `samples` points over gamma_t in [0, t_max], inclusive.
// Throws ConfigError for samples < 2 or t_max <= 0.
Trajectory run_trajectory(const RunConfig& config);

// Kink located as the largest second difference of the discord column,
// refined by bisection on the analytic chi-crossing of the initial state.
// The uncertainty is the grid step. nullopt when no second difference rises
// 10x above the numerical noise floor. Requires >= 16 rows (ConfigError).
struct TransitionEstimate {
  double gamma_t;
  double uncertainty;
};
std::optional<TransitionEstimate> detect_transition(const Trajectory& trajectory);

// '#'-prefixed metadata (config echo), a header row, then fixed-format rows:
// gamma_t,c1,c2,c3,lam1,lam2,lam3,lam4,I,C,D,E,Q,q_cl,pair_high.
void write_csv(std::ostream& out, const Trajectory& trajectory);

// Figure data files: fig1.csv (kappa=0.6: gamma_t, I, C, D + the four Bell
// populations), fig2.csv (kappa=0.3: gamma_t, E, D over [0,2]), fig3.csv
// (kappa=0.6: gamma_t, E, D, Q). 512 samples each. Returns the paths
// written; throws ConfigError for an unknown id.
std::vector<std::string> reproduce_figure(int id, const std::string& outdir);

// Oracle-equivalence suites over a deterministic n-state sample.
struct SuiteResult {
  std::string name;
  double max_dev;
  double tolerance;
  bool passed() const { return max_dev <= tolerance; }
};
struct ValidationReport {
  std::uint64_t seed;
  int n;
  std::vector<SuiteResult> suites;
  bool passed;
  std::string text() const;  // deterministic, printable report
};
ValidationReport validate(std::uint64_t seed, int n);

// Fixed 9-decimal rendering used by every emitted data file ("nan" for
// absent values, no negative zero).
std::string format_fixed9(double value);

}  // namespace corrdyn

#endif
