#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "corrdyn/measurement.hpp"
#include "corrdyn/random_states.hpp"
#include "corrdyn/trajectory.hpp"

namespace corrdyn {

namespace {

std::string format_sci3(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  return std::string(buf);
}

// Relative-entropy construction of the dissonance, independent of the
// closed form in correlations.cpp: build the closest separable spectrum and
// measure its distance to its own closest classical state.
double dissonance_oracle(const CorrelationVector& state) {
  const BellSpectrum spectrum = bell_spectrum(state);
  const auto sorted = sorted_spectrum(spectrum);
  BellSpectrum separable;
  if (sorted[0].lambda <= 0.5) {
    separable = spectrum;
  } else {
    const double denom = 2.0 * (1.0 - sorted[0].lambda);
    separable[sorted[0].label] = 0.5;
    for (int i = 1; i < 4; ++i) separable[sorted[i].label] = sorted[i].lambda / denom;
  }
  return relative_entropy(separable, classical_spectrum(closest_classical(separable)));
}

}  // namespace

std::string ValidationReport::text() const {
  std::ostringstream out;
  out << "corrdyn validation report (seed = " << seed << ", n = " << n << ")\n";
  for (const SuiteResult& suite : suites) {
    out << suite.name << ": max_dev = " << format_sci3(suite.max_dev)
        << " tol = " << format_sci3(suite.tolerance) << " "
        << (suite.passed() ? "PASS" : "FAIL") << "\n";
  }
  out << "overall: " << (passed ? "PASS" : "FAIL") << "\n";
  return out.str();
}

ValidationReport validate(std::uint64_t seed, int n) {
  if (n < 1) throw ConfigError("validate: n must be >= 1");

  StateSampler sampler(seed);
  std::vector<CorrelationVector> states;
  states.reserve(n);
  for (int i = 0; i < n; ++i) states.push_back(sampler.next());

  ValidationReport report;
  report.seed = seed;
  report.n = n;

  // Analytic decay laws vs the RK4 Lindblad integrator, entrywise.
  {
    const double checkpoints[3] = {0.1, 0.5, 1.0};
    double max_dev = 0.0;
    for (const CorrelationVector& state : states) {
      for (ChannelKind kind : {ChannelKind::BitFlip, ChannelKind::BitPhaseFlip,
                               ChannelKind::PhaseFlip}) {
        const ChannelSpec channel{kind, 1.0};
        DensityMatrix rho = to_density_matrix(state);
        double t_prev = 0.0;
        for (double t : checkpoints) {
          rho = integrate(rho, channel, t - t_prev, 1e-4);
          t_prev = t;
          const DensityMatrix expected = to_density_matrix(evolve(state, channel, t));
          max_dev = std::max(max_dev, (rho - expected).cwiseAbs().maxCoeff());
        }
      }
    }
    report.suites.push_back(SuiteResult{"evolve_vs_lindblad", max_dev, 1e-8});
  }

  // Closed-form classical correlations vs the measurement optimizer.
  {
    double max_dev = 0.0;
    for (const CorrelationVector& state : states) {
      const double numeric = classical_correlations_numeric(state, 32).value;
      max_dev = std::max(max_dev, std::abs(numeric - classical_correlations(state)));
    }
    report.suites.push_back(SuiteResult{"closed_form_vs_optimizer", max_dev, 1e-7});
  }

  // Discord vs relative entropy to the closest classical state.
  {
    double max_dev = 0.0;
    for (const CorrelationVector& state : states) {
      const BellSpectrum spectrum = bell_spectrum(state);
      const double re =
          relative_entropy(spectrum, classical_spectrum(closest_classical(spectrum)));
      max_dev = std::max(max_dev, std::abs(re - discord(state)));
    }
    report.suites.push_back(SuiteResult{"discord_vs_relative_entropy", max_dev, 1e-10});
  }

  // Corrected-sign dissonance formula vs the relative-entropy construction.
  {
    double max_dev = 0.0;
    for (const CorrelationVector& state : states) {
      const auto sorted = sorted_spectrum(bell_spectrum(state));
      if (1.0 - sorted[0].lambda < 1e-15) continue;  // dissonance undefined
      max_dev = std::max(max_dev, std::abs(dissonance_oracle(state) - dissonance(state)));
    }
    report.suites.push_back(SuiteResult{"dissonance_vs_relative_entropy", max_dev, 1e-12});
  }

  report.passed = true;
  for (const SuiteResult& suite : report.suites) report.passed &= suite.passed();
  return report;
}

}  // namespace corrdyn
