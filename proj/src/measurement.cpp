#include "corrdyn/measurement.hpp"

#include <cmath>
#include <complex>
#include <functional>

#include <Eigen/Eigenvalues>

#include "corrdyn/correlations.hpp"
#include "corrdyn/errors.hpp"

namespace corrdyn {

namespace {

constexpr double kPi = 3.14159265358979323846;

Eigen::Vector2cd basis_ket(const MeasurementBasis& basis, int outcome) {
  const std::complex<double> phase(std::cos(basis.phi), std::sin(basis.phi));
  Eigen::Vector2cd ket;
  if (outcome == 0) {
    ket << std::cos(basis.theta), phase * std::sin(basis.theta);
  } else {
    ket << std::conj(phase) * std::sin(basis.theta), -std::cos(basis.theta);
  }
  return ket;
}

double qubit_entropy(const Eigen::Matrix2cd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(rho,
                                                         Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double lam = solver.eigenvalues()(i);
    if (lam > 0.0) s -= lam * std::log2(lam);
  }
  return s < 0.0 ? 0.0 : s;
}

// Generic 4x4 route: project, partial trace, average the outcome entropies.
double conditional_entropy_impl(const CorrelationVector& state,
                                const MeasurementBasis& basis, bool measure_b) {
  const DensityMatrix rho = to_density_matrix(state);
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  double total = 0.0;
  for (int outcome = 0; outcome < 2; ++outcome) {
    const Eigen::Vector2cd ket = basis_ket(basis, outcome);
    const Eigen::Matrix2cd proj = ket * ket.adjoint();
    DensityMatrix full = DensityMatrix::Zero();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        full.block<2, 2>(2 * i, 2 * j) =
            measure_b ? id(i, j) * proj : proj(i, j) * id;
    const DensityMatrix projected = full * rho * full;
    const double p = projected.trace().real();
    if (p < 1e-15) continue;
    Eigen::Matrix2cd reduced = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        reduced(i, j) = measure_b
                            ? projected(2 * i, 2 * j) + projected(2 * i + 1, 2 * j + 1)
                            : projected(i, j) + projected(i + 2, j + 2);
      }
    }
    reduced /= p;
    total += p * qubit_entropy(reduced);
  }
  return total;
}

// Golden-section maximization; returns nothing, updates (best_x, best_value)
// with the best point seen.
void golden_max(const std::function<double(double)>& objective, double a, double b,
                double& best_x, double& best_value) {
  constexpr double kGolden = 0.6180339887498949;
  auto consider = [&](double x, double v) {
    if (v > best_value) {
      best_value = v;
      best_x = x;
    }
  };
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  consider(c, fc);
  consider(d, fd);
  while (b - a > 1e-9) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = objective(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = objective(d);
      consider(d, fd);
    }
  }
}

}  // namespace

double conditional_entropy(const CorrelationVector& state,
                           const MeasurementBasis& basis) {
  return conditional_entropy_impl(state, basis, true);
}

double conditional_entropy_on_a(const CorrelationVector& state,
                                const MeasurementBasis& basis) {
  return conditional_entropy_impl(state, basis, false);
}

OptimizationResult classical_correlations_numeric(const CorrelationVector& state,
                                                  int grid_n) {
  if (grid_n < 8) throw ConfigError("classical_correlations_numeric: grid_n must be >= 8");

  OptimizationResult result;
  auto objective = [&](double theta, double phi) {
    ++result.evaluations;
    // S(rho_A) = 1 for maximally mixed marginals.
    return 1.0 - conditional_entropy(state, MeasurementBasis{theta, phi});
  };

  // Coarse grid; theta endpoint-inclusive, phi periodic.
  double best_theta = 0.0;
  double best_phi = 0.0;
  double best = -1.0;
  const double dtheta = (kPi / 2.0) / (grid_n - 1);
  const double dphi = (2.0 * kPi) / grid_n;
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const double theta = i * dtheta;
      const double phi = j * dphi;
      const double value = objective(theta, phi);
      if (value > best) {
        best = value;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }
  result.grid_value = best;

  // Refine the best cell by coordinate descent, golden section per angle.
  for (int sweep = 0; sweep < 50; ++sweep) {
    const double before = best;
    double lo = std::max(0.0, best_theta - dtheta);
    double hi = std::min(kPi / 2.0, best_theta + dtheta);
    golden_max([&](double th) { return objective(th, best_phi); }, lo, hi,
               best_theta, best);
    golden_max([&](double ph) { return objective(best_theta, ph); },
               best_phi - dphi, best_phi + dphi, best_phi, best);
    if (best - before < 1e-10) break;
  }

  result.value = best < 0.0 ? 0.0 : best;
  result.best_basis.theta = best_theta;
  result.best_basis.phi = std::fmod(std::fmod(best_phi, 2.0 * kPi) + 2.0 * kPi, 2.0 * kPi);
  return result;
}

double discord_numeric(const CorrelationVector& state, int grid_n) {
  return mutual_information(state) - classical_correlations_numeric(state, grid_n).value;
}

}  // namespace corrdyn
