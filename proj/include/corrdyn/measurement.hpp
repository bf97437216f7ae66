#ifndef CORRDYN_MEASUREMENT_HPP
#define CORRDYN_MEASUREMENT_HPP

#include "corrdyn/bell_state.hpp"

// Classical correlations by explicit maximization over von Neumann
// measurements on qubit B. This is the variational definition and serves as
// the independent oracle for the closed form in `correlations`. The
// machinery works on explicit 4x4 matrices and partial traces, deliberately
// not reusing the Bell-diagonal shortcuts it is meant to check.

namespace corrdyn {

// |theta_1> = cos(theta)|0> + e^{i phi} sin(theta)|1>
// |theta_2> = e^{-i phi} sin(theta)|0> - cos(theta)|1>
struct MeasurementBasis {
  double theta = 0.0;  // [0, pi/2]
  double phi = 0.0;    // [0, 2 pi)
};

// S(rho_AB | {Pi_k}) = sum_k p_k S(rho_k) with Pi_k on qubit B and
// rho_k = Tr_B(Pi_k rho Pi_k)/p_k. For Bell-diagonal states p_1 = p_2 = 1/2.
double conditional_entropy(const CorrelationVector& state, const MeasurementBasis& basis);

// Same measurement applied to qubit A instead (symmetry property check).
double conditional_entropy_on_a(const CorrelationVector& state,
                                const MeasurementBasis& basis);

struct OptimizationResult {
  double value = 0.0;        // max over bases of 1 - conditional entropy
  double grid_value = 0.0;   // best value seen on the raw grid, pre-refinement
  MeasurementBasis best_basis;
  long evaluations = 0;
};

// Grid over (theta, phi) then coordinate descent (golden section per angle)
// refined to 1e-10 in value. grid_n >= 8.
OptimizationResult classical_correlations_numeric(const CorrelationVector& state,
                                                  int grid_n = 32);

// mutual_information - classical_correlations_numeric(...).value
double discord_numeric(const CorrelationVector& state, int grid_n = 32);

}  // namespace corrdyn

#endif
