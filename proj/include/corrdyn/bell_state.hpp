#ifndef CORRDYN_BELL_STATE_HPP
#define CORRDYN_BELL_STATE_HPP

#include <array>
#include <Eigen/Dense>

#include "corrdyn/errors.hpp"

// Two-qubit states with maximally mixed marginals (Bell-diagonal states),
// represented by the correlation triple (c1, c2, c3):
//
//   rho = (1/4) (I + sum_i c_i sigma_i (x) sigma_i)
//
// Computational basis order is |00>, |01>, |10>, |11> repository-wide.
// Bell basis: |Psi+-> = (|00> +- |11>)/sqrt(2), |Phi+-> = (|01> +- |10>)/sqrt(2).

namespace corrdyn {

using DensityMatrix = Eigen::Matrix4cd;

// Tolerance absorbing rounding in user-supplied coefficients without
// admitting meaningfully negative populations.
inline constexpr double kPhysicalEps = 1e-12;

// Enumerator order is the deterministic tie-break order for sorted spectra.
enum class BellLabel { PsiPlus = 0, PhiPlus = 1, PhiMinus = 2, PsiMinus = 3 };

const char* label_name(BellLabel label);  // "Psi+", "Phi+", "Phi-", "Psi-"

struct CorrelationVector {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

// Populations on the four Bell states.
struct BellSpectrum {
  double psi_plus = 0.0;
  double psi_minus = 0.0;
  double phi_plus = 0.0;
  double phi_minus = 0.0;

  double operator[](BellLabel label) const;
  double& operator[](BellLabel label);
};

struct SpectrumEntry {
  double lambda;
  BellLabel label;
};

// True iff every induced Bell population is >= -eps.
bool is_physical(double c1, double c2, double c3, double eps = kPhysicalEps);

// Validated constructor; throws NonPhysical for triples outside the Bell
// tetrahedron (all reals are accepted for inspection).
CorrelationVector make_state(double c1, double c2, double c3);

// lam_Psi+- = [1 +- c1 -+ c2 + c3]/4,  lam_Phi+- = [1 +- c1 +- c2 - c3]/4.
// Populations within [-kPhysicalEps, 0) are clamped to 0.
BellSpectrum bell_spectrum(const CorrelationVector& state);

// Explicit 4x4 density matrix of the state.
DensityMatrix to_density_matrix(const CorrelationVector& state);

// Correlation triple read back from an arbitrary 4x4 matrix (not validated).
CorrelationVector correlation_vector_from(const DensityMatrix& rho);

// |k><k| for the four Bell states.
DensityMatrix bell_projector(BellLabel label);

// Non-increasing by population; exact ties emit in the fixed label order
// Psi+, Phi+, Phi-, Psi- so downstream output is reproducible.
std::array<SpectrumEntry, 4> sorted_spectrum(const BellSpectrum& spectrum);

}  // namespace corrdyn

#endif
