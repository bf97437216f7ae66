#include "corrdyn/random_states.hpp"

#include <algorithm>

namespace corrdyn {

double StateSampler::uniform() {
  // Top 53 bits -> [0, 1); identical on every conforming implementation.
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

CorrelationVector StateSampler::next() {
  // Uniform point of the probability simplex via sorted-uniform gaps.
  double u[3] = {uniform(), uniform(), uniform()};
  std::sort(u, u + 3);
  const double lam_psi_plus = u[0];
  const double lam_psi_minus = u[1] - u[0];
  const double lam_phi_plus = u[2] - u[1];
  const double lam_phi_minus = 1.0 - u[2];

  // Invert the population formulas back to the correlation triple.
  const double dpsi = lam_psi_plus - lam_psi_minus;
  const double dphi = lam_phi_plus - lam_phi_minus;
  return CorrelationVector{dpsi + dphi, dphi - dpsi,
                           lam_psi_plus + lam_psi_minus - lam_phi_plus - lam_phi_minus};
}

}  // namespace corrdyn
