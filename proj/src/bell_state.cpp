#include "corrdyn/bell_state.hpp"

#include <algorithm>
#include <sstream>

namespace corrdyn {

const char* label_name(BellLabel label) {
  switch (label) {
    case BellLabel::PsiPlus: return "Psi+";
    case BellLabel::PhiPlus: return "Phi+";
    case BellLabel::PhiMinus: return "Phi-";
    case BellLabel::PsiMinus: return "Psi-";
  }
  return "?";
}

double BellSpectrum::operator[](BellLabel label) const {
  switch (label) {
    case BellLabel::PsiPlus: return psi_plus;
    case BellLabel::PhiPlus: return phi_plus;
    case BellLabel::PhiMinus: return phi_minus;
    case BellLabel::PsiMinus: return psi_minus;
  }
  return 0.0;
}

double& BellSpectrum::operator[](BellLabel label) {
  switch (label) {
    case BellLabel::PsiPlus: return psi_plus;
    case BellLabel::PhiPlus: return phi_plus;
    case BellLabel::PhiMinus: return phi_minus;
    case BellLabel::PsiMinus: return psi_minus;
  }
  return psi_plus;
}

namespace {

// Raw populations, no clamping; order Psi+, Psi-, Phi+, Phi-.
std::array<double, 4> raw_spectrum(double c1, double c2, double c3) {
  return {(1.0 + c1 - c2 + c3) / 4.0, (1.0 - c1 + c2 + c3) / 4.0,
          (1.0 + c1 + c2 - c3) / 4.0, (1.0 - c1 - c2 - c3) / 4.0};
}

}  // namespace

bool is_physical(double c1, double c2, double c3, double eps) {
  for (double lam : raw_spectrum(c1, c2, c3)) {
    if (!(lam >= -eps)) return false;  // NaN fails too
  }
  return true;
}

CorrelationVector make_state(double c1, double c2, double c3) {
  if (!is_physical(c1, c2, c3)) {
    std::ostringstream msg;
    msg << "correlation vector (" << c1 << ", " << c2 << ", " << c3
        << ") lies outside the Bell tetrahedron";
    throw NonPhysical(msg.str());
  }
  return CorrelationVector{c1, c2, c3};
}

BellSpectrum bell_spectrum(const CorrelationVector& state) {
  const auto lam = raw_spectrum(state.c1, state.c2, state.c3);
  auto clamp0 = [](double v) { return v < 0.0 ? 0.0 : v; };
  BellSpectrum s;
  s.psi_plus = clamp0(lam[0]);
  s.psi_minus = clamp0(lam[1]);
  s.phi_plus = clamp0(lam[2]);
  s.phi_minus = clamp0(lam[3]);
  return s;
}

DensityMatrix to_density_matrix(const CorrelationVector& state) {
  const double dpar = (1.0 + state.c3) / 4.0;   // |00>, |11> diagonal
  const double dant = (1.0 - state.c3) / 4.0;   // |01>, |10> diagonal
  const double outer = (state.c1 - state.c2) / 4.0;  // <00|rho|11>
  const double inner = (state.c1 + state.c2) / 4.0;  // <01|rho|10>
  DensityMatrix rho = DensityMatrix::Zero();
  rho(0, 0) = dpar;
  rho(1, 1) = dant;
  rho(2, 2) = dant;
  rho(3, 3) = dpar;
  rho(0, 3) = rho(3, 0) = outer;
  rho(1, 2) = rho(2, 1) = inner;
  return rho;
}

CorrelationVector correlation_vector_from(const DensityMatrix& rho) {
  const double outer = rho(0, 3).real();
  const double inner = rho(1, 2).real();
  CorrelationVector c;
  c.c1 = 2.0 * (outer + inner);
  c.c2 = 2.0 * (inner - outer);
  c.c3 = rho(0, 0).real() - rho(1, 1).real() - rho(2, 2).real() + rho(3, 3).real();
  return c;
}

DensityMatrix bell_projector(BellLabel label) {
  Eigen::Vector4cd ket = Eigen::Vector4cd::Zero();
  const double isq2 = 1.0 / std::sqrt(2.0);
  switch (label) {
    case BellLabel::PsiPlus:
      ket(0) = isq2;
      ket(3) = isq2;
      break;
    case BellLabel::PsiMinus:
      ket(0) = isq2;
      ket(3) = -isq2;
      break;
    case BellLabel::PhiPlus:
      ket(1) = isq2;
      ket(2) = isq2;
      break;
    case BellLabel::PhiMinus:
      ket(1) = isq2;
      ket(2) = -isq2;
      break;
  }
  return ket * ket.adjoint();
}

std::array<SpectrumEntry, 4> sorted_spectrum(const BellSpectrum& spectrum) {
  // Seed in tie-break order; stable sort keeps that order among equals.
  std::array<SpectrumEntry, 4> entries = {
      SpectrumEntry{spectrum.psi_plus, BellLabel::PsiPlus},
      SpectrumEntry{spectrum.phi_plus, BellLabel::PhiPlus},
      SpectrumEntry{spectrum.phi_minus, BellLabel::PhiMinus},
      SpectrumEntry{spectrum.psi_minus, BellLabel::PsiMinus}};
  std::stable_sort(entries.begin(), entries.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) {
                     return a.lambda > b.lambda;
                   });
  return entries;
}

}  // namespace corrdyn
