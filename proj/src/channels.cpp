#include "corrdyn/channels.hpp"

#include <cmath>
#include <sstream>

namespace corrdyn {

const char* channel_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::BitFlip: return "bit";
    case ChannelKind::BitPhaseFlip: return "bitphase";
    case ChannelKind::PhaseFlip: return "phase";
  }
  return "?";
}

int preserved_index(ChannelKind kind) { return static_cast<int>(kind); }

namespace {

double& component(CorrelationVector& c, int index) {
  switch (index) {
    case 1: return c.c1;
    case 2: return c.c2;
    default: return c.c3;
  }
}

double component(const CorrelationVector& c, int index) {
  switch (index) {
    case 1: return c.c1;
    case 2: return c.c2;
    default: return c.c3;
  }
}

int cyclic_next(int index) { return index % 3 + 1; }

Eigen::Matrix2cd pauli(int j) {
  Eigen::Matrix2cd s;
  const std::complex<double> i(0.0, 1.0);
  switch (j) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

DensityMatrix kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  DensityMatrix out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

}  // namespace

CorrelationVector evolve(const CorrelationVector& state, const ChannelSpec& channel,
                         double t) {
  if (!(t >= 0.0)) throw NegativeTime("evolve: t must be >= 0");
  const double decay = std::exp(-2.0 * channel.gamma * t);
  const int keep = preserved_index(channel.kind);
  CorrelationVector out = state;
  for (int i = 1; i <= 3; ++i) {
    if (i != keep) component(out, i) *= decay;
  }
  return out;
}

DensityMatrix lindblad_rhs(const DensityMatrix& rho, const ChannelSpec& channel) {
  const int j = preserved_index(channel.kind);
  const Eigen::Matrix2cd s = pauli(j);
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  const DensityMatrix sa = kron2(s, id);
  const DensityMatrix sb = kron2(id, s);
  return channel.gamma / 2.0 * (sa * rho * sa - rho) +
         channel.gamma / 2.0 * (sb * rho * sb - rho);
}

DensityMatrix integrate(const DensityMatrix& rho0, const ChannelSpec& channel,
                        double t_end, double dt) {
  if (!(dt > 0.0)) throw BadStep("integrate: dt must be > 0");
  if (!(t_end >= 0.0)) throw NegativeTime("integrate: t_end must be >= 0");
  if (t_end == 0.0) return rho0;

  const long n = static_cast<long>(std::ceil(t_end / dt - 1e-12));
  const double h = t_end / static_cast<double>(std::max(n, 1L));

  // The generator is time independent; precompute the flip operators.
  const Eigen::Matrix2cd s = pauli(preserved_index(channel.kind));
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  const DensityMatrix sa = kron2(s, id);
  const DensityMatrix sb = kron2(id, s);
  const double half_gamma = channel.gamma / 2.0;
  auto rhs = [&](const DensityMatrix& r) -> DensityMatrix {
    return half_gamma * (sa * r * sa - r) + half_gamma * (sb * r * sb - r);
  };

  DensityMatrix rho = rho0;
  DensityMatrix k1, k2, k3, k4;
  for (long step = 0; step < std::max(n, 1L); ++step) {
    k1 = rhs(rho);
    k2 = rhs(rho + (h / 2.0) * k1);
    k3 = rhs(rho + (h / 2.0) * k2);
    k4 = rhs(rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return rho;
}

CorrelationVector class_state(ChannelKind kind, const TransitionClassParams& params) {
  const double akappa = std::abs(params.kappa);
  if (!(akappa > 0.0 && akappa < 1.0)) {
    std::ostringstream msg;
    msg << "class_state: |kappa| must lie in (0, 1), got " << params.kappa;
    throw BadKappa(msg.str());
  }
  const double sign = params.sign < 0 ? -1.0 : 1.0;
  const int keep = preserved_index(kind);
  const int big = cyclic_next(keep);
  const int other = cyclic_next(big);
  CorrelationVector c;
  component(c, keep) = params.kappa;
  component(c, big) = sign;
  component(c, other) = -sign * params.kappa;
  return make_state(c.c1, c.c2, c.c3);
}

CorrelationVector separable_class_state(int sign, double c3) {
  const double ac3 = std::abs(c3);
  if (!(ac3 > 0.0 && ac3 < std::sqrt(2.0) - 1.0)) {
    std::ostringstream msg;
    msg << "separable_class_state: |c3| must lie in (0, sqrt(2)-1), got " << c3;
    throw OutOfRange(msg.str());
  }
  const double s = sign < 0 ? -1.0 : 1.0;
  const double r = (1.0 - ac3) / (1.0 + ac3);
  return make_state(s * r, -s * c3 * r, c3);
}

std::optional<TransitionClassParams> match_class_state(const CorrelationVector& state,
                                                       ChannelKind kind, double tol) {
  const int keep = preserved_index(kind);
  const int big = cyclic_next(keep);
  const int other = cyclic_next(big);
  const double kappa = component(state, keep);
  const double dominant = component(state, big);
  const double paired = component(state, other);
  if (std::abs(std::abs(dominant) - 1.0) > tol) return std::nullopt;
  const double sign = dominant < 0 ? -1.0 : 1.0;
  if (std::abs(paired + sign * kappa) > tol) return std::nullopt;
  const double akappa = std::abs(kappa);
  if (!(akappa > 0.0 && akappa < 1.0)) return std::nullopt;
  return TransitionClassParams{sign < 0 ? -1 : +1, kappa};
}

}  // namespace corrdyn
