#ifndef CORRDYN_CHANNELS_HPP
#define CORRDYN_CHANNELS_HPP

#include <optional>

#include "corrdyn/bell_state.hpp"

// Local nondissipative Markovian channels acting independently on each qubit,
// with per-qubit dissipator L[rho] = gamma (sigma_j rho sigma_j - rho) / 2.
// j = 1, 2, 3 for the bit, bit-phase, and phase flip channels.
//
// Under any of the three channels a Bell-diagonal state stays Bell-diagonal:
// the coefficient c_j is preserved and the other two decay as exp(-2 gamma t).

namespace corrdyn {

enum class ChannelKind { BitFlip = 1, BitPhaseFlip = 2, PhaseFlip = 3 };

const char* channel_name(ChannelKind kind);  // "bit", "bitphase", "phase"

// Pauli index (1-based) of the coefficient the channel leaves invariant.
int preserved_index(ChannelKind kind);

struct ChannelSpec {
  ChannelKind kind = ChannelKind::PhaseFlip;
  double gamma = 1.0;  // decoherence rate, 1/time, > 0
};

// Constant-discord class of initial states (one per channel): the preserved
// coefficient equals kappa, the dominant decaying coefficient is +-1.
struct TransitionClassParams {
  int sign = +1;       // +1 or -1
  double kappa = 0.0;  // 0 < |kappa| < 1
};

// Closed-form decay laws; the preserved coefficient is untouched and the
// other two are scaled by exp(-2 gamma t). Throws NegativeTime.
CorrelationVector evolve(const CorrelationVector& state, const ChannelSpec& channel,
                         double t);

// d rho / dt = L_A[rho] + L_B[rho]; traceless and Hermitian.
DensityMatrix lindblad_rhs(const DensityMatrix& rho, const ChannelSpec& channel);

// Classical fixed-step RK4 integration of lindblad_rhs on [0, t_end].
// Uses n = ceil(t_end/dt) uniform steps so the endpoint is hit exactly.
// Throws BadStep for dt <= 0, NegativeTime for t_end < 0.
DensityMatrix integrate(const DensityMatrix& rho0, const ChannelSpec& channel,
                        double t_end, double dt);

// The channel's constant-discord family: for the phase flip,
// c = (sign, -sign*kappa, kappa); the other channels use the cyclic index
// permutation carrying sigma_3 onto sigma_j. Throws BadKappa.
CorrelationVector class_state(ChannelKind kind, const TransitionClassParams& params);

// Separable states with constant discord under the phase flip:
// c = (sign*r, -sign*c3*r, c3), r = (1-|c3|)/(1+|c3|). Equals the class
// state evolved to its sudden-death time, hence E = 0 for all t.
// Requires 0 < |c3| < sqrt(2)-1 (throws OutOfRange).
CorrelationVector separable_class_state(int sign, double c3);

// Pattern match against the channel's class family; nullopt when the state
// is not of that form within tol.
std::optional<TransitionClassParams> match_class_state(const CorrelationVector& state,
                                                       ChannelKind kind,
                                                       double tol = 1e-12);

}  // namespace corrdyn

#endif
