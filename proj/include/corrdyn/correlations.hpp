#ifndef CORRDYN_CORRELATIONS_HPP
#define CORRDYN_CORRELATIONS_HPP

#include <array>
#include <optional>

#include "corrdyn/bell_state.hpp"
#include "corrdyn/channels.hpp"

// Closed-form correlation measures for Bell-diagonal states. All entropies
// are in bits (log2) with the convention 0 log2 0 = 0.

namespace corrdyn {

// Von Neumann entropy of the spectrum, in [0, 2].
double entropy(const BellSpectrum& spectrum);

// Total correlations: 2 + sum_k lam_k log2 lam_k (the marginals are
// maximally mixed, so S(rho_A) = S(rho_B) = 1).
double mutual_information(const CorrelationVector& state);

// The classical-correlations closed form as a function of
// chi = max(|c1|,|c2|,|c3|):
//   f(chi) = (1-chi)/2 log2(1-chi) + (1+chi)/2 log2(1+chi).
double classical_correlations_from_chi(double chi);

// f(chi) of the state; maximal one-sided projective-measurement information.
double classical_correlations(const CorrelationVector& state);

// Quantum discord = mutual information - classical correlations,
// clamped to 0 when within 1e-12 below 0 (floating-point cancellation).
double discord(const CorrelationVector& state);

// Mutual information of an evolved class state splits into a frozen term and
// a decaying term: I(t) = f(kappa) + f(exp(-2 gamma t)). Before the
// transition these are (quantum, classical); after it the roles swap and
// past_transition is set. Throws NotInClass when the initial state is not in
// the channel's class family.
struct MutualInformationSplit {
  double classical_part;  // f(c_dominant(t))
  double quantum_part;    // f(kappa)
  bool past_transition;
};
MutualInformationSplit mutual_information_split(const CorrelationVector& initial,
                                                const ChannelSpec& channel, double t);

// Closest classical state: pairwise-equal populations q/2 on the two most
// populated Bell states and (1-q)/2 on the other two.
struct ClassicalStateDescriptor {
  double q;
  std::array<BellLabel, 2> pair_high;
  std::array<BellLabel, 2> pair_low;
};
ClassicalStateDescriptor closest_classical(const BellSpectrum& spectrum);
ClassicalStateDescriptor closest_classical(const CorrelationVector& state);

// The descriptor expanded back into Bell populations.
BellSpectrum classical_spectrum(const ClassicalStateDescriptor& descriptor);

// Relative entropy sum_k rho_k (log2 rho_k - log2 sigma_k) between two states
// diagonal in the same (Bell) basis. Support mismatch (rho_k > 0 where
// sigma_k = 0) yields +infinity, reported as a value, not an error.
double relative_entropy(const BellSpectrum& rho, const BellSpectrum& sigma);

// Relative entropy of entanglement. 0 for lam_1 <= 1/2, else
// 1 + lam_1 log2 lam_1 + (1-lam_1) log2(1-lam_1).
double entanglement_re(const CorrelationVector& state);

// First instant with lam_1(t) <= 1/2 (entanglement stays zero afterwards).
// Class states use the closed form -ln[(1-|kappa|)/(1+|kappa|)]/(2 gamma);
// general states are bisected on [0, 50/gamma] to 1e-10 relative. Returns
// 0 if already separable, nullopt if lam_1 stays above 1/2 on the horizon.
std::optional<double> sudden_death_time(const CorrelationVector& state,
                                        const ChannelSpec& channel);

// Instant where the dominant coefficient magnitude switches from a decaying
// one to the preserved one: ln(chi_d/chi_p)/(2 gamma) when
// chi_d > chi_p > 0, else nullopt (no crossing; this includes the
// equal-magnitude case). For class states this is -ln(|kappa|)/(2 gamma).
std::optional<double> transition_time(const CorrelationVector& state,
                                      const ChannelSpec& channel);

// Dissonance: relative entropy from the closest separable state to that
// state's own closest classical state. For lam_1 <= 1/2 the state is its own
// closest separable state and the value equals the discord. Throws
// PureEntangled at lam_1 = 1 where the construction is undefined.
double dissonance(const CorrelationVector& state);

// All five measures; mutual_info = classical + discord by construction.
// dissonance is absent for pure Bell states.
struct CorrelationReport {
  double mutual_info;
  double classical;
  double discord;
  double entanglement;
  std::optional<double> dissonance;
};
CorrelationReport full_report(const CorrelationVector& state);

}  // namespace corrdyn

#endif
