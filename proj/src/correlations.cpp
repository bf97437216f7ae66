#include "corrdyn/correlations.hpp"

#include <cmath>
#include <limits>

namespace corrdyn {

namespace {

constexpr double kClampTol = 1e-12;

// x log2 x with the 0 log2 0 = 0 convention (and guard for tiny negatives).
double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double chi_of(const CorrelationVector& state) {
  return std::max({std::abs(state.c1), std::abs(state.c2), std::abs(state.c3)});
}

// Magnitudes split into the channel's decaying pair and preserved coefficient.
struct ChiSplit {
  double decaying;   // largest initial magnitude among the two decaying ones
  double preserved;
};

ChiSplit chi_split(const CorrelationVector& state, ChannelKind kind) {
  const double mags[3] = {std::abs(state.c1), std::abs(state.c2), std::abs(state.c3)};
  const int keep = preserved_index(kind);
  ChiSplit out{0.0, mags[keep - 1]};
  for (int i = 1; i <= 3; ++i) {
    if (i != keep) out.decaying = std::max(out.decaying, mags[i - 1]);
  }
  return out;
}

}  // namespace

double entropy(const BellSpectrum& spectrum) {
  const double s = -(xlog2x(spectrum.psi_plus) + xlog2x(spectrum.psi_minus) +
                     xlog2x(spectrum.phi_plus) + xlog2x(spectrum.phi_minus));
  return s < 0.0 ? 0.0 : s;
}

double mutual_information(const CorrelationVector& state) {
  const BellSpectrum s = bell_spectrum(state);
  const double value = 2.0 - entropy(s);
  return value < 0.0 ? 0.0 : value;
}

double classical_correlations_from_chi(double chi) {
  const double a = (1.0 - chi) / 2.0;
  const double b = (1.0 + chi) / 2.0;
  double value = 0.0;
  if (a > 0.0) value += a * std::log2(2.0 * a);
  if (b > 0.0) value += b * std::log2(2.0 * b);
  return value < 0.0 ? 0.0 : value;
}

double classical_correlations(const CorrelationVector& state) {
  return classical_correlations_from_chi(chi_of(state));
}

double discord(const CorrelationVector& state) {
  const double d = mutual_information(state) - classical_correlations(state);
  return (d < 0.0 && d > -kClampTol) ? 0.0 : d;
}

MutualInformationSplit mutual_information_split(const CorrelationVector& initial,
                                                const ChannelSpec& channel, double t) {
  const auto params = match_class_state(initial, channel.kind);
  if (!params) {
    throw NotInClass("mutual_information_split: initial state is not in the "
                     "channel's constant-discord class");
  }
  if (!(t >= 0.0)) throw NegativeTime("mutual_information_split: t must be >= 0");
  const double akappa = std::abs(params->kappa);
  const double decayed = std::exp(-2.0 * channel.gamma * t);  // |c_dominant(t)|
  MutualInformationSplit split;
  split.classical_part = classical_correlations_from_chi(decayed);
  split.quantum_part = classical_correlations_from_chi(akappa);
  split.past_transition = decayed < akappa;
  return split;
}

ClassicalStateDescriptor closest_classical(const BellSpectrum& spectrum) {
  const auto sorted = sorted_spectrum(spectrum);
  ClassicalStateDescriptor d;
  d.q = sorted[0].lambda + sorted[1].lambda;
  d.pair_high = {sorted[0].label, sorted[1].label};
  d.pair_low = {sorted[2].label, sorted[3].label};
  return d;
}

ClassicalStateDescriptor closest_classical(const CorrelationVector& state) {
  return closest_classical(bell_spectrum(state));
}

BellSpectrum classical_spectrum(const ClassicalStateDescriptor& descriptor) {
  BellSpectrum s;
  s[descriptor.pair_high[0]] = descriptor.q / 2.0;
  s[descriptor.pair_high[1]] = descriptor.q / 2.0;
  s[descriptor.pair_low[0]] = (1.0 - descriptor.q) / 2.0;
  s[descriptor.pair_low[1]] = (1.0 - descriptor.q) / 2.0;
  return s;
}

double relative_entropy(const BellSpectrum& rho, const BellSpectrum& sigma) {
  double sum = 0.0;
  for (BellLabel label : {BellLabel::PsiPlus, BellLabel::PhiPlus,
                          BellLabel::PhiMinus, BellLabel::PsiMinus}) {
    const double p = rho[label];
    if (p <= 0.0) continue;  // 0 log2(0/s) = 0, including s = 0
    const double s = sigma[label];
    if (s <= 0.0) return std::numeric_limits<double>::infinity();
    sum += p * (std::log2(p) - std::log2(s));
  }
  return sum < 0.0 ? 0.0 : sum;
}

double entanglement_re(const CorrelationVector& state) {
  const double lam1 = sorted_spectrum(bell_spectrum(state))[0].lambda;
  if (lam1 <= 0.5) return 0.0;
  const double e = 1.0 + xlog2x(lam1) + xlog2x(1.0 - lam1);
  return e < 0.0 ? 0.0 : e;
}

std::optional<double> sudden_death_time(const CorrelationVector& state,
                                        const ChannelSpec& channel) {
  auto lam1_at = [&](double t) {
    return sorted_spectrum(bell_spectrum(evolve(state, channel, t)))[0].lambda;
  };
  if (lam1_at(0.0) <= 0.5) return 0.0;

  if (const auto params = match_class_state(state, channel.kind)) {
    const double ak = std::abs(params->kappa);
    return -std::log((1.0 - ak) / (1.0 + ak)) / (2.0 * channel.gamma);
  }

  // lam1(t) is a max of curves A + B exp(-2 gamma t) with B >= 0, hence
  // monotone nonincreasing with limit (1 + |c_preserved|)/4. When that limit
  // is 1/2 (Bell-like states) the threshold is only reached asymptotically.
  const double limit = (1.0 + chi_split(state, channel.kind).preserved) / 4.0;
  if (limit >= 0.5) return std::nullopt;
  double lo = 0.0;
  double hi = 50.0 / channel.gamma;
  if (lam1_at(hi) > 0.5) return std::nullopt;
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (lam1_at(mid) <= 0.5) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<double> transition_time(const CorrelationVector& state,
                                      const ChannelSpec& channel) {
  const ChiSplit chi = chi_split(state, channel.kind);
  if (!(chi.decaying > chi.preserved && chi.preserved > 0.0)) return std::nullopt;
  return std::log(chi.decaying / chi.preserved) / (2.0 * channel.gamma);
}

double dissonance(const CorrelationVector& state) {
  const auto sorted = sorted_spectrum(bell_spectrum(state));
  const double lam1 = sorted[0].lambda;
  if (lam1 <= 0.5) {
    // Separable: the state is its own closest separable state, so the
    // distance to the classical set is just the discord.
    return discord(state);
  }
  if (1.0 - lam1 < 1e-15) {
    throw PureEntangled("dissonance: undefined for a pure Bell state (lambda_1 = 1)");
  }
  // Closest separable state: p1 = 1/2, p_i = lam_i / (2 (1 - lam1)).
  const double denom = 2.0 * (1.0 - lam1);
  const double p1 = 0.5;
  const double p2 = sorted[1].lambda / denom;
  const double p3 = sorted[2].lambda / denom;
  const double p4 = sorted[3].lambda / denom;
  const double q = p1 + p2;  // p1 = 1/2 >= every p_i, so q = two largest
  const double value = 1.0 + xlog2x(p1) + xlog2x(p2) + xlog2x(p3) + xlog2x(p4) -
                       xlog2x(q) - xlog2x(1.0 - q);
  return value < 0.0 ? 0.0 : value;
}

CorrelationReport full_report(const CorrelationVector& state) {
  CorrelationReport report;
  report.mutual_info = mutual_information(state);
  report.classical = classical_correlations(state);
  report.discord = corrdyn::discord(state);
  report.entanglement = entanglement_re(state);
  try {
    report.dissonance = corrdyn::dissonance(state);
  } catch (const PureEntangled&) {
    report.dissonance = std::nullopt;
  }
  return report;
}

}  // namespace corrdyn
