#ifndef CORRDYN_ERRORS_HPP
#define CORRDYN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace corrdyn {

// Correlation vector outside the Bell tetrahedron (a population < -eps).
struct NonPhysical : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NegativeTime : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Integrator step dt <= 0.
struct BadStep : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Transition-class kappa outside (0, 1) in magnitude.
struct BadKappa : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// separable_class_state c3 outside (0, sqrt(2)-1) in magnitude.
struct OutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// State does not match the channel's constant-discord class pattern.
struct NotInClass : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Dissonance undefined for a pure Bell state (lambda_1 = 1).
struct PureEntangled : std::domain_error {
  using std::domain_error::domain_error;
};

// Run configuration rejected (bad sample count, unknown figure id, ...).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace corrdyn

#endif
