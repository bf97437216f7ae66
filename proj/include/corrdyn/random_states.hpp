#ifndef CORRDYN_RANDOM_STATES_HPP
#define CORRDYN_RANDOM_STATES_HPP

#include <cstdint>
#include <random>

#include "corrdyn/bell_state.hpp"

namespace corrdyn {

// Seeded sampler of valid Bell-diagonal states, uniform over the tetrahedron
// (Bell populations drawn uniformly from the probability simplex). Uses
// mt19937_64 with explicit bit extraction so streams are identical across
// platforms and standard libraries.
class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

  CorrelationVector next();

  // Uniform double in [0, 1) with 53 random bits.
  double uniform();

 private:
  std::mt19937_64 rng_;
};

}  // namespace corrdyn

#endif
