#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "corrdyn/channels.hpp"
#include "corrdyn/correlations.hpp"
#include "corrdyn/random_states.hpp"

using namespace corrdyn;

namespace {
const ChannelSpec kPhase{ChannelKind::PhaseFlip, 1.0};
const ChannelSpec kBit{ChannelKind::BitFlip, 1.0};
const ChannelSpec kBitPhase{ChannelKind::BitPhaseFlip, 1.0};
}  // namespace

TEST_CASE("evolve examples") {
  const CorrelationVector c0 = make_state(1.0, -0.6, 0.6);

  SUBCASE("identity at t = 0") {
    const CorrelationVector c = evolve(c0, kPhase, 0.0);
    CHECK(c.c1 == 1.0);
    CHECK(c.c2 == -0.6);
    CHECK(c.c3 == 0.6);
  }
  SUBCASE("phase flip decay to e^{-2 gamma t} = 0.6") {
    const double t = std::log(1.0 / 0.6) / 2.0;
    const CorrelationVector c = evolve(c0, kPhase, t);
    CHECK(c.c1 == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(c.c2 == doctest::Approx(-0.36).epsilon(1e-14));
    CHECK(c.c3 == 0.6);
  }
  SUBCASE("bit flip preserves c1") {
    const CorrelationVector c = evolve(make_state(0.6, 0.3, 0.1), kBit, 0.5);
    CHECK(c.c1 == 0.6);
    CHECK(c.c2 == doctest::Approx(0.3 * std::exp(-1.0)).epsilon(1e-14));
    CHECK(c.c2 == doctest::Approx(0.110363832351).epsilon(1e-11));
    CHECK(c.c3 == doctest::Approx(0.1 * std::exp(-1.0)).epsilon(1e-14));
  }
  SUBCASE("bit-phase flip preserves c2") {
    const CorrelationVector c = evolve(c0, kBitPhase, 0.25);
    CHECK(c.c2 == -0.6);
    CHECK(c.c1 == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  }
  SUBCASE("negative time rejected") {
    CHECK_THROWS_AS(evolve(c0, kPhase, -0.1), NegativeTime);
  }
}

TEST_CASE("evolve semigroup property") {
  StateSampler sampler(3);
  for (int i = 0; i < 200; ++i) {
    const CorrelationVector c = sampler.next();
    const double t1 = 2.0 * sampler.uniform();
    const double t2 = 2.0 * sampler.uniform();
    for (const ChannelSpec& ch : {kPhase, kBit, kBitPhase}) {
      const CorrelationVector two_step = evolve(evolve(c, ch, t1), ch, t2);
      const CorrelationVector one_step = evolve(c, ch, t1 + t2);
      CHECK(std::abs(two_step.c1 - one_step.c1) < 1e-14);
      CHECK(std::abs(two_step.c2 - one_step.c2) < 1e-14);
      CHECK(std::abs(two_step.c3 - one_step.c3) < 1e-14);
    }
  }
}

TEST_CASE("evolve preserves physicality") {
  StateSampler sampler(5);
  for (int i = 0; i < 300; ++i) {
    const CorrelationVector c = sampler.next();
    const double t = 5.0 * sampler.uniform();
    for (const ChannelSpec& ch : {kPhase, kBit, kBitPhase}) {
      const CorrelationVector out = evolve(c, ch, t);
      CHECK_NOTHROW(make_state(out.c1, out.c2, out.c3));
    }
  }
}

TEST_CASE("fixed points: only the preserved component nonzero") {
  const CorrelationVector phase_fixed = evolve(make_state(0, 0, 0.7), kPhase, 3.0);
  CHECK(phase_fixed.c1 == 0.0);
  CHECK(phase_fixed.c2 == 0.0);
  CHECK(phase_fixed.c3 == 0.7);
  const CorrelationVector bit_fixed = evolve(make_state(0.4, 0, 0), kBit, 3.0);
  CHECK(bit_fixed.c1 == 0.4);
  const CorrelationVector bp_fixed = evolve(make_state(0, -0.5, 0), kBitPhase, 3.0);
  CHECK(bp_fixed.c2 == -0.5);
}

TEST_CASE("lindblad_rhs examples") {
  SUBCASE("maximally mixed state is stationary") {
    const DensityMatrix rhs =
        lindblad_rhs(0.25 * DensityMatrix::Identity(), kPhase);
    CHECK(rhs.cwiseAbs().maxCoeff() < 1e-16);
  }
  SUBCASE("Psi+ under phase flip flows toward Psi-") {
    const DensityMatrix rho = bell_projector(BellLabel::PsiPlus);
    const DensityMatrix expected = bell_projector(BellLabel::PsiMinus) -
                                   bell_projector(BellLabel::PsiPlus);
    CHECK((lindblad_rhs(rho, kPhase) - expected).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("correlation-vector derivative pattern at t = 0") {
    const DensityMatrix rho = to_density_matrix(make_state(1.0, -0.6, 0.6));
    const CorrelationVector dc = correlation_vector_from(lindblad_rhs(rho, kPhase));
    CHECK(dc.c1 == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(dc.c2 == doctest::Approx(1.2).epsilon(1e-14));
    CHECK(dc.c3 == doctest::Approx(0.0).epsilon(1e-14));
  }
  SUBCASE("output is traceless and Hermitian") {
    StateSampler sampler(17);
    for (int i = 0; i < 50; ++i) {
      const DensityMatrix rhs = lindblad_rhs(to_density_matrix(sampler.next()), kBit);
      CHECK(std::abs(rhs.trace().real()) < 1e-15);
      CHECK((rhs - rhs.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
    }
  }
}

TEST_CASE("integrate examples") {
  SUBCASE("t_end = 0 returns the initial matrix") {
    const DensityMatrix rho0 = to_density_matrix(make_state(0.3, 0.2, -0.1));
    CHECK((integrate(rho0, kPhase, 0.0, 1e-4) - rho0).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("phase flip matches the decay laws") {
    const DensityMatrix rho0 = to_density_matrix(make_state(1.0, -0.6, 0.6));
    const double t = std::log(1.0 / 0.6) / 2.0;
    const DensityMatrix rho = integrate(rho0, kPhase, t, 1e-4);
    const DensityMatrix expected = to_density_matrix(make_state(0.6, -0.36, 0.6));
    CHECK((rho - expected).cwiseAbs().maxCoeff() < 1e-8);
    CHECK(std::abs(rho.trace().real() - 1.0) < 1e-9);
    CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-9);
  }
  SUBCASE("bit flip on a Bell state") {
    const DensityMatrix rho0 = to_density_matrix(make_state(1.0, -1.0, 1.0));
    const DensityMatrix rho = integrate(rho0, kBit, 1.0, 1e-4);
    const double e2 = std::exp(-2.0);
    const DensityMatrix expected = to_density_matrix(make_state(1.0, -e2, e2));
    CHECK((rho - expected).cwiseAbs().maxCoeff() < 1e-8);
  }
  SUBCASE("bad step rejected") {
    const DensityMatrix rho0 = to_density_matrix(make_state(0, 0, 0));
    CHECK_THROWS_AS(integrate(rho0, kPhase, 1.0, 0.0), BadStep);
    CHECK_THROWS_AS(integrate(rho0, kPhase, 1.0, -1e-3), BadStep);
    CHECK_THROWS_AS(integrate(rho0, kPhase, -1.0, 1e-3), NegativeTime);
  }
}

TEST_CASE("integrate agrees with evolve across channels and times") {
  StateSampler sampler(23);
  for (int i = 0; i < 10; ++i) {
    const CorrelationVector c = sampler.next();
    for (const ChannelSpec& ch : {kPhase, kBit, kBitPhase}) {
      DensityMatrix rho = to_density_matrix(c);
      double t_prev = 0.0;
      for (double t : {0.1, 0.5, 1.0}) {
        rho = integrate(rho, ch, t - t_prev, 1e-4);
        t_prev = t;
        const DensityMatrix expected = to_density_matrix(evolve(c, ch, t));
        CHECK((rho - expected).cwiseAbs().maxCoeff() < 1e-8);
      }
    }
  }
}

TEST_CASE("class_state examples") {
  SUBCASE("phase flip, sign +, kappa = 0.6 (the fig1 state)") {
    const CorrelationVector c = class_state(ChannelKind::PhaseFlip, {+1, 0.6});
    CHECK(c.c1 == 1.0);
    CHECK(c.c2 == -0.6);
    CHECK(c.c3 == 0.6);
  }
  SUBCASE("phase flip, sign +, kappa = 0.3 (the fig2 state)") {
    const CorrelationVector c = class_state(ChannelKind::PhaseFlip, {+1, 0.3});
    CHECK(c.c1 == 1.0);
    CHECK(c.c2 == -0.3);
    CHECK(c.c3 == 0.3);
  }
  SUBCASE("bit flip puts kappa in the c1 slot") {
    const CorrelationVector c = class_state(ChannelKind::BitFlip, {+1, 0.6});
    CHECK(c.c1 == 0.6);
    CHECK(c.c2 == 1.0);
    CHECK(c.c3 == -0.6);
  }
  SUBCASE("bit-phase flip puts kappa in the c2 slot") {
    const CorrelationVector c = class_state(ChannelKind::BitPhaseFlip, {+1, 0.6});
    CHECK(c.c2 == 0.6);
    CHECK(c.c3 == 1.0);
    CHECK(c.c1 == -0.6);
  }
  SUBCASE("bad kappa rejected") {
    CHECK_THROWS_AS(class_state(ChannelKind::PhaseFlip, {+1, 0.0}), BadKappa);
    CHECK_THROWS_AS(class_state(ChannelKind::PhaseFlip, {+1, 1.0}), BadKappa);
    CHECK_THROWS_AS(class_state(ChannelKind::PhaseFlip, {-1, -1.2}), BadKappa);
  }
}

TEST_CASE("class states have constant discord before the transition") {
  // Resolves the sign-pairing question: under the cyclic permutation both
  // signs of every channel's family keep the discord flat on [0, tbar).
  for (ChannelKind kind : {ChannelKind::BitFlip, ChannelKind::BitPhaseFlip,
                           ChannelKind::PhaseFlip}) {
    const ChannelSpec ch{kind, 1.0};
    for (int sign : {+1, -1}) {
      for (double kappa : {0.3, 0.6}) {
        const CorrelationVector c0 = class_state(kind, {sign, kappa});
        const double tbar = -std::log(kappa) / 2.0;
        const double d0 = discord(c0);
        for (int i = 0; i <= 20; ++i) {
          const double t = tbar * (1.0 - 1e-6) * i / 20;
          CHECK(discord(evolve(c0, ch, t)) == doctest::Approx(d0).epsilon(1e-10));
        }
      }
    }
  }
}

TEST_CASE("match_class_state recognizes class members only") {
  CHECK(match_class_state(make_state(1.0, -0.6, 0.6), ChannelKind::PhaseFlip));
  CHECK(match_class_state(make_state(-1.0, 0.6, 0.6), ChannelKind::PhaseFlip));
  CHECK_FALSE(match_class_state(make_state(1.0, -0.6, 0.6), ChannelKind::BitFlip));
  CHECK_FALSE(match_class_state(make_state(0.5, -0.3, 0.3), ChannelKind::PhaseFlip));
  CHECK_FALSE(match_class_state(make_state(1.0, -1.0, 1.0), ChannelKind::PhaseFlip));
  const auto params = match_class_state(make_state(0.6, 1.0, -0.6), ChannelKind::BitFlip);
  REQUIRE(params);
  CHECK(params->sign == +1);
  CHECK(params->kappa == 0.6);
}

TEST_CASE("separable_class_state examples") {
  SUBCASE("sign +, c3 = 0.3") {
    const CorrelationVector c = separable_class_state(+1, 0.3);
    CHECK(c.c1 == doctest::Approx(0.538461538462).epsilon(1e-12));
    CHECK(c.c2 == doctest::Approx(-0.161538461538).epsilon(1e-12));
    CHECK(c.c3 == 0.3);
  }
  SUBCASE("sign -, c3 = 0.3 flips both decaying coefficients") {
    const CorrelationVector c = separable_class_state(-1, 0.3);
    CHECK(c.c1 == doctest::Approx(-0.538461538462).epsilon(1e-12));
    CHECK(c.c2 == doctest::Approx(0.161538461538).epsilon(1e-12));
    CHECK(c.c3 == 0.3);
  }
  SUBCASE("c3 beyond sqrt(2)-1 rejected") {
    CHECK_THROWS_AS(separable_class_state(+1, 0.5), OutOfRange);
    CHECK_THROWS_AS(separable_class_state(+1, 0.0), OutOfRange);
    CHECK_THROWS_AS(separable_class_state(-1, -0.45), OutOfRange);
  }
  SUBCASE("equals the class state evolved to its sudden-death time") {
    for (int sign : {+1, -1}) {
      const CorrelationVector direct = separable_class_state(sign, 0.3);
      const double ts = -std::log(0.7 / 1.3) / 2.0;
      const CorrelationVector evolved =
          evolve(class_state(ChannelKind::PhaseFlip, {sign, 0.3}), kPhase, ts);
      CHECK(direct.c1 == doctest::Approx(evolved.c1).epsilon(1e-14));
      CHECK(direct.c2 == doctest::Approx(evolved.c2).epsilon(1e-14));
      CHECK(direct.c3 == doctest::Approx(evolved.c3).epsilon(1e-14));
    }
  }
}

TEST_CASE("separable family: zero entanglement, constant discord") {
  for (int sign : {+1, -1}) {
    for (double c3 : {0.1, 0.3, -0.25}) {
      const CorrelationVector c0 = separable_class_state(sign, c3);
      const double r = (1.0 - std::abs(c3)) / (1.0 + std::abs(c3));
      const double tbar = std::log(r / std::abs(c3)) / 2.0;
      const double d0 = discord(c0);
      for (int i = 0; i <= 20; ++i) {
        CHECK(entanglement_re(evolve(c0, kPhase, 3.0 * i / 20)) == 0.0);
        const double t = tbar * (1.0 - 1e-6) * i / 20;
        CHECK(discord(evolve(c0, kPhase, t)) == doctest::Approx(d0).epsilon(1e-10));
      }
    }
  }
}
