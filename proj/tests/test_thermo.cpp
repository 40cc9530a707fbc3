#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "otto/thermo.hpp"

using otto::EngineParams;
using otto::OperatingMode;
using otto::Velocity;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double direct_doppler(double v) { return std::sqrt(1.0 - v * v) * std::log1p(2.0 * v / (1.0 - v)) / (2.0 * v); }

EngineParams params(double wc, double wh, double bc, double bh, double v, double lam) {
  return EngineParams{.omega_c = wc, .omega_h = wh, .beta_c = bc, .beta_h = bh, .v = Velocity(v), .lam = lam};
}

}  // namespace

TEST(Velocity, AcceptsHalfOpenUnitInterval) {
  EXPECT_NO_THROW(Velocity(0.0));
  EXPECT_NO_THROW(Velocity(0.999999));
  EXPECT_THROW(Velocity(1.0), std::domain_error);
  EXPECT_THROW(Velocity(-0.1), std::domain_error);
  EXPECT_THROW(Velocity(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST(Velocity, GammaAndRapidity) {
  const Velocity v(0.6);
  EXPECT_DOUBLE_EQ(v.gamma(), 1.25);
  EXPECT_NEAR(v.rapidity(), std::atanh(0.6), 1e-16);
  EXPECT_EQ(Velocity::at_rest().rapidity(), 0.0);
}

TEST(DopplerFactor, FrozenValues) {
  EXPECT_LT(rel(otto::doppler_factor(Velocity(0.9)), 0.71302844197825425691), 1e-15);
  EXPECT_LT(rel(otto::doppler_factor(Velocity(0.85)), 0.77849359339873515177), 1e-15);
  EXPECT_LT(rel(otto::doppler_factor(Velocity(0.5)), 0.95142615089634596578), 1e-15);
  EXPECT_LT(rel(otto::doppler_factor(Velocity(0.01)), 0.99998333241660535262), 1e-15);
  EXPECT_EQ(otto::doppler_factor(Velocity(0.0)), 1.0);
}

TEST(DopplerFactor, SeriesBranchMeetsDirectFormula) {
  for (double v : {1e-4, 5e-4, 9.99e-4, 1e-3, 1.001e-3, 1e-2}) {
    EXPECT_LT(rel(otto::doppler_factor(Velocity(v)), direct_doppler(v)), 1e-14) << "v = " << v;
  }
}

TEST(DopplerFactor, StrictlyDecreasingOnGrid) {
  double prev = otto::doppler_factor(Velocity(0.0));
  for (int k = 1; k <= 99; ++k) {
    const double f = otto::doppler_factor(Velocity(0.01 * k));
    EXPECT_LT(f, prev) << "v = " << 0.01 * k;
    prev = f;
  }
}

TEST(Occupation, PlanckAndMovingBath) {
  EXPECT_LT(rel(otto::planck_occupation(1.0, 1.0), 0.58197670686932642439), 1e-15);
  EXPECT_EQ(otto::mean_photon_moving(1.0, 1.0, Velocity(0.0)), otto::planck_occupation(1.0, 1.0));
  EXPECT_LT(rel(otto::mean_photon_moving(1.0, 1.0, Velocity(0.9)), 0.38064335462740868797), 1e-14);
  EXPECT_LT(rel(otto::mean_photon_moving(2.0, 0.5, Velocity(0.3)), 0.569875630571513056), 1e-14);
}

TEST(Occupation, MatchesEnergyMinusHalf) {
  const double n = otto::mean_photon_moving(1.0, 1.0, Velocity(0.9));
  const double h = otto::moving_bath_energy(1.0, 1.0, Velocity(0.9));
  EXPECT_NEAR(n, h / 1.0 - 0.5, 1e-14);
}

TEST(Occupation, GroundStateLimitIsMonotone) {
  double prev = otto::mean_photon_moving(0.1, 1.0, Velocity(0.5));
  for (double beta = 0.2; beta < 200.0; beta *= 1.7) {
    const double n = otto::mean_photon_moving(beta, 1.0, Velocity(0.5));
    EXPECT_LT(n, prev);
    EXPECT_GE(n, 0.0);
    prev = n;
  }
  EXPECT_LT(prev, 1e-30);
}

TEST(Occupation, RejectsBadInput) {
  EXPECT_THROW(otto::mean_photon_moving(0.0, 1.0, Velocity(0.1)), std::domain_error);
  EXPECT_THROW(otto::mean_photon_moving(1.0, -1.0, Velocity(0.1)), std::domain_error);
  EXPECT_THROW(otto::planck_occupation(-1.0, 1.0), std::domain_error);
}

TEST(MovingBathEnergy, AngularAverageOracle) {
  EXPECT_LT(rel(otto::moving_bath_energy(0.2, 1.0, Velocity(0.9)), 3.6031382219868639243), 1e-14);
  EXPECT_LT(rel(otto::moving_bath_energy(5.0, 3.0, Velocity(0.5)), 1.5000300260163587431), 1e-14);
}

TEST(MovingBathEnergy, StationaryLimitIsContinuous) {
  for (double bw : {0.01, 0.5, 3.0, 40.0}) {
    const double at_rest = otto::moving_bath_energy(bw, 1.0, Velocity(0.0));
    EXPECT_NEAR(otto::moving_bath_energy(bw, 1.0, Velocity(1e-12)), at_rest, 1e-14 * at_rest);
    EXPECT_NEAR(otto::moving_bath_energy(bw, 1.0, Velocity(1e-7)), at_rest, 1e-12 * at_rest);
    EXPECT_NEAR(at_rest, 0.5 / std::tanh(0.5 * bw), 1e-15 * at_rest);
  }
}

TEST(EngineParams, ValidationNamesTheField) {
  auto message = [](const EngineParams& p) {
    try {
      p.validate();
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(params(2, 1, 0.2, 0.1, 0, 1)).find("omega_h"), std::string::npos);
  EXPECT_NE(message(params(1, 2, 0.1, 0.2, 0, 1)).find("beta_c"), std::string::npos);
  EXPECT_NE(message(params(1, 2, 0.2, 0.1, 0, 0.5)).find("lambda"), std::string::npos);
  EXPECT_NE(message(params(-1, 2, 0.2, 0.1, 0, 1)).find("omega_c"), std::string::npos);
  EXPECT_EQ(message(params(1, 2, 0.2, 0.1, 0, 1)), "");
}

TEST(EvaluateCycle, FrozenMovingBathCycle) {
  const auto r = otto::evaluate_cycle(params(1, 2, 0.2, 0.05, 0.9, 1.25));
  ASSERT_EQ(r.mode, OperatingMode::engine);
  EXPECT_LT(rel(r.w_ext, 2.1015416256009913316), 1e-13);
  EXPECT_LT(rel(r.q_h, 11.008818334582939437), 1e-13);
  EXPECT_LT(rel(*r.eta, 0.19089620354613714403), 1e-13);
}

TEST(EvaluateCycle, NonEngineLeavesEtaUnset) {
  const auto r = otto::evaluate_cycle(params(3, 7, 2, 0.5, 0.6, 1.1));
  EXPECT_EQ(r.mode, OperatingMode::non_engine);
  EXPECT_FALSE(r.eta.has_value());
  EXPECT_LT(rel(r.w_ext, -0.41145691325102087874), 1e-13);
  EXPECT_EQ(otto::to_string(r.mode), "non_engine");
}

TEST(EvaluateCycle, AdiabaticStationaryEfficiencyIsOneMinusZ) {
  for (double bc : {0.5, 1.0, 3.0}) {
    const auto r = otto::evaluate_cycle(params(1, 2, bc, 0.1, 0, 1));
    ASSERT_EQ(r.mode, OperatingMode::engine) << "beta_c = " << bc;
    EXPECT_NEAR(*r.eta, 0.5, 1e-14);
  }
}

TEST(EvaluateCycle, ZeroWorkBoundaryIsNotAnEngine) {
  // beta_c omega_c = beta_h omega_h: no heat flows and no work is extracted.
  const auto r = otto::evaluate_cycle(params(1, 2, 0.2, 0.1, 0, 1));
  EXPECT_EQ(r.mode, OperatingMode::non_engine);
  EXPECT_FALSE(r.eta.has_value());
  EXPECT_NEAR(r.w_ext, 0.0, 1e-14);
  EXPECT_NEAR(r.q_h, 0.0, 1e-14);
}

TEST(EvaluateCycle, FirstLawAndCornerBookkeeping) {
  const auto p = params(1.3, 4.1, 0.7, 0.2, 0.75, 1.4);
  const auto e = otto::cycle_energies(p);
  const auto r = otto::evaluate_cycle(p);
  EXPECT_DOUBLE_EQ(r.w_ab, e.h_b - e.h_a);
  EXPECT_DOUBLE_EQ(r.w_cd, e.h_d - e.h_c);
  EXPECT_DOUBLE_EQ(r.q_h, e.h_c - e.h_b);
  EXPECT_DOUBLE_EQ(r.q_c, e.h_a - e.h_d);
  EXPECT_NEAR(r.w_ext, r.q_h + r.q_c, 1e-13 * (std::abs(r.q_h) + std::abs(r.q_c)));
  EXPECT_DOUBLE_EQ(e.h_a, otto::energy_a(p));
  EXPECT_DOUBLE_EQ(e.h_b, otto::energy_b(p));
  EXPECT_DOUBLE_EQ(e.h_c, otto::energy_c(p));
  EXPECT_DOUBLE_EQ(e.h_d, otto::energy_d(p));
}

TEST(EvaluateCycle, InvalidParamsThrow) {
  EXPECT_THROW(otto::evaluate_cycle(params(2, 1, 0.2, 0.1, 0, 1)), std::invalid_argument);
}
