#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "otto/bounds.hpp"

using otto::DrivingRegime;
using otto::EngineParams;
using otto::RootBranch;
using otto::Velocity;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(GeneralizedCarnot, FrozenAnchorAndLimits) {
  const double g = otto::generalized_carnot(0.5, Velocity(0.85));
  EXPECT_LT(rel(g, 0.61075320330063242412), 1e-15);
  EXPECT_NEAR(g, 0.6108, 0.002);
  EXPECT_DOUBLE_EQ(otto::generalized_carnot(0.5, Velocity(0.0)), 0.5);
  EXPECT_GT(otto::generalized_carnot(0.5, Velocity(0.999999)), 0.99);
  EXPECT_THROW(otto::generalized_carnot(1.0, Velocity(0.5)), std::domain_error);
  EXPECT_THROW(otto::generalized_carnot(0.0, Velocity(0.5)), std::domain_error);
}

TEST(GeneralizedCarnot, NeverBelowCarnot) {
  for (double tau = 0.05; tau < 1.0; tau += 0.05) {
    for (double v = 0.0; v < 0.99; v += 0.07) {
      EXPECT_GE(otto::generalized_carnot(tau, Velocity(v)), 1.0 - tau - 1e-15);
    }
  }
}

TEST(Temperatures, DirectionalAndEffective) {
  const Velocity v(0.6);
  EXPECT_NEAR(otto::directional_temperature(2.0, v, 0.0), 2.0 * std::sqrt(1.6 / 0.4), 1e-14);
  EXPECT_NEAR(otto::directional_temperature(2.0, v, std::numbers::pi), 2.0 * std::sqrt(0.4 / 1.6),
              1e-14);
  EXPECT_THROW(otto::directional_temperature(2.0, v, 4.0), std::domain_error);
  EXPECT_THROW(otto::directional_temperature(-1.0, v, 1.0), std::domain_error);
  EXPECT_DOUBLE_EQ(otto::effective_temperature(3.0, v), 3.0 * otto::doppler_factor(v));
}

TEST(Thresholds, AdiabaticAndSudden) {
  const Velocity v(0.9);
  const double s = 0.17825711049456356423;
  EXPECT_LT(rel(otto::pwc_threshold(DrivingRegime::adiabatic, 0.25, v), s), 1e-15);
  EXPECT_LT(rel(otto::pwc_threshold(DrivingRegime::sudden, 0.25, v), s), 1e-15);
  EXPECT_NEAR(otto::w_adiabatic_high_t(s, 0.25, v, 1.0), 0.0, 1e-16);
  EXPECT_NEAR(otto::w_ss_high_t(std::sqrt(s), 0.25, v, 1.0), 0.0, 1e-15);
  EXPECT_NEAR(otto::eta_ss_high_t(std::sqrt(s), 0.25, v), 0.0, 1e-15);
  EXPECT_GT(otto::w_adiabatic_high_t(0.5, 0.25, v, 1.0), 0.0);
  EXPECT_LT(otto::w_adiabatic_high_t(0.1, 0.25, v, 1.0), 0.0);
}

TEST(MaximumWorkEfficiencies, StationaryLimits) {
  for (double tau : {0.1, 0.25, 0.5, 0.75}) {
    EXPECT_NEAR(otto::emw_adiabatic(tau, Velocity(0.0)), 1.0 - std::sqrt(tau), 1e-15);
    EXPECT_NEAR(otto::eta_ss_mw(tau, Velocity(0.0)), otto::rezek_kosloff(tau), 1e-15);
  }
  EXPECT_DOUBLE_EQ(otto::rezek_kosloff(0.25), 0.2);
}

TEST(MaximumWorkEfficiencies, MovingBathFrozen) {
  const double got = otto::eta_ss_mw(0.25, Velocity(0.9));
  EXPECT_LT(rel(got, 0.23854088688080813189), 1e-14);
  const double s = std::sqrt(0.25 * otto::doppler_factor(Velocity(0.9)));
  EXPECT_NEAR(got, (1.0 - s) / (2.0 + s), 1e-15);
}

TEST(QuenchCeiling, FrozenAnchorAndLimits) {
  const double up = otto::eta_ss_upper(0.75, Velocity(0.9));
  EXPECT_LT(rel(up, 0.24366467916229131361), 1e-15);
  EXPECT_NEAR(up, 0.24369, 1e-4);
  // The approach to 1/2 goes like sqrt(tau f(v)), which vanishes only logarithmically slowly.
  double prev = 0.0;
  for (double v : {0.9, 0.99, 0.999999, 0.999999999999}) {
    const double u = otto::eta_ss_upper(0.5, Velocity(v));
    EXPECT_GT(u, prev);
    EXPECT_LT(u, 0.5);
    prev = u;
  }
  // s = tau f ~ 1e-5 here, so the ceiling is 1/(sqrt 2 + sqrt s)^2 ~ 0.4978.
  EXPECT_GT(prev, 0.497);
  EXPECT_NEAR(otto::eta_ss_upper(1e-9, Velocity(0.0)), 0.0, 1e-8);
  for (double ec = 0.05; ec < 1.0; ec += 0.05) {
    for (double v = 0.0; v < 0.99; v += 0.1) {
      const double u = otto::eta_ss_upper(ec, Velocity(v));
      EXPECT_LT(u, 0.5);
      EXPECT_LE(otto::eta_ss_mw(1.0 - ec, Velocity(v)), u + 1e-15);
    }
  }
}

TEST(QuenchExact, AgreesWithGenericCycleAtQuenchLambda) {
  const EngineParams p{.omega_c = 1.0, .omega_h = 2.0, .beta_c = 0.2, .beta_h = 0.05,
                       .v = Velocity(0.9), .lam = 1.25};
  const auto cycle = otto::evaluate_cycle(p);
  ASSERT_TRUE(cycle.eta.has_value());
  const auto eta = otto::eta_ss_exact(p);
  ASSERT_TRUE(eta.has_value());
  EXPECT_NEAR(*eta, *cycle.eta, 1e-12);
  EXPECT_NEAR(otto::w_ss_exact(p), cycle.w_ext, 1e-12 * cycle.w_ext);
  EXPECT_LT(*eta, 0.5);
}

TEST(QuenchExact, NonEngineIsEmpty) {
  // z^2 = 0.25 below tau = 0.75: no positive work.
  const EngineParams p{.omega_c = 1.0, .omega_h = 2.0, .beta_c = 0.2, .beta_h = 0.15,
                       .v = Velocity(0.0), .lam = 1.0};
  EXPECT_FALSE(otto::eta_ss_exact(p).has_value());
  EXPECT_LT(otto::w_ss_exact(p), 0.0);
}

TEST(QuenchHighT, RezekKosloffPoint) {
  EXPECT_NEAR(otto::eta_ss_high_t(std::sqrt(0.5), 0.25, Velocity(0.0)), 0.2, 1e-15);
}

TEST(QuenchHighT, ExactFormConvergesAtSmallBeta) {
  const double z = 0.7, tau = 0.25;
  const double beta_h = 1e-4;
  const EngineParams p{.omega_c = z, .omega_h = 1.0, .beta_c = beta_h / tau, .beta_h = beta_h,
                       .v = Velocity(0.9), .lam = 1.0};
  EXPECT_NEAR(*otto::eta_ss_exact(p), otto::eta_ss_high_t(z, tau, Velocity(0.9)), 1e-4);
}

TEST(ZSquaredFromEta, SpecifiedPoints) {
  const Velocity v9(0.9);
  const double s = 0.25 * otto::doppler_factor(v9);
  EXPECT_NEAR(otto::z_squared_from_eta(0.0, 0.25, v9), s, 1e-15);
  EXPECT_NEAR(otto::z_squared_from_eta(0.0, 0.25, v9, RootBranch::lower), s, 1e-15);
  const double eta = otto::eta_ss_high_t(0.75, 0.25, v9);
  EXPECT_NEAR(otto::z_squared_from_eta(eta, 0.25, v9), 0.5625, 1e-9);
  EXPECT_NEAR(otto::z_squared_from_eta(0.2, 0.25, Velocity(0.0)), 0.5, 1e-9);
}

TEST(ZSquaredFromEta, BothBranchesRoundTrip) {
  for (double tau : {0.1, 0.4, 0.8}) {
    for (double vv : {0.0, 0.6, 0.95}) {
      const Velocity v(vv);
      const double ceiling = otto::eta_ss_upper(1.0 - tau, v);
      for (double frac : {0.1, 0.5, 0.9, 0.999}) {
        const double eta = frac * ceiling;
        const double lo = otto::z_squared_from_eta(eta, tau, v, RootBranch::lower);
        const double hi = otto::z_squared_from_eta(eta, tau, v, RootBranch::upper);
        EXPECT_LE(lo, hi);
        EXPECT_NEAR(otto::eta_ss_high_t(std::sqrt(lo), tau, v), eta, 1e-9);
        EXPECT_NEAR(otto::eta_ss_high_t(std::sqrt(hi), tau, v), eta, 1e-9);
      }
    }
  }
}

TEST(ZSquaredFromEta, AboveCeilingIsRejected) {
  const Velocity v(0.9);
  const double ceiling = otto::eta_ss_upper(0.75, v);
  EXPECT_NO_THROW(otto::z_squared_from_eta(ceiling, 0.25, v));
  EXPECT_THROW(otto::z_squared_from_eta(ceiling + 1e-6, 0.25, v), std::domain_error);
  EXPECT_THROW(otto::z_squared_from_eta(-0.1, 0.25, v), std::domain_error);
}

TEST(BoundsReport, FieldsAreConsistent) {
  const auto b = otto::bounds_report(0.5, Velocity(0.85));
  EXPECT_DOUBLE_EQ(b.eta_carnot, 0.5);
  EXPECT_DOUBLE_EQ(b.eta_gen_carnot, otto::generalized_carnot(0.5, Velocity(0.85)));
  EXPECT_DOUBLE_EQ(b.t_c_eff, 1.0 - b.eta_gen_carnot);
  EXPECT_DOUBLE_EQ(b.z_min_adiabatic, b.z2_min_sudden);
  EXPECT_LE(b.eta_mw_adiabatic, b.eta_gen_carnot);
  EXPECT_LE(b.eta_ss_mw, b.eta_ss_upper);
  EXPECT_LT(b.eta_ss_upper, 0.5);
  EXPECT_DOUBLE_EQ(b.eta_rk, otto::rezek_kosloff(0.5));
}

TEST(BoundsReport, CeilingCrossesCarnotNearEqualTemperatures) {
  EXPECT_GT(otto::eta_ss_upper(0.05, Velocity(0.9)), 0.05);
}
