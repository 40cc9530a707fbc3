#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "otto/bounds.hpp"
#include "otto/optimize.hpp"

using otto::ConvergedQuantity;
using otto::DrivingRegime;
using otto::Velocity;

TEST(MaximizeScalar, Parabola) {
  const auto m = otto::maximize_scalar([](double x) { return -(x - 0.3) * (x - 0.3) + 2.0; }, 0.0, 1.0);
  // A quadratic peak pins the argmax only to ~sqrt(machine epsilon).
  EXPECT_NEAR(m.argmax, 0.3, 5e-8);
  EXPECT_NEAR(m.value, 2.0, 1e-15);
  EXPECT_GT(m.evaluations, 10u);
  EXPECT_LT(m.evaluations, 100u);
}

TEST(MaximizeScalar, MaximumAtBoundary) {
  const auto m = otto::maximize_scalar([](double x) { return x; }, -1.0, 4.0);
  EXPECT_NEAR(m.argmax, 4.0, 1e-9);
}

TEST(MaximizeScalar, RejectsBadInput) {
  auto f = [](double x) { return x; };
  EXPECT_THROW(otto::maximize_scalar(f, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(otto::maximize_scalar(f, 2.0, 1.0), std::invalid_argument);
  EXPECT_THROW(otto::maximize_scalar(f, 0.0, 1.0, 0.0), std::invalid_argument);
}

TEST(SolidAngleAverage, MatchesLogFormula) {
  for (int k = 1; k <= 19; ++k) {
    const double v = 0.05 * k;
    const double want = std::log((1.0 + v) / (1.0 - v)) / (2.0 * v);
    EXPECT_NEAR(otto::solid_angle_average_inverse_doppler(Velocity(v)), want, 1e-10) << "v = " << v;
  }
  EXPECT_NEAR(otto::solid_angle_average_inverse_doppler(Velocity(0.0)), 1.0, 1e-15);
  EXPECT_THROW(otto::solid_angle_average_inverse_doppler(Velocity(0.5), 8), std::invalid_argument);
}

TEST(MaximumWorkPoint, ClosedFormsOnGrid) {
  for (double tau = 0.1; tau < 0.95; tau += 0.1) {
    for (double vv : {0.0, 0.3, 0.6, 0.9, 0.95}) {
      const Velocity v(vv);
      const double s = tau * otto::doppler_factor(v);
      const auto a = otto::maximum_work_point(DrivingRegime::adiabatic, tau, v);
      EXPECT_NEAR(a.z_closed_form, std::sqrt(s), 1e-15);
      EXPECT_NEAR(a.z_numeric, a.z_closed_form, 1e-6);
      EXPECT_NEAR(a.eta_closed_form, otto::emw_adiabatic(tau, v), 1e-15);
      EXPECT_NEAR(a.eta_numeric, a.eta_closed_form, 1e-6);

      const auto q = otto::maximum_work_point(DrivingRegime::sudden, tau, v);
      EXPECT_NEAR(q.z_closed_form, std::pow(s, 0.25), 1e-15);
      EXPECT_NEAR(q.z_numeric, q.z_closed_form, 1e-6);
      EXPECT_NEAR(q.eta_closed_form, otto::eta_ss_mw(tau, v), 1e-15);
      EXPECT_NEAR(q.eta_numeric, q.eta_closed_form, 1e-6);
    }
  }
}

TEST(HighTemperatureConvergence, MonotoneAndSmall) {
  const std::vector<double> betas{1e-1, 1e-2, 1e-3};
  struct Case {
    DrivingRegime regime;
    ConvergedQuantity quantity;
  };
  for (const Case c : {Case{DrivingRegime::adiabatic, ConvergedQuantity::work},
                       Case{DrivingRegime::sudden, ConvergedQuantity::work},
                       Case{DrivingRegime::sudden, ConvergedQuantity::efficiency}}) {
    const auto err = otto::high_t_convergence(c.regime, c.quantity, 0.7, 0.25, Velocity(0.9), betas);
    ASSERT_EQ(err.size(), 3u);
    EXPECT_GT(err[0], err[1]);
    EXPECT_GT(err[1], err[2]);
    EXPECT_LT(err[2], 1e-4);
  }
}

TEST(HighTemperatureConvergence, AdiabaticEfficiencyIsTemperatureIndependent) {
  const std::vector<double> betas{1e-1, 1e-2, 1e-3};
  for (double e : otto::high_t_convergence(DrivingRegime::adiabatic, ConvergedQuantity::efficiency,
                                           0.7, 0.25, Velocity(0.9), betas)) {
    EXPECT_LT(e, 1e-14);
  }
}

TEST(HighTemperatureConvergence, RejectsUnorderedBetas) {
  const std::vector<double> betas{1e-2, 1e-1};
  EXPECT_THROW(otto::high_t_convergence(DrivingRegime::sudden, ConvergedQuantity::work, 0.7, 0.25,
                                        Velocity(0.9), betas),
               std::invalid_argument);
}
