#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "otto/adiabaticity.hpp"
#include "otto/thermo.hpp"

namespace otto {

struct ScalarMaximum {
  double argmax;
  double value;
  std::size_t evaluations;
};

/// Golden-section search for the maximum of a unimodal objective on
/// [lo, hi]; stops when the bracket is narrower than tol. Throws
/// std::invalid_argument for a degenerate interval or tol <= 0.
ScalarMaximum maximize_scalar(const std::function<double(double)>& objective, double lo,
                              double hi, double tol = 1e-10);

/// (1/2) int_0^pi sin(theta) / (1 - v cos theta) d theta by Gauss-Legendre in
/// cos(theta). Needs nodes >= 16; 128 nodes reach ~1e-15 up to v = 0.99.
double solid_angle_average_inverse_doppler(Velocity v, std::size_t nodes = 128);

struct MaximumWorkPoint {
  double z_numeric;      // golden-section argmax in z
  double z_closed_form;  // sqrt(tau f) adiabatic, (tau f)^{1/4} sudden
  double eta_numeric;    // efficiency at z_numeric
  double eta_closed_form;
};

/// Maximizes the high-temperature extracted work over z in (z_min, 1).
MaximumWorkPoint maximum_work_point(DrivingRegime regime, double tau, Velocity v);

enum class ConvergedQuantity { work, efficiency };

/// Relative error between the exact cycle and its high-temperature form at
/// fixed z, tau, v (omega_h = 1, beta_c = beta_h / tau) for each beta_h.
std::vector<double> high_t_convergence(DrivingRegime regime, ConvergedQuantity quantity, double z,
                                       double tau, Velocity v, std::span<const double> beta_h);

}  // namespace otto
