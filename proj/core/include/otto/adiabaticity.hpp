#pragma once

// Husimi adiabaticity parameter of a frequency-modulation stroke, obtained
// by integrating X'' + omega^2(t) X = 0 for the two fundamental solutions
// X(0)=0, X'(0)=1 and Y(0)=1, Y'(0)=0.

#include <cstddef>
#include <string_view>

#include "otto/ode.hpp"
#include "otto/protocol.hpp"

namespace otto {

struct IntegratorStats {
  std::size_t steps = 0;
  std::size_t rejected = 0;
  double max_error_norm = 0.0;       // largest accepted local-error estimate / tolerance
  double max_wronskian_drift = 0.0;  // max |X'Y - XY' - 1| over accepted steps
};

/// Final-time state of both fundamental solutions.
struct OscillatorTrajectory {
  double x;
  double dx;
  double y;
  double dy;
  IntegratorStats stats;

  /// X'Y - XY'; equal to 1 for exact solutions.
  double wronskian() const noexcept { return dx * y - x * dy; }
};

inline constexpr double kDefaultRelTol = 1e-12;
inline constexpr double kDefaultAbsTol = 1e-14;

/// Integrates the oscillator over the whole protocol, restarting at every
/// breakpoint of omega(t). rel_tol must lie in [1e-13, 1e-6]; sudden
/// protocols are rejected (use lambda_closed_form). Throws
/// std::invalid_argument on bad input and StepSizeUnderflow on failure.
OscillatorTrajectory solve_husimi(const DriveProtocol& protocol, double rel_tol = kDefaultRelTol);

/// lambda = {omega_c^2 [omega_h^2 X^2 + X'^2] + [omega_h^2 Y^2 + Y'^2]} / (2 omega_c omega_h),
/// with omega_c the starting and omega_h the final frequency of the stroke.
double lambda_from_trajectory(const OscillatorTrajectory& traj, double omega_c, double omega_h);

enum class DrivingRegime { adiabatic, sudden };

std::string_view to_string(DrivingRegime regime) noexcept;

/// 1 for adiabatic driving, (omega_c^2 + omega_h^2)/(2 omega_c omega_h) for a quench.
double lambda_closed_form(DrivingRegime regime, double omega_c, double omega_h);

/// lambda of one stroke: closed form for sudden protocols, ODE otherwise.
double stroke_lambda(const DriveProtocol& protocol, double rel_tol = kDefaultRelTol);

struct StrokeLambdas {
  double compression;
  double expansion;
};

/// lambda of the compression stroke and of its time mirror used as the
/// expansion stroke. Throws std::runtime_error if they differ by more than
/// agreement_tol (relative); the cycle formulas assume one shared lambda.
StrokeLambdas stroke_lambdas(const DriveProtocol& compression, double rel_tol = kDefaultRelTol,
                             double agreement_tol = 1e-8);

}  // namespace otto
