#include "otto/adiabaticity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace otto {

namespace {

constexpr double kMinRelTol = 1e-13;
constexpr double kMaxRelTol = 1e-6;

void require_frequency(double omega, const char* name) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

std::string_view to_string(DrivingRegime regime) noexcept {
  return regime == DrivingRegime::sudden ? "sudden" : "adiabatic";
}

OscillatorTrajectory solve_husimi(const DriveProtocol& protocol, double rel_tol) {
  if (!(rel_tol >= kMinRelTol && rel_tol <= kMaxRelTol)) {
    throw std::invalid_argument("rel_tol must lie in [1e-13, 1e-6] (got " +
                                std::to_string(rel_tol) + ")");
  }
  if (protocol.kind() == RampKind::sudden) {
    throw std::invalid_argument("sudden protocols have no trajectory; use lambda_closed_form");
  }

  // state = {X, X', Y, Y'}
  std::array<double, 4> state{0.0, 1.0, 1.0, 0.0};
  auto rhs = [&protocol](double t, const std::array<double, 4>& s, std::array<double, 4>& ds) {
    const double w2 = protocol.omega_squared(t);
    ds[0] = s[1];
    ds[1] = -w2 * s[0];
    ds[2] = s[3];
    ds[3] = -w2 * s[2];
  };

  IntegratorStats stats;
  auto observe = [&stats](double, const std::array<double, 4>& s) {
    const double drift = std::abs(s[1] * s[2] - s[0] * s[3] - 1.0);
    stats.max_wronskian_drift = std::max(stats.max_wronskian_drift, drift);
  };

  StepControl ctl;
  ctl.rel_tol = rel_tol;
  ctl.abs_tol = kDefaultAbsTol * (rel_tol / kDefaultRelTol);

  const auto breaks = protocol.breakpoints();
  double w_max = std::max(protocol.omega_start(), protocol.omega_end());
  for (double t : breaks) w_max = std::max(w_max, protocol.omega(t));

  StepStats step_stats;
  double h = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double t0 = breaks[k];
    const double t1 = breaks[k + 1];
    ctl.initial_step = h > 0.0 ? h : std::min(t1 - t0, 0.01 / w_max);
    h = dopri5_integrate(rhs, state, t0, t1, ctl, step_stats, observe);
  }

  stats.steps = step_stats.accepted;
  stats.rejected = step_stats.rejected;
  stats.max_error_norm = step_stats.max_error_norm;
  return OscillatorTrajectory{state[0], state[1], state[2], state[3], stats};
}

double lambda_from_trajectory(const OscillatorTrajectory& traj, double omega_c, double omega_h) {
  require_frequency(omega_c, "omega_c");
  require_frequency(omega_h, "omega_h");
  const double wh2 = omega_h * omega_h;
  const double first = omega_c * omega_c * (wh2 * traj.x * traj.x + traj.dx * traj.dx);
  const double second = wh2 * traj.y * traj.y + traj.dy * traj.dy;
  return (first + second) / (2.0 * omega_c * omega_h);
}

double lambda_closed_form(DrivingRegime regime, double omega_c, double omega_h) {
  require_frequency(omega_c, "omega_c");
  require_frequency(omega_h, "omega_h");
  if (regime == DrivingRegime::adiabatic) return 1.0;
  return (omega_c * omega_c + omega_h * omega_h) / (2.0 * omega_c * omega_h);
}

double stroke_lambda(const DriveProtocol& protocol, double rel_tol) {
  if (protocol.kind() == RampKind::sudden) {
    return lambda_closed_form(DrivingRegime::sudden, protocol.omega_start(),
                              protocol.omega_end());
  }
  const OscillatorTrajectory traj = solve_husimi(protocol, rel_tol);
  return lambda_from_trajectory(traj, protocol.omega_start(), protocol.omega_end());
}

StrokeLambdas stroke_lambdas(const DriveProtocol& compression, double rel_tol,
                             double agreement_tol) {
  const StrokeLambdas out{stroke_lambda(compression, rel_tol),
                          stroke_lambda(compression.reversed(), rel_tol)};
  if (std::abs(out.compression - out.expansion) > agreement_tol * out.compression) {
    throw std::runtime_error("compression and expansion strokes give different lambda (" +
                             std::to_string(out.compression) + " vs " +
                             std::to_string(out.expansion) + ")");
  }
  return out;
}

}  // namespace otto
