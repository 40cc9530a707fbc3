#pragma once

// Dormand-Prince 5(4) embedded Runge-Kutta pair with FSAL and standard
// step-size control (Hairer, Norsett & Wanner, "Solving ODEs I", II.4/II.5).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace otto {

/// Raised when the controller cannot find an acceptable step.
class StepSizeUnderflow : public std::runtime_error {
 public:
  StepSizeUnderflow(double time, double step)
      : std::runtime_error("step size underflow at t = " + std::to_string(time) +
                           " (h = " + std::to_string(step) + ")"),
        time_(time) {}

  double time() const noexcept { return time_; }

 private:
  double time_;
};

struct StepControl {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double initial_step = 0.0;  // 0 -> pick from the interval length
  std::size_t max_steps = 10'000'000;
};

struct StepStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  double max_error_norm = 0.0;  // largest scaled local-error estimate among accepted steps
  double last_step = 0.0;
};

/// Integrates y' = rhs(t, y) from t0 to t1 (t1 > t0), updating y in place.
/// observer(t, y) runs after every accepted step. Returns the suggested next
/// step so consecutive calls can chain across breakpoints.
template <std::size_t N, typename Rhs, typename Observer>
double dopri5_integrate(Rhs&& rhs, std::array<double, N>& y, double t0, double t1,
                        const StepControl& ctl, StepStats& stats, Observer&& observer) {
  using State = std::array<double, N>;

  constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
  constexpr double a21 = 1.0 / 5.0;
  constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
  constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
  constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                   a54 = -212.0 / 729.0;
  constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                   a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
  constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                   a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
  // 5th-order minus embedded 4th-order weights.
  constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                   e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

  if (!(t1 > t0)) return ctl.initial_step;

  double t = t0;
  double h = ctl.initial_step > 0.0 ? ctl.initial_step : 1e-3 * (t1 - t0);
  h = std::min(h, t1 - t0);

  State k1, k2, k3, k4, k5, k6, k7, tmp, ynew;
  rhs(t, y, k1);

  bool last_rejected = false;
  std::size_t steps = 0;
  while (t < t1) {
    if (++steps > ctl.max_steps) throw StepSizeUnderflow(t, h);
    const bool final_step = t + h >= t1;
    if (final_step) h = t1 - t;
    if (h <= 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) {
      throw StepSizeUnderflow(t, h);
    }

    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    rhs(t + c2 * h, tmp, k2);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + c3 * h, tmp, k3);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t + c4 * h, tmp, k4);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(t + c5 * h, tmp, k5);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    rhs(t + h, tmp, k6);
    for (std::size_t i = 0; i < N; ++i)
      ynew[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
    const double t_new = final_step ? t1 : t + h;
    rhs(t_new, ynew, k7);

    double err2 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                            e7 * k7[i]);
      const double scale = ctl.abs_tol + ctl.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err2 += (e / scale) * (e / scale);
    }
    const double err = std::sqrt(err2 / static_cast<double>(N));

    if (err <= 1.0) {
      t = t_new;
      y = ynew;
      k1 = k7;
      ++stats.accepted;
      stats.max_error_norm = std::max(stats.max_error_norm, err);
      stats.last_step = h;
      observer(t, y);
      double factor = err == 0.0 ? 5.0 : 0.9 * std::pow(err, -0.2);
      factor = std::clamp(factor, 0.2, last_rejected ? 1.0 : 5.0);
      h *= factor;
      last_rejected = false;
    } else {
      ++stats.rejected;
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
      last_rejected = true;
    }
  }
  return h;
}

}  // namespace otto
