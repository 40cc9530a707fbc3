#include "otto/optimize.hpp"

#include <cmath>
#include <stdexcept>

#include "otto/bounds.hpp"
#include "otto/quadrature.hpp"

namespace otto {

ScalarMaximum maximize_scalar(const std::function<double(double)>& objective, double lo,
                              double hi, double tol) {
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("maximize_scalar: interval is degenerate");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("maximize_scalar: tol must be positive");

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  std::size_t evals = 2;

  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = objective(d);
    }
    ++evals;
  }
  const double x = 0.5 * (a + b);
  return ScalarMaximum{x, objective(x), evals + 1};
}

double solid_angle_average_inverse_doppler(Velocity v, std::size_t nodes) {
  if (nodes < 16) throw std::invalid_argument("solid-angle quadrature needs at least 16 nodes");
  const GaussLegendreRule rule = gauss_legendre(nodes);
  const double s = v.value();
  // c = cos(theta), d(c) = -sin(theta) d(theta)
  return 0.5 * integrate(rule, -1.0, 1.0, [s](double c) { return 1.0 / (1.0 - s * c); });
}

MaximumWorkPoint maximum_work_point(DrivingRegime regime, double tau, Velocity v) {
  const double s = pwc_threshold(regime, tau, v);
  MaximumWorkPoint out{};
  if (regime == DrivingRegime::adiabatic) {
    const auto best = maximize_scalar(
        [&](double z) { return w_adiabatic_high_t(z, tau, v, 1.0); }, s, 1.0, 1e-12);
    out.z_numeric = best.argmax;
    out.z_closed_form = std::sqrt(s);
    out.eta_numeric = 1.0 - out.z_numeric;
    out.eta_closed_form = emw_adiabatic(tau, v);
  } else {
    const auto best = maximize_scalar(
        [&](double z) { return w_ss_high_t(z, tau, v, 1.0); }, std::sqrt(s), 1.0, 1e-12);
    out.z_numeric = best.argmax;
    out.z_closed_form = std::sqrt(std::sqrt(s));
    out.eta_numeric = eta_ss_high_t(out.z_numeric, tau, v);
    out.eta_closed_form = eta_ss_mw(tau, v);
  }
  return out;
}

std::vector<double> high_t_convergence(DrivingRegime regime, ConvergedQuantity quantity, double z,
                                       double tau, Velocity v, std::span<const double> beta_h) {
  std::vector<double> errors;
  errors.reserve(beta_h.size());
  double previous = INFINITY;
  for (double bh : beta_h) {
    if (!(bh > 0.0) || !(bh < previous)) {
      throw std::invalid_argument("beta_h sequence must be positive and strictly decreasing");
    }
    previous = bh;

    const EngineParams p{.omega_c = z,
                         .omega_h = 1.0,
                         .beta_c = bh / tau,
                         .beta_h = bh,
                         .v = v,
                         .lam = lambda_closed_form(regime, z, 1.0)};
    double exact = 0.0;
    double approx = 0.0;
    if (regime == DrivingRegime::adiabatic) {
      const CycleResult r = evaluate_cycle(p);
      if (quantity == ConvergedQuantity::work) {
        exact = r.w_ext;
        approx = w_adiabatic_high_t(z, tau, v, bh);
      } else {
        exact = r.eta.value_or(NAN);
        approx = 1.0 - z;
      }
    } else if (quantity == ConvergedQuantity::work) {
      exact = w_ss_exact(p);
      approx = w_ss_high_t(z, tau, v, bh);
    } else {
      exact = eta_ss_exact(p).value_or(NAN);
      approx = eta_ss_high_t(z, tau, v);
    }
    errors.push_back(std::abs(exact - approx) / std::abs(approx));
  }
  return errors;
}

}  // namespace otto
