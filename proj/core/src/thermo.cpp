#include "otto/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "otto/quadrature.hpp"
#include "otto/special.hpp"

namespace otto {

namespace {

// Below this speed the moving-bath closed forms are 0/0 and the stationary
// expressions are used instead.
constexpr double kStationarySpeed = 1e-12;

// Below this speed f(v) uses its Taylor series.
constexpr double kSeriesSpeed = 1e-3;

// When rapidity * max(1, argument) is below this, log-ratio differences are
// integrated instead of subtracted (the subtraction loses ~eps/u relative).
constexpr double kIntegrateBelow = 0.5;

const GaussLegendreRule& ratio_rule() {
  static const GaussLegendreRule rule = gauss_legendre(16);
  return rule;
}

std::string describe(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void require(bool ok, const char* field, double value, const char* what) {
  if (!ok) {
    throw std::invalid_argument(std::string(field) + " " + what + " (got " +
                                describe(value) + ")");
  }
}

// ln sinh(a e^u) - ln sinh(a e^{-u}) for a > 0, u > 0.
double log_sinh_ratio(double a, double u) {
  if (u * std::max(1.0, a) < kIntegrateBelow) {
    // d/dt ln sinh(a e^t) = (a e^t) coth(a e^t)
    return integrate(ratio_rule(), -u, u,
                     [a](double t) { return x_coth_x(a * std::exp(t)); });
  }
  const double hi = a * std::exp(u);
  const double lo = a * std::exp(-u);
  // ln sinh s = s - ln 2 + ln(1 - e^{-2s}); the linear parts combine exactly.
  return 2.0 * a * std::sinh(u) + (log1m_exp(2.0 * hi) - log1m_exp(2.0 * lo));
}

// ln(1 - e^{-x e^u}) - ln(1 - e^{-x e^{-u}}) for x > 0, u > 0.
double log1m_exp_ratio(double x, double u) {
  if (u * std::max(1.0, x) < kIntegrateBelow) {
    // d/dt ln(1 - e^{-x e^t}) = (x e^t) / (e^{x e^t} - 1)
    return integrate(ratio_rule(), -u, u,
                     [x](double t) { return bose_ratio(x * std::exp(t)); });
  }
  return log1m_exp(x * std::exp(u)) - log1m_exp(x * std::exp(-u));
}

void require_positive_finite(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(name) + " must be positive and finite (got " +
                            describe(x) + ")");
  }
}

}  // namespace

Velocity::Velocity(double v) : v_(v) {
  if (!(v >= 0.0 && v < 1.0)) {
    throw std::domain_error("velocity must satisfy 0 <= v < 1 (got " + describe(v) + ")");
  }
}

double Velocity::gamma() const noexcept { return 1.0 / std::sqrt((1.0 - v_) * (1.0 + v_)); }

double Velocity::rapidity() const noexcept { return std::atanh(v_); }

void BathSpec::validate() const {
  require(beta > 0.0 && std::isfinite(beta), "beta", beta, "must be positive and finite");
}

void EngineParams::validate() const {
  require(std::isfinite(omega_c) && omega_c > 0.0, "omega_c", omega_c, "must be positive");
  require(std::isfinite(omega_h) && omega_h > omega_c, "omega_h", omega_h,
          "must exceed omega_c");
  require(std::isfinite(beta_h) && beta_h > 0.0, "beta_h", beta_h, "must be positive");
  require(std::isfinite(beta_c) && beta_c > beta_h, "beta_c", beta_c, "must exceed beta_h");
  require(std::isfinite(lam) && lam >= 1.0, "lambda", lam, "must be >= 1");
}

std::string_view to_string(OperatingMode mode) noexcept {
  switch (mode) {
    case OperatingMode::engine:
      return "engine";
    case OperatingMode::non_engine:
      return "non_engine";
  }
  return "non_engine";
}

double doppler_factor(Velocity v) {
  const double s = v.value();
  if (s < kSeriesSpeed) {
    const double s2 = s * s;
    return 1.0 - s2 / 6.0 - 11.0 * s2 * s2 / 120.0;
  }
  return std::sqrt((1.0 - s) * (1.0 + s)) * std::log1p(2.0 * s / (1.0 - s)) / (2.0 * s);
}

double planck_occupation(double beta, double omega) {
  require_positive_finite(beta, "beta");
  require_positive_finite(omega, "omega");
  const double x = beta * omega;
  return bose_ratio(x) / x;
}

double mean_photon_moving(double beta, double omega, Velocity v) {
  require_positive_finite(beta, "beta");
  require_positive_finite(omega, "omega");
  if (v.value() < kStationarySpeed) return planck_occupation(beta, omega);

  const double x = beta * omega;
  const double sinh_u = v.gamma() * v.value();
  return log1m_exp_ratio(x, v.rapidity()) / (2.0 * x * sinh_u);
}

double moving_bath_energy(double beta, double omega, Velocity v) {
  require_positive_finite(beta, "beta");
  require_positive_finite(omega, "omega");
  const double a = 0.5 * beta * omega;
  if (v.value() < kStationarySpeed) return x_coth_x(a) / beta;

  const double sinh_u = v.gamma() * v.value();
  return log_sinh_ratio(a, v.rapidity()) / (2.0 * beta * sinh_u);
}

double energy_a(const EngineParams& p) {
  p.validate();
  return moving_bath_energy(p.beta_c, p.omega_c, p.v);
}

double energy_b(const EngineParams& p) { return energy_a(p) * (p.omega_h / p.omega_c) * p.lam; }

double energy_c(const EngineParams& p) {
  p.validate();
  return x_coth_x(0.5 * p.beta_h * p.omega_h) / p.beta_h;
}

double energy_d(const EngineParams& p) {
  p.validate();
  // (omega_c/2) lam coth(beta_h omega_h / 2)
  const double a = 0.5 * p.beta_h * p.omega_h;
  return p.lam * (p.omega_c / p.omega_h) * x_coth_x(a) / p.beta_h;
}

CycleEnergies cycle_energies(const EngineParams& p) {
  p.validate();
  const double h_a = moving_bath_energy(p.beta_c, p.omega_c, p.v);
  const double hot = x_coth_x(0.5 * p.beta_h * p.omega_h) / p.beta_h;
  return CycleEnergies{
      .h_a = h_a,
      .h_b = h_a * (p.omega_h / p.omega_c) * p.lam,
      .h_c = hot,
      .h_d = p.lam * (p.omega_c / p.omega_h) * hot,
  };
}

CycleResult evaluate_cycle(const EngineParams& p) {
  const CycleEnergies e = cycle_energies(p);

  CycleResult r{};
  r.w_ab = e.h_b - e.h_a;
  r.w_cd = e.h_d - e.h_c;
  r.q_h = e.h_c - e.h_b;
  r.q_c = e.h_a - e.h_d;
  r.w_ext = -(r.w_ab + r.w_cd);

  if (r.w_ext > 0.0 && r.q_h > 0.0) {
    r.mode = OperatingMode::engine;
    r.eta = r.w_ext / r.q_h;
  } else {
    r.mode = OperatingMode::non_engine;
  }
  return r;
}

}  // namespace otto
