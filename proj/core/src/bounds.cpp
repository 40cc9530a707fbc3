#include "otto/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "otto/special.hpp"

namespace otto {

namespace {

void require_ratio(double x, const char* name) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error(std::string(name) + " must lie in (0, 1) (got " + std::to_string(x) +
                            ")");
  }
}

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(name) + " must be positive and finite");
  }
}

double reduced_threshold(double tau, Velocity v) {
  require_ratio(tau, "tau");
  return tau * doppler_factor(v);
}

// Pieces shared by the exact quench formulas. With A the log-sinh term of the
// moving bath, A/v = 2 beta_c <H>_A, which stays finite at v = 0.
struct QuenchTerms {
  double wc2;
  double wh2;
  double coth_h;
  double a_over_v;
};

QuenchTerms quench_terms(const EngineParams& p) {
  EngineParams q = p;
  q.lam = 1.0;
  q.validate();
  return QuenchTerms{
      .wc2 = p.omega_c * p.omega_c,
      .wh2 = p.omega_h * p.omega_h,
      .coth_h = x_coth_x(0.5 * p.beta_h * p.omega_h) * 2.0 / (p.beta_h * p.omega_h),
      .a_over_v = 2.0 * p.beta_c * moving_bath_energy(p.beta_c, p.omega_c, p.v),
  };
}

}  // namespace

double generalized_carnot(double tau, Velocity v) { return 1.0 - reduced_threshold(tau, v); }

double directional_temperature(double temperature, Velocity v, double theta) {
  require_positive(temperature, "temperature");
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::domain_error("theta must lie in [0, pi]");
  }
  const double s = v.value();
  return temperature * std::sqrt((1.0 - s) * (1.0 + s)) / (1.0 - s * std::cos(theta));
}

double effective_temperature(double temperature, Velocity v) {
  require_positive(temperature, "temperature");
  return temperature * doppler_factor(v);
}

double pwc_threshold(DrivingRegime, double tau, Velocity v) {
  // Same expression for both regimes: z_min (adiabatic) and z^2_min (quench).
  return reduced_threshold(tau, v);
}

double emw_adiabatic(double tau, Velocity v) { return 1.0 - std::sqrt(reduced_threshold(tau, v)); }

double w_adiabatic_high_t(double z, double tau, Velocity v, double beta_h) {
  require_ratio(z, "z");
  require_positive(beta_h, "beta_h");
  const double s = reduced_threshold(tau, v);
  return (1.0 - z) * (z - s) / (beta_h * z);
}

double w_ss_exact(const EngineParams& p) {
  const QuenchTerms k = quench_terms(p);
  return (k.wh2 - k.wc2) / (4.0 * p.beta_c * k.wc2 * p.omega_h) *
         (p.beta_c * k.wc2 * k.coth_h - p.omega_h * k.a_over_v);
}

std::optional<double> eta_ss_exact(const EngineParams& p) {
  const QuenchTerms k = quench_terms(p);
  const double work_factor = p.beta_c * k.wc2 * k.coth_h - p.omega_h * k.a_over_v;
  const double heat_factor =
      2.0 * p.beta_c * k.wc2 * p.omega_h * k.coth_h - (k.wc2 + k.wh2) * k.a_over_v;
  if (!(work_factor > 0.0 && heat_factor > 0.0)) return std::nullopt;
  return (k.wh2 - k.wc2) * work_factor / (p.omega_h * heat_factor);
}

double w_ss_high_t(double z, double tau, Velocity v, double beta_h) {
  require_ratio(z, "z");
  require_positive(beta_h, "beta_h");
  const double s = reduced_threshold(tau, v);
  const double z2 = z * z;
  return (1.0 - z2) * (z2 - s) / (2.0 * z2 * beta_h);
}

double eta_ss_high_t(double z, double tau, Velocity v) {
  require_ratio(z, "z");
  const double s = reduced_threshold(tau, v);
  const double z2 = z * z;
  return (1.0 - z2) * (z2 - s) / (z2 * (2.0 - s) - s);
}

double z_squared_from_eta(double eta, double tau, Velocity v, RootBranch branch) {
  if (!(eta >= 0.0 && eta < 1.0)) {
    throw std::domain_error("eta must lie in [0, 1) (got " + std::to_string(eta) + ")");
  }
  const double s = reduced_threshold(tau, v);
  // z^4 - b z^2 + c = 0
  const double b = 1.0 + s - eta * (2.0 - s);
  const double c = s * (1.0 - eta);
  double disc = b * b - 4.0 * c;
  if (disc < 0.0) {
    if (disc < -1e-14 * b * b) {
      throw std::domain_error("efficiency " + std::to_string(eta) +
                              " is above the achievable maximum for these (tau, v)");
    }
    disc = 0.0;
  }
  const double upper = 0.5 * (b + std::sqrt(disc));
  // The upper root reaches z^2 = 1 only at eta = 0, outside z in (0, 1); the
  // threshold tau f is then the only admissible compression ratio.
  if (branch == RootBranch::lower || upper >= 1.0) return c / upper;
  return upper;
}

double eta_ss_upper(double eta_carnot, Velocity v) {
  require_ratio(eta_carnot, "eta_carnot");
  const double s = doppler_factor(v) * (1.0 - eta_carnot);
  const double denom = std::numbers::sqrt2 + std::sqrt(s);
  return (1.0 - s) / (denom * denom);
}

double eta_ss_mw(double tau, Velocity v) {
  const double s = reduced_threshold(tau, v);
  return (2.0 + s - 3.0 * std::sqrt(s)) / (4.0 - s);
}

double rezek_kosloff(double tau) {
  require_ratio(tau, "tau");
  const double r = std::sqrt(tau);
  return (1.0 - r) / (2.0 + r);
}

BoundsReport bounds_report(double tau, Velocity v) {
  const double s = reduced_threshold(tau, v);
  return BoundsReport{
      .tau = tau,
      .v = v.value(),
      .eta_carnot = 1.0 - tau,
      .eta_gen_carnot = generalized_carnot(tau, v),
      .t_c_eff = s,
      .eta_mw_adiabatic = emw_adiabatic(tau, v),
      .z_min_adiabatic = pwc_threshold(DrivingRegime::adiabatic, tau, v),
      .z2_min_sudden = pwc_threshold(DrivingRegime::sudden, tau, v),
      .eta_ss_upper = eta_ss_upper(1.0 - tau, v),
      .eta_ss_mw = eta_ss_mw(tau, v),
      .eta_rk = rezek_kosloff(tau),
  };
}

}  // namespace otto
