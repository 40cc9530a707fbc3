#pragma once

// Efficiency bounds, work-extraction thresholds and maximum-work points of
// the relativistic Otto cycle, in the reduced variables z = omega_c/omega_h
// and tau = beta_h/beta_c (eta_C = 1 - tau).
//
// Conventions that differ from some printed forms in the literature:
//  * generalized Carnot bound is 1 - tau f(v);
//  * adiabatic efficiency at maximum work is 1 - sqrt(tau f(v));
//  * the high-temperature quench efficiency carries tau f(v) in its
//    denominator, the exact beta -> 0 limit of the full expression;
//  * the quench work is maximal at z = (tau f(v))^{1/4}.

#include <optional>

#include "otto/adiabaticity.hpp"
#include "otto/thermo.hpp"

namespace otto {

struct BoundsReport {
  double tau;
  double v;
  double eta_carnot;        // 1 - tau
  double eta_gen_carnot;    // 1 - tau f(v)
  double t_c_eff;           // effective cold temperature in units of T_h, tau f(v)
  double eta_mw_adiabatic;  // 1 - sqrt(tau f(v))
  double z_min_adiabatic;   // tau f(v)
  double z2_min_sudden;     // tau f(v)
  double eta_ss_upper;      // quench efficiency ceiling, < 1/2
  double eta_ss_mw;         // quench efficiency at maximum work
  double eta_rk;            // stationary quench efficiency at maximum work
};

/// 1 - tau f(v). Requires 0 < tau < 1.
double generalized_carnot(double tau, Velocity v);

/// T sqrt(1-v^2)/(1 - v cos theta), theta in [0, pi].
double directional_temperature(double temperature, Velocity v, double theta);

/// Solid-angle average of the directional temperature, T f(v).
double effective_temperature(double temperature, Velocity v);

/// Positive-work threshold: z_min for adiabatic driving, z^2_min for the quench.
/// Both equal tau f(v).
double pwc_threshold(DrivingRegime regime, double tau, Velocity v);

/// 1 - sqrt(tau f(v)); Curzon-Ahlborn at v = 0.
double emw_adiabatic(double tau, Velocity v);

/// High-temperature extracted work for adiabatic driving,
/// (1 - z)(z - tau f)/(beta_h z).
double w_adiabatic_high_t(double z, double tau, Velocity v, double beta_h);

/// Exact quench cycle (lambda fixed to the sudden value; p.lam is ignored).
/// eta_ss_exact is empty outside engine mode.
std::optional<double> eta_ss_exact(const EngineParams& p);
double w_ss_exact(const EngineParams& p);

/// High-temperature quench work (1 - z^2)(z^2 - tau f)/(2 z^2 beta_h).
double w_ss_high_t(double z, double tau, Velocity v, double beta_h);

/// High-temperature quench efficiency (1 - z^2)(z^2 - s)/(z^2 (2 - s) - s), s = tau f(v).
double eta_ss_high_t(double z, double tau, Velocity v);

/// Which root of the quadratic z^2(eta) to return. Two compression ratios
/// share each efficiency below the ceiling; lower is the root with the minus
/// sign in front of the discriminant.
enum class RootBranch { lower, upper };

/// Inverse of eta_ss_high_t in z^2. Throws std::domain_error when eta exceeds
/// the achievable maximum (negative discriminant). At eta = 0 the upper root
/// is z^2 = 1, outside the domain, so both branches return tau f(v).
double z_squared_from_eta(double eta, double tau, Velocity v,
                          RootBranch branch = RootBranch::upper);

/// (1 - f (1 - eta_C)) / (sqrt 2 + sqrt(f (1 - eta_C)))^2. Requires 0 < eta_C < 1.
double eta_ss_upper(double eta_carnot, Velocity v);

/// (2 + s - 3 sqrt s)/(4 - s), s = tau f(v).
double eta_ss_mw(double tau, Velocity v);

/// (1 - sqrt tau)/(2 + sqrt tau).
double rezek_kosloff(double tau);

/// Every bound at one (tau, v) point.
BoundsReport bounds_report(double tau, Velocity v);

}  // namespace otto
