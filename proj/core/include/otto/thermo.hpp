#pragma once

// Closed-form energetics of the harmonic-oscillator Otto cycle whose cold
// isochore is carried out while the oscillator moves through the cold bath
// at constant speed v. Units: hbar = k_B = c = 1.

#include <optional>
#include <string_view>

namespace otto {

/// Dimensionless speed in units of c, 0 <= v < 1.
class Velocity {
 public:
  /// Throws std::domain_error unless 0 <= v < 1.
  explicit Velocity(double v);

  static Velocity at_rest() { return Velocity(0.0); }

  double value() const noexcept { return v_; }
  /// Lorentz factor 1/sqrt(1 - v^2).
  double gamma() const noexcept;
  /// atanh(v); the Doppler factors are e^{+-rapidity}.
  double rapidity() const noexcept;

  friend bool operator==(const Velocity&, const Velocity&) = default;

 private:
  double v_;
};

/// A thermal reservoir; the hot bath is always at rest.
struct BathSpec {
  double beta;
  Velocity velocity = Velocity::at_rest();

  /// Throws std::invalid_argument unless beta is finite and positive.
  void validate() const;
};

/// One operating point of the cycle.
struct EngineParams {
  double omega_c;
  double omega_h;
  double beta_c;
  double beta_h;
  Velocity v = Velocity::at_rest();
  double lam = 1.0;

  /// Enforces 0 < omega_c < omega_h, beta_c > beta_h > 0 and lam >= 1.
  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  /// z = omega_c / omega_h.
  double compression_ratio() const noexcept { return omega_c / omega_h; }
  /// tau = beta_h / beta_c = T_c / T_h.
  double temperature_ratio() const noexcept { return beta_h / beta_c; }
};

/// Mean energies at the four corners A (after the cold isochore), B (after
/// compression), C (after the hot isochore) and D (after expansion).
struct CycleEnergies {
  double h_a;
  double h_b;
  double h_c;
  double h_d;
};

enum class OperatingMode { engine, non_engine };

std::string_view to_string(OperatingMode mode) noexcept;

/// Stroke bookkeeping. Works w_ab, w_cd are the energy delivered to the
/// medium during compression/expansion; heats q_h, q_c are positive when
/// absorbed by the medium. w_ext = -(w_ab + w_cd) = q_h + q_c.
struct CycleResult {
  double w_ab;
  double w_cd;
  double q_h;
  double q_c;
  double w_ext;
  std::optional<double> eta;  // set only in engine mode
  OperatingMode mode;
};

/// f(v) = sqrt(1 - v^2) ln((1+v)/(1-v)) / (2v), the solid-angle average of
/// the inverse Doppler factor. Equals 1 at rest and decreases to 0 as v -> 1.
double doppler_factor(Velocity v);

/// Planck occupation 1/(e^{beta omega} - 1). Throws on nonpositive inputs.
double planck_occupation(double beta, double omega);

/// Mean occupation of an oscillator thermalized while moving through a bath
/// at inverse temperature beta:
///   ln[(1 - e^{-x e^{u}}) / (1 - e^{-x e^{-u}})] / (2 x sinh u),
/// with x = beta*omega and u the rapidity. Reduces to planck_occupation at v = 0.
double mean_photon_moving(double beta, double omega, Velocity v);

double energy_a(const EngineParams& p);
double energy_b(const EngineParams& p);
double energy_c(const EngineParams& p);
double energy_d(const EngineParams& p);

/// All four corner energies; validates p.
CycleEnergies cycle_energies(const EngineParams& p);

/// Works, heats, extracted work and efficiency. Non-engine points come back
/// with mode = non_engine and no efficiency; never throws for valid params.
CycleResult evaluate_cycle(const EngineParams& p);

/// Mean energy of a thermal oscillator that equilibrated while moving through
/// a bath, before validation of a full EngineParams. Same as energy_a.
double moving_bath_energy(double beta, double omega, Velocity v);

}  // namespace otto
