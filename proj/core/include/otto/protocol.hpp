#pragma once

#include <filesystem>
#include <istream>
#include <span>
#include <string_view>
#include <vector>

namespace otto {

enum class RampKind { sudden, linear_omega, linear_omega_squared, tabulated };

std::string_view to_string(RampKind kind) noexcept;

/// Frequency schedule omega(t) on [0, duration] for one work stroke.
class DriveProtocol {
 public:
  /// Instantaneous quench; duration is zero.
  static DriveProtocol sudden(double omega_start, double omega_end);
  /// omega(t) interpolated linearly.
  static DriveProtocol linear_omega(double omega_start, double omega_end, double duration);
  /// omega^2(t) interpolated linearly.
  static DriveProtocol linear_omega_squared(double omega_start, double omega_end,
                                            double duration);
  /// Monotone piecewise-cubic (Fritsch-Carlson) interpolation of omega(t).
  /// times must start at 0 and be strictly increasing; omegas positive.
  static DriveProtocol tabulated(std::vector<double> times, std::vector<double> omegas);
  /// omega(t) = omega0 for all t.
  static DriveProtocol constant(double omega0, double duration);

  RampKind kind() const noexcept { return kind_; }
  double omega_start() const noexcept { return omega_start_; }
  double omega_end() const noexcept { return omega_end_; }
  double duration() const noexcept { return duration_; }

  double omega(double t) const;
  double omega_squared(double t) const;

  /// Points where omega(t) is only C^1; the integrator restarts there.
  /// Always contains 0 and duration.
  std::span<const double> breakpoints() const noexcept { return breaks_; }

  /// The time-mirrored schedule t -> duration - t (the matching expansion stroke).
  DriveProtocol reversed() const;

 private:
  DriveProtocol() = default;

  RampKind kind_ = RampKind::sudden;
  double omega_start_ = 1.0;
  double omega_end_ = 1.0;
  double duration_ = 0.0;
  std::vector<double> breaks_;
  std::vector<double> samples_;  // tabulated omegas
  std::vector<double> slopes_;   // tabulated d omega / dt at the knots
};

/// Reads a two-column `t,omega` CSV with a header row. Throws
/// std::runtime_error with the line number on malformed input.
DriveProtocol parse_protocol_csv(std::istream& in);
DriveProtocol load_protocol_csv(const std::filesystem::path& path);

}  // namespace otto
