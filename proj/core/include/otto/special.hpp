#pragma once

// Overflow-free logarithmic kernels used by the cycle energetics.

namespace otto {

/// ln(sinh x) for x > 0, evaluated as x - ln 2 + ln(1 - e^{-2x}) so that
/// arguments far beyond the overflow point of sinh stay finite.
/// Throws std::domain_error for x <= 0 or NaN.
double log_sinh(double x);

/// ln(1 - e^{-x}) for x > 0. Switches between log(-expm1(-x)) and
/// log1p(-exp(-x)) at ln 2, which keeps full relative accuracy at both ends.
/// Throws std::domain_error for x <= 0 or NaN.
double log1m_exp(double x);

/// x / (e^x - 1), continuous at 0 where it equals 1. Defined for all x >= 0.
double bose_ratio(double x) noexcept;

/// x * coth(x), continuous at 0 where it equals 1. Defined for all x >= 0.
double x_coth_x(double x) noexcept;

}  // namespace otto
