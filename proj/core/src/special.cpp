#include "otto/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace otto {

namespace {

void require_positive(double x, const char* name) {
  if (!(x > 0.0)) {
    throw std::domain_error(std::string(name) + ": argument must be > 0, got " +
                            std::to_string(x));
  }
}

}  // namespace

double log1m_exp(double x) {
  require_positive(x, "log1m_exp");
  if (x <= std::numbers::ln2) {
    return std::log(-std::expm1(-x));
  }
  return std::log1p(-std::exp(-x));
}

double log_sinh(double x) {
  require_positive(x, "log_sinh");
  return x - std::numbers::ln2 + log1m_exp(2.0 * x);
}

double bose_ratio(double x) noexcept {
  if (x == 0.0) return 1.0;
  // expm1 overflows past ~709.78; the ratio underflows long before that matters.
  if (x > 700.0) return x * std::exp(-x);
  return x / std::expm1(x);
}

double x_coth_x(double x) noexcept {
  if (x == 0.0) return 1.0;
  if (x > 20.0) return x;
  return x / std::tanh(x);
}

}  // namespace otto
