#pragma once

#include <cstddef>
#include <vector>

namespace otto {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Builds the n-point rule by Newton iteration on P_n. Throws
/// std::invalid_argument for n == 0.
GaussLegendreRule gauss_legendre(std::size_t n);

/// Integrates f over [a, b] with the given rule.
template <typename F>
double integrate(const GaussLegendreRule& rule, double a, double b, F&& f) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

}  // namespace otto
