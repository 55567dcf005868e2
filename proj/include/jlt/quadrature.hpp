#pragma once

#include <functional>
#include <vector>

namespace jlt {

/// n-point Gauss-Legendre rule on [-1, 1], nodes ascending.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Throws UsageError for n < 1.
GaussRule gauss_legendre(int n);

/// Integral of f over [a, b] with one Gauss-Legendre panel.
double integrate(const GaussRule& rule, const std::function<double(double)>& f, double a, double b);

/// Integral of f over [0, 1] with panels graded geometrically (ratio 1/2)
/// toward both endpoints, `levels` panels per side. Integrands that are
/// bounded but non-smooth at an endpoint converge exponentially in levels.
double integrate_graded_unit(const GaussRule& rule, const std::function<double(double)>& f, int levels = 40);

}  // namespace jlt
