#include "jlt/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "jlt/errors.hpp"

namespace jlt {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw UsageError("gauss_legendre: need at least one node");
  GaussRule rule{std::vector<double>(static_cast<std::size_t>(n)), std::vector<double>(static_cast<std::size_t>(n))};
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_n from the Tricomi-style initial guess.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -z;
    rule.nodes[hi] = z;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  return rule;
}

double integrate(const GaussRule& rule, const std::function<double(double)>& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double centre = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(centre + half * rule.nodes[i]);
  return half * sum;
}

double integrate_graded_unit(const GaussRule& rule, const std::function<double(double)>& f, int levels) {
  // Left half: [0, 2^-(L+1)], [2^-(L+1), 2^-L], ..., [1/4, 1/2]; right half mirrored.
  double sum = 0.0;
  double edge = std::ldexp(1.0, -(levels + 1));
  sum += integrate(rule, f, 0.0, edge);
  sum += integrate(rule, f, 1.0 - edge, 1.0);
  for (int k = levels; k >= 1; --k) {
    const double inner = std::ldexp(1.0, -(k + 1));
    const double outer = std::ldexp(1.0, -k);
    sum += integrate(rule, f, inner, outer);
    sum += integrate(rule, f, 1.0 - outer, 1.0 - inner);
  }
  return sum;
}

}  // namespace jlt
