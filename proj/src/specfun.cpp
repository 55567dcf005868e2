#include "jlt/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "jlt/errors.hpp"

namespace jlt {
namespace {

// Stirling series in long double, valid once the argument is shifted past
// kStirlingStart. Coefficients are B_{2k} / (2k (2k-1)).
constexpr long double kStirlingStart = 15.0L;
constexpr std::array<long double, 8> kStirling = {
    1.0L / 12.0L,        -1.0L / 360.0L,  1.0L / 1260.0L,      -1.0L / 1680.0L,
    1.0L / 1188.0L,      -691.0L / 360360.0L, 1.0L / 156.0L, -3617.0L / 122400.0L,
};

long double stirling(long double z) {
  const long double half_log_two_pi = 0.918938533204672741780329736405617639861L;
  const long double inv = 1.0L / z;
  const long double inv2 = inv * inv;
  long double series = 0.0L;
  long double power = inv;
  for (long double coeff : kStirling) {
    series += coeff * power;
    power *= inv2;
  }
  return (z - 0.5L) * std::log(z) - z + half_log_two_pi + series;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
  if (std::isinf(x)) return x;

  long double z = x;
  long double product = 1.0L;
  while (z < kStirlingStart) {
    product *= z;
    z += 1.0L;
  }
  return static_cast<double>(stirling(z) - std::log(product));
}

double beta_fn(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("beta_fn: arguments must be positive");
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

double lt_classical(double gamma) {
  if (!(gamma >= 0.5)) throw DomainError("lt_classical: gamma must be >= 1/2, got " + std::to_string(gamma));
  const double two_sqrt_pi = 2.0 / std::numbers::inv_sqrtpi;
  return std::exp(log_gamma(gamma + 1.0) - log_gamma(gamma + 1.5)) / two_sqrt_pi;
}

LTConstants constants_for(double gamma) {
  LTConstants c;
  c.gamma_exponent = gamma;
  c.l_classical = lt_classical(gamma);
  const double lift = std::pow(3.0, gamma - 0.5);
  c.c_hs = 2.0 * lift * c.l_classical;
  c.c_new_schrodinger = std::numbers::pi * std::numbers::inv_sqrt3 * c.l_classical;
  c.c_new_jacobi = lift * c.c_new_schrodinger;
  return c;
}

double improvement_factor(const LTConstants& c) { return c.c_hs / c.c_new_jacobi; }

}  // namespace jlt
