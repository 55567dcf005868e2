#pragma once

namespace jlt {

/// Lieb-Thirring constants for moment order gamma.
///
/// The new-constant fields are populated for every gamma >= 1/2 even though
/// the bounds they belong to are only proved for gamma >= 1; ltcheck decides
/// when they may be used.
struct LTConstants {
  double gamma_exponent = 0.0;
  double l_classical = 0.0;        ///< Gamma(g+1) / (2 sqrt(pi) Gamma(g+3/2))
  double c_hs = 0.0;               ///< 2 * 3^(g-1/2) * l_classical
  double c_new_schrodinger = 0.0;  ///< pi/sqrt(3) * l_classical
  double c_new_jacobi = 0.0;       ///< 3^(g-1/2) * pi/sqrt(3) * l_classical
};

/// ln Gamma(x) for x > 0. Absolute error below 1e-13 on (0, 100].
/// Throws DomainError for x <= 0 or NaN.
double log_gamma(double x);

/// Euler Beta function B(x, y) through log_gamma. Throws DomainError unless x, y > 0.
double beta_fn(double x, double y);

/// Classical phase-space constant in one dimension. Throws DomainError for gamma < 1/2.
double lt_classical(double gamma);

/// Throws DomainError for gamma < 1/2.
LTConstants constants_for(double gamma);

/// c_hs / c_new_jacobi; equals 2 sqrt(3) / pi for every gamma.
double improvement_factor(const LTConstants& c);

}  // namespace jlt
