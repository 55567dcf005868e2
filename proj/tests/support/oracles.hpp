#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the bisection eigensolver or the truncation machinery under test.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "jlt/lattice.hpp"

namespace jlt::oracle {

/// Dense symmetric eigenvalues by cyclic Jacobi rotations, ascending.
inline std::vector<double> dense_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][i];
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<double>> dense_tridiagonal(const std::vector<double>& diag,
                                                          const std::vector<double>& off) {
  const std::size_t n = diag.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = diag[i];
  for (std::size_t i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = off[i];
  return a;
}

/// Decaying-solution mismatch for W on all of Z at energy |E| > 2. Zeros are
/// exactly the bound states of the infinite (untruncated) operator.
inline double jost_mismatch(const CompactPerturbation& p, double e) {
  const double root = std::sqrt((e - 2.0) * (e + 2.0));
  const double r = e > 0 ? (e - root) / 2.0 : (e + root) / 2.0;  // |r| < 1, r + 1/r = e
  const Site first = p.begin_site();
  const Site end = p.end_site();
  // Left of the window u(n) = r^{first-1-n}; take u(first-1) = 1, u(first-2) = r.
  double prev = r;     // u(n-1)
  double cur = 1.0;    // u(n)
  for (Site n = first - 1; n <= end; ++n) {
    const double next = ((e - p.b_at(n)) * cur - p.a_at(n - 1) * prev) / p.a_at(n);
    prev = cur;
    cur = next;
    const double scale = std::max(std::abs(prev), std::abs(cur));
    if (scale > 1e100) {
      prev /= scale;
      cur /= scale;
    }
  }
  // Now prev = u(end), cur = u(end+1); a decaying tail needs u(end+1) = r u(end).
  return (cur - r * prev) / std::max(std::abs(prev), std::abs(cur));
}

/// Bound states of the infinite Jacobi operator by sign changes of the
/// mismatch on a grid graded toward the band edges, refined by bisection.
/// States shallower than 1e-9 are not resolved.
inline std::vector<double> exact_bound_states(const CompactPerturbation& p, bool above) {
  double bound = 2.0;
  for (Site n = p.begin_site() - 1; n <= p.end_site(); ++n) {
    bound = std::max(bound, std::abs(p.b_at(n)) + p.a_at(n - 1) + p.a_at(n));
  }
  const double sign = above ? 1.0 : -1.0;
  const int points = 40000;
  const double lo_exp = -9.0;
  const double hi_exp = std::log10(bound - 2.0 + 1.0);
  std::vector<double> roots;
  auto energy = [&](int i) { return sign * (2.0 + std::pow(10.0, lo_exp + (hi_exp - lo_exp) * i / points)); };
  double e_prev = energy(0);
  double f_prev = jost_mismatch(p, e_prev);
  for (int i = 1; i <= points; ++i) {
    const double e = energy(i);
    const double f = jost_mismatch(p, e);
    if ((f_prev < 0) != (f < 0)) {
      double a = e_prev, b = e, fa = f_prev;
      for (int it = 0; it < 200 && a != b; ++it) {
        const double m = 0.5 * (a + b);
        if (m == a || m == b) break;
        const double fm = jost_mismatch(p, m);
        if ((fa < 0) == (fm < 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    e_prev = e;
    f_prev = f;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Single-site eigenvalue of W with b_0 = beta: sqrt(4 + beta^2) on the side of beta.
inline double single_site_eigenvalue(double beta) { return std::copysign(std::sqrt(4.0 + beta * beta), beta); }

/// Single-site ratio at gamma = 1 with every constant in closed form:
/// c_hs = 4 / (sqrt3 pi), c_new_jacobi = 2/3, c_new_schrodinger = 2 / (3 sqrt3).
/// `variant` is the CLI name. Schrodinger variants see b = max(beta, 0).
inline double single_site_ratio_gamma1(const std::string& variant, double beta) {
  const double pi = 3.14159265358979323846;
  const double s3 = std::sqrt(3.0);
  const bool schrodinger = variant.rfind("new-gamma-schrodinger", 0) == 0;
  const double b = schrodinger ? std::max(beta, 0.0) : beta;
  if (b == 0.0) return 0.0;
  const double depth = std::sqrt(4.0 + b * b) - 2.0;  // distance from the band edge
  const double mag = std::abs(b);
  if (variant == "hs1") return std::sqrt((depth + 2.0) * (depth + 2.0) - 4.0) / mag;
  if (variant == "hs-gamma") return depth / (4.0 / (s3 * pi) * std::pow(mag, 1.5));
  if (variant == "new-gamma-jacobi") return depth / (2.0 / 3.0 * std::pow(mag, 1.5));
  return depth / (2.0 / (3.0 * s3) * std::pow(mag, 1.5));
}

/// Maximum of f over `points` equally spaced samples of [lo, hi].
template <typename F>
double grid_max(F f, double lo, double hi, int points) {
  double best = -INFINITY;
  for (int i = 0; i < points; ++i) best = std::max(best, f(lo + (hi - lo) * i / (points - 1)));
  return best;
}

}  // namespace jlt::oracle
