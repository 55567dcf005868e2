#include "jlt/lemmalab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jlt/errors.hpp"
#include "jlt/quadrature.hpp"
#include "jlt/specfun.hpp"

namespace jlt {
namespace {

constexpr double kRankThreshold = 1e-10;
// Bisection tolerance for full-spectrum comparisons; spectra here are O(10).
constexpr double kSpectrumTol = 1e-14;

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double min_difference(const std::vector<double>& upper, const std::vector<double>& lower) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < upper.size(); ++k) gap = std::min(gap, upper[k] - lower[k]);
  return gap;
}

}  // namespace

double ortho_defect(const std::vector<LatticeVector>& vectors) {
  double defect = 0.0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i; j < vectors.size(); ++j) {
      const double target = i == j ? 1.0 : 0.0;
      defect = std::max(defect, std::abs(inner(vectors[i], vectors[j]) - target));
    }
  }
  return defect;
}

OrthonormalSystem orthonormalize(const std::vector<LatticeVector>& raw) {
  if (raw.empty()) throw UsageError("orthonormalize: empty family");

  Site first = std::numeric_limits<Site>::max();
  Site last = std::numeric_limits<Site>::min();
  for (const auto& v : raw) {
    if (v.empty()) continue;
    first = std::min(first, v.begin_site());
    last = std::max(last, v.end_site());
  }
  if (first >= last) throw UsageError("orthonormalize: vector 0 is linearly dependent on its predecessors");
  const auto length = static_cast<std::size_t>(last - first);

  std::vector<std::vector<double>> basis;
  basis.reserve(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) {
    std::vector<double> v = raw[k].window(first, length);
    const double original = std::sqrt(dot(v, v));
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        const double c = dot(q, v);
        for (std::size_t i = 0; i < length; ++i) v[i] -= c * q[i];
      }
    }
    const double residual = std::sqrt(dot(v, v));
    if (!(residual > kRankThreshold * original)) {
      throw UsageError("orthonormalize: vector " + std::to_string(k) + " is linearly dependent on its predecessors");
    }
    for (double& x : v) x /= residual;
    basis.push_back(std::move(v));
  }

  OrthonormalSystem system;
  for (auto& q : basis) system.vectors.emplace_back(first, std::move(q));
  system.ortho_defect = ortho_defect(system.vectors);
  return system;
}

double check_agmon(const LatticeVector& phi) {
  if (phi.empty()) throw UsageError("check_agmon: phi must be nonzero");
  double peak = 0.0;
  for (double x : phi.values()) peak = std::max(peak, x * x);
  return norm(phi) * norm(apply_d(phi)) - peak;
}

double check_dgsi(const OrthonormalSystem& system) {
  const double defect = ortho_defect(system.vectors);
  if (system.vectors.empty() || defect > kOrthoDefectLimit) {
    throw UsageError("check_dgsi: family is not orthonormal (defect " + std::to_string(defect) + ")");
  }
  double kinetic = 0.0;
  LatticeVector density;
  for (const auto& psi : system.vectors) {
    const LatticeVector dpsi = apply_d(psi);
    kinetic += inner(dpsi, dpsi);
    std::vector<double> sq(psi.values());
    for (double& x : sq) x *= x;
    density = density + LatticeVector(psi.offset(), std::move(sq));
  }
  double cubes = 0.0;
  for (double rho : density.values()) cubes += rho * rho * rho;
  return kinetic - cubes;
}

double check_unitary_equivalence(const Potential& b, const TruncationSpec& spec) {
  // -D*D + b directly, and D*D - 4 + b built as (D*D - (-b)) - 4.
  const SymTridiag negative = schrodinger_matrix(b, SchrodingerSign::Negative, spec);
  Potential minus_b = b;
  for (double& x : minus_b.values) x = -x;
  const SymTridiag laplacian = schrodinger_matrix(minus_b, SchrodingerSign::Positive, spec);
  std::vector<double> shifted(laplacian.diag());
  for (double& d : shifted) d -= 4.0;
  const SymTridiag positive(std::move(shifted), laplacian.offdiag());

  const auto lhs = all_eigenvalues(negative, kSpectrumTol);
  const auto rhs = all_eigenvalues(positive, kSpectrumTol);
  double gap = 0.0;
  for (std::size_t k = 0; k < lhs.size(); ++k) gap = std::max(gap, std::abs(lhs[k] - rhs[k]));
  return gap;
}

double al_lifting_value(double mu, double gamma, int quad_points) {
  if (!(mu > 0.0)) throw DomainError("al_lifting: mu must be positive");
  if (!(gamma > 1.0)) throw DomainError("al_lifting: gamma must exceed 1");

  // tau = mu s turns the integral into mu^gamma * int_0^1 s^(gamma-2) (1 - s) ds.
  // For gamma < 2 the factor s^(gamma-2) is unbounded at 0; s = u^(1/(gamma-1))
  // maps it to (1 - u^(1/(gamma-1))) / (gamma - 1), which is bounded.
  const GaussRule rule = gauss_legendre(quad_points);
  double unit;
  if (gamma < 2.0) {
    const double p = 1.0 / (gamma - 1.0);
    unit = integrate_graded_unit(rule, [p](double u) { return 1.0 - std::pow(u, p); }) / (gamma - 1.0);
  } else {
    const double e = gamma - 2.0;
    unit = integrate_graded_unit(rule, [e](double s) { return std::pow(s, e) * (1.0 - s); });
  }
  return std::pow(mu, gamma) * unit / beta_fn(gamma - 1.0, 2.0);
}

double check_al_lifting(double mu, double gamma, int quad_points) {
  const double exact = std::pow(mu, gamma);
  return std::abs(al_lifting_value(mu, gamma, quad_points) - exact) / exact;
}

double check_jensen(double alpha, double beta, double c, double q) {
  if (!(q >= 1.0)) throw DomainError("check_jensen: q must be >= 1");
  if (!(alpha >= 0.0) || !(beta >= 0.0) || !(c >= 0.0)) throw DomainError("check_jensen: arguments must be >= 0");
  return std::pow(3.0, q - 1.0) * (std::pow(alpha, q) + std::pow(beta, q) + std::pow(c, q)) -
         std::pow(alpha + beta + c, q);
}

std::pair<double, double> check_sandwich(const CompactPerturbation& p, const TruncationSpec& spec) {
  spec.validate();
  const auto [b_minus, b_plus] = sandwich_potentials(p);
  const Site first = p.begin_site() - spec.margin;
  const Site last = p.end_site() + 1 + spec.margin;

  const auto w = all_eigenvalues(jacobi_matrix_on(p, first, last), kSpectrumTol);
  const auto w_minus = all_eigenvalues(jacobi_matrix_on(with_free_off_diagonal(b_minus), first, last), kSpectrumTol);
  const auto w_plus = all_eigenvalues(jacobi_matrix_on(with_free_off_diagonal(b_plus), first, last), kSpectrumTol);
  return {min_difference(w, w_minus), min_difference(w_plus, w)};
}

std::pair<double, double> check_sandwich_2x2(double a) {
  // [[p, q], [q, p]] has eigenvalues p -/+ |q|.
  const double s = std::abs(a - 1.0);
  const auto smallest = [](double p, double q) { return p - std::abs(q); };
  return {smallest(s, a - 1.0), smallest(s, 1.0 - a)};
}

}  // namespace jlt
