#pragma once

#include <utility>
#include <vector>

#include "jlt/lattice.hpp"
#include "jlt/operators.hpp"

namespace jlt {

/// Orthonormal family in l2(Z) together with its measured defect
/// max |<psi_i, psi_j> - delta_ij|.
struct OrthonormalSystem {
  std::vector<LatticeVector> vectors;
  double ortho_defect = 0.0;
};

inline constexpr double kOrthoDefectLimit = 1e-10;

/// max |<psi_i, psi_j> - delta_ij| over all pairs.
double ortho_defect(const std::vector<LatticeVector>& vectors);

/// Modified Gram-Schmidt with one reorthogonalisation pass. Throws UsageError
/// naming the first index whose residual falls below the rank threshold.
OrthonormalSystem orthonormalize(const std::vector<LatticeVector>& raw);

/// ||phi|| ||D phi|| - max_n |phi(n)|^2. Throws UsageError for phi = 0.
double check_agmon(const LatticeVector& phi);

/// sum_j ||D psi_j||^2 - sum_n rho(n)^3 with rho = sum_j psi_j^2.
/// Throws UsageError if the system's defect exceeds kOrthoDefectLimit.
double check_dgsi(const OrthonormalSystem& system);

/// max_k |lambda_k(-D*D + b) - lambda_k(D*D - 4 + b)| over full truncated spectra.
double check_unitary_equivalence(const Potential& b, const TruncationSpec& spec);

/// B(gamma-1, 2)^{-1} int_0^mu tau^{gamma-2} (mu - tau) dtau by Gauss-Legendre.
/// Throws DomainError unless mu > 0 and gamma > 1.
double al_lifting_value(double mu, double gamma, int quad_points = 64);

/// |al_lifting_value - mu^gamma| / mu^gamma.
double check_al_lifting(double mu, double gamma, int quad_points = 64);

/// 3^(q-1) (alpha^q + beta^q + c^q) - (alpha + beta + c)^q.
/// Throws DomainError for negative arguments or q < 1.
double check_jensen(double alpha, double beta, double c, double q);

/// Spectral ordering W- <= W <= W+ on the common window
/// [offset - margin, end + 1 + margin). Returns
/// {min_k lambda_k(W) - lambda_k(W-), min_k lambda_k(W+) - lambda_k(W)}.
std::pair<double, double> check_sandwich(const CompactPerturbation& p, const TruncationSpec& spec);

/// 2x2 form of the sandwich:
/// [[-|a-1|, 1], [1, -|a-1|]] <= [[0, a], [a, 0]] <= [[|a-1|, 1], [1, |a-1|]].
/// Returns the smallest eigenvalue of (middle - lower) and of (upper - middle).
std::pair<double, double> check_sandwich_2x2(double a);

}  // namespace jlt
