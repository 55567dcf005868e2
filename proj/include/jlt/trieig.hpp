#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace jlt {

/// Real symmetric tridiagonal matrix of order m >= 1.
class SymTridiag {
public:
  /// Throws UsageError if diag is empty or offdiag.size() != diag.size() - 1.
  SymTridiag(std::vector<double> diag, std::vector<double> offdiag);

  std::size_t order() const noexcept { return diag_.size(); }
  const std::vector<double>& diag() const noexcept { return diag_; }
  const std::vector<double>& offdiag() const noexcept { return offdiag_; }

  /// Gershgorin interval containing the whole spectrum.
  std::pair<double, double> gershgorin() const noexcept;

  friend bool operator==(const SymTridiag&, const SymTridiag&) = default;

private:
  std::vector<double> diag_;
  std::vector<double> offdiag_;
};

/// Number of eigenvalues strictly less than x, read from the negative pivots
/// of the LDL^T factorisation of T - xI. Only squared off-diagonals enter,
/// so the count is invariant under off-diagonal sign flips bit for bit.
std::size_t sturm_count(const SymTridiag& t, double x);

struct OutsideSpectrum {
  std::vector<double> below;  ///< ascending, all < lo
  std::vector<double> above;  ///< ascending, all > hi
};

/// Eigenvalues in (-inf, lo) and (hi, inf), each bracketed by bisection to
/// width <= tol. Throws UsageError if lo > hi or tol <= 0.
OutsideSpectrum eigenvalues_outside(const SymTridiag& t, double lo, double hi, double tol);

/// All eigenvalues, ascending, each to within tol. Throws UsageError if tol <= 0.
std::vector<double> all_eigenvalues(const SymTridiag& t, double tol);

}  // namespace jlt
