#pragma once

#include <utility>
#include <vector>

#include "jlt/lattice.hpp"
#include "jlt/trieig.hpp"

namespace jlt {

/// How the infinite operators are cut down to finite matrices.
struct TruncationSpec {
  long margin = 32;            ///< free sites appended on each side of the window
  long growth_factor = 2;      ///< margin multiplier between adaptive refinements
  double stability_tol = 1e-12;
  long max_margin = 4096;      ///< adaptive refinement gives up beyond this
  double eig_tol = 1e-12;      ///< absolute bisection tolerance

  /// Throws UsageError on margin < 1, growth_factor < 2 or non-positive tolerances.
  void validate() const;
};

/// Diagonal potential on a finite window (zeros are kept: the window matters).
struct Potential {
  Site offset = 0;
  std::vector<double> values;

  double operator[](Site n) const noexcept {
    return (n < offset || n >= offset + static_cast<Site>(values.size()))
               ? 0.0
               : values[static_cast<std::size_t>(n - offset)];
  }
  Site begin_site() const noexcept { return offset; }
  Site end_site() const noexcept { return offset + static_cast<Site>(values.size()); }
};

enum class SchrodingerSign {
  Positive,  ///< D*D - b
  Negative,  ///< -D*D + b
};

/// Dirichlet truncation of W to [offset - margin, end + margin).
SymTridiag jacobi_matrix(const CompactPerturbation& p, const TruncationSpec& spec);

/// Dirichlet truncation of W to the explicit site range [first, last).
SymTridiag jacobi_matrix_on(const CompactPerturbation& p, Site first, Site last);

/// D*D - b (diag 2 - b, offdiag -1) or -D*D + b (diag b - 2, offdiag +1),
/// truncated to [offset - margin, end + margin).
SymTridiag schrodinger_matrix(const Potential& b, SchrodingerSign sign, const TruncationSpec& spec);

/// b_n -/+ (|a_{n-1} - 1| + |a_n - 1|) on the window widened by one site to
/// the right (a_n perturbs both n and n+1). Returns {b_minus, b_plus}.
std::pair<Potential, Potential> sandwich_potentials(const CompactPerturbation& p);

/// a == 1 perturbation carrying the given diagonal.
CompactPerturbation with_free_off_diagonal(const Potential& b);

/// Conjugation by diag((-1)^n): same diagonal, negated off-diagonal.
SymTridiag flip_offdiag_signs(const SymTridiag& t);

}  // namespace jlt
