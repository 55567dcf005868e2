#pragma once

#include <cstdint>
#include <vector>

namespace jlt {

using Site = std::int64_t;

/// Finite-support real sequence on Z: values[i] is the entry at site offset + i,
/// zero everywhere else. Construction trims zero margins; an all-zero vector
/// is stored empty with offset 0.
class LatticeVector {
public:
  LatticeVector() = default;
  LatticeVector(Site offset, std::vector<double> values);

  static LatticeVector delta(Site n, double value = 1.0);

  Site offset() const noexcept { return offset_; }
  const std::vector<double>& values() const noexcept { return values_; }
  bool empty() const noexcept { return values_.empty(); }
  std::size_t size() const noexcept { return values_.size(); }

  /// First and one-past-last stored site.
  Site begin_site() const noexcept { return offset_; }
  Site end_site() const noexcept { return offset_ + static_cast<Site>(values_.size()); }

  double operator[](Site n) const noexcept {
    return (n < begin_site() || n >= end_site()) ? 0.0 : values_[static_cast<std::size_t>(n - offset_)];
  }

  /// Dense copy on the window [first, first + length).
  std::vector<double> window(Site first, std::size_t length) const;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

private:
  Site offset_ = 0;
  std::vector<double> values_;
};

LatticeVector operator+(const LatticeVector& u, const LatticeVector& v);
LatticeVector operator-(const LatticeVector& u, const LatticeVector& v);
LatticeVector operator*(double s, const LatticeVector& u);

/// Standard l2 pairing over the union of supports.
double inner(const LatticeVector& u, const LatticeVector& v);
double norm(const LatticeVector& u);

/// (D phi)(n) = phi(n+1) - phi(n).
LatticeVector apply_d(const LatticeVector& phi);

/// (D* psi)(n) = psi(n-1) - psi(n).
LatticeVector apply_d_adjoint(const LatticeVector& psi);

/// (D*D phi)(n) = 2 phi(n) - phi(n+1) - phi(n-1), evaluated as D*(D phi)
/// with the same floating-point operations as the composition.
LatticeVector apply_laplacian(const LatticeVector& phi);

/// Jacobi perturbation of the free operator on a finite window.
///
/// b[i] is the diagonal entry at site offset + i; a[i] couples sites
/// offset + i and offset + i + 1. Outside the window b = 0 and a = 1.
/// The window is kept as given (no trimming) because it fixes the
/// truncation window of the derived matrices.
struct CompactPerturbation {
  Site offset = 0;
  std::vector<double> b;
  std::vector<double> a;

  CompactPerturbation() = default;
  /// Throws UsageError if sizes differ or an a entry is not > 0.
  CompactPerturbation(Site offset, std::vector<double> b, std::vector<double> a);
  /// a defaults to all ones.
  CompactPerturbation(Site offset, std::vector<double> b);

  std::size_t size() const noexcept { return b.size(); }
  bool empty() const noexcept { return b.empty(); }
  Site begin_site() const noexcept { return offset; }
  Site end_site() const noexcept { return offset + static_cast<Site>(b.size()); }

  double b_at(Site n) const noexcept {
    return (n < begin_site() || n >= end_site()) ? 0.0 : b[static_cast<std::size_t>(n - offset)];
  }
  double a_at(Site n) const noexcept {
    return (n < begin_site() || n >= end_site()) ? 1.0 : a[static_cast<std::size_t>(n - offset)];
  }

  bool free_off_diagonal() const noexcept;

  friend bool operator==(const CompactPerturbation&, const CompactPerturbation&) = default;
};

/// (W u)(n) = a_{n-1} u(n-1) + b_n u(n) + a_n u(n+1).
LatticeVector apply_jacobi(const CompactPerturbation& p, const LatticeVector& u);

}  // namespace jlt
