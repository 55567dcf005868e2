#include "jlt/trieig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jlt/errors.hpp"

namespace jlt {
namespace {

// Pivots smaller than this in magnitude are replaced by +-kPivotGuard. An
// exact zero becomes +kPivotGuard, which keeps "strictly less than x" when x
// is itself an eigenvalue.
constexpr double kPivotGuard = 1e-300;

class Bisector {
public:
  Bisector(const SymTridiag& t, double tol) : t_(t), tol_(tol) {
    squares_.reserve(t.offdiag().size());
    for (double e : t.offdiag()) squares_.push_back(e * e);
  }

  std::size_t count(double x) const {
    const auto& d = t_.diag();
    std::size_t negatives = 0;
    double pivot = d[0] - x;
    for (std::size_t i = 0;; ++i) {
      if (std::abs(pivot) < kPivotGuard) pivot = pivot < 0.0 ? -kPivotGuard : kPivotGuard;
      if (pivot < 0.0) ++negatives;
      if (i + 1 == d.size()) break;
      pivot = (d[i + 1] - x) - squares_[i] / pivot;
    }
    return negatives;
  }

  /// Fills out[k - base] for every eigenvalue index k in [count_lo, count_hi),
  /// whose eigenvalues lie in [lo, hi).
  void solve(double lo, double hi, std::size_t count_lo, std::size_t count_hi, std::size_t base,
             std::vector<double>& out) const {
    if (count_lo >= count_hi) return;
    const double mid = lo + 0.5 * (hi - lo);
    if (hi - lo <= tol_ || mid <= lo || mid >= hi) {
      std::fill(out.begin() + static_cast<std::ptrdiff_t>(count_lo - base),
                out.begin() + static_cast<std::ptrdiff_t>(count_hi - base), mid);
      return;
    }
    const std::size_t count_mid = std::clamp(count(mid), count_lo, count_hi);
    solve(lo, mid, count_lo, count_mid, base, out);
    solve(mid, hi, count_mid, count_hi, base, out);
  }

private:
  const SymTridiag& t_;
  double tol_;
  std::vector<double> squares_;
};

std::pair<double, double> padded_bounds(const SymTridiag& t) {
  auto [lo, hi] = t.gershgorin();
  const double pad = 1e-12 * (1.0 + std::max(std::abs(lo), std::abs(hi)));
  return {lo - pad, hi + pad};
}

void require_tol(double tol) {
  if (!(tol > 0.0)) throw UsageError("eigensolver: tol must be positive");
}

}  // namespace

SymTridiag::SymTridiag(std::vector<double> diag, std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
  if (diag_.empty()) throw UsageError("SymTridiag: order must be at least 1");
  if (offdiag_.size() + 1 != diag_.size()) {
    throw UsageError("SymTridiag: expected " + std::to_string(diag_.size() - 1) + " off-diagonal entries, got " +
                     std::to_string(offdiag_.size()));
  }
}

std::pair<double, double> SymTridiag::gershgorin() const noexcept {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(offdiag_[i - 1]);
    if (i < offdiag_.size()) radius += std::abs(offdiag_[i]);
    lo = std::min(lo, diag_[i] - radius);
    hi = std::max(hi, diag_[i] + radius);
  }
  return {lo, hi};
}

std::size_t sturm_count(const SymTridiag& t, double x) { return Bisector(t, 1.0).count(x); }

OutsideSpectrum eigenvalues_outside(const SymTridiag& t, double lo, double hi, double tol) {
  require_tol(tol);
  if (lo > hi) throw UsageError("eigenvalues_outside: lo > hi");

  const Bisector bisector(t, tol);
  const auto [g_lo, g_hi] = padded_bounds(t);
  const std::size_t m = t.order();
  OutsideSpectrum result;

  // Eigenvalues < lo carry indices [0, count(lo)).
  const std::size_t n_below = bisector.count(lo);
  result.below.resize(n_below);
  if (n_below > 0) bisector.solve(g_lo, lo, 0, n_below, 0, result.below);

  // Eigenvalues > hi carry indices [count(hi+), m) with hi+ the next double.
  const double hi_plus = std::nextafter(hi, std::numeric_limits<double>::infinity());
  const std::size_t n_upto_hi = bisector.count(hi_plus);
  result.above.resize(m - n_upto_hi);
  if (n_upto_hi < m) bisector.solve(hi_plus, g_hi, n_upto_hi, m, n_upto_hi, result.above);

  return result;
}

std::vector<double> all_eigenvalues(const SymTridiag& t, double tol) {
  require_tol(tol);
  const Bisector bisector(t, tol);
  const auto [g_lo, g_hi] = padded_bounds(t);
  std::vector<double> out(t.order());
  bisector.solve(g_lo, g_hi, 0, t.order(), 0, out);
  return out;
}

}  // namespace jlt
