#include "jlt/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jlt/errors.hpp"

namespace jlt {

LatticeVector::LatticeVector(Site offset, std::vector<double> values) : offset_(offset), values_(std::move(values)) {
  const auto first = std::find_if(values_.begin(), values_.end(), [](double v) { return v != 0.0; });
  if (first == values_.end()) {
    values_.clear();
    offset_ = 0;
    return;
  }
  const auto last = std::find_if(values_.rbegin(), values_.rend(), [](double v) { return v != 0.0; }).base();
  offset_ += first - values_.begin();
  values_ = std::vector<double>(first, last);
}

LatticeVector LatticeVector::delta(Site n, double value) { return LatticeVector(n, {value}); }

std::vector<double> LatticeVector::window(Site first, std::size_t length) const {
  std::vector<double> out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = (*this)[first + static_cast<Site>(i)];
  return out;
}

namespace {

struct Span {
  Site first;
  Site last;  // one past
};

Span hull(const LatticeVector& u, const LatticeVector& v) {
  if (u.empty()) return {v.begin_site(), v.end_site()};
  if (v.empty()) return {u.begin_site(), u.end_site()};
  return {std::min(u.begin_site(), v.begin_site()), std::max(u.end_site(), v.end_site())};
}

template <class Op>
LatticeVector combine(const LatticeVector& u, const LatticeVector& v, Op op) {
  const Span s = hull(u, v);
  std::vector<double> out(static_cast<std::size_t>(s.last - s.first));
  for (Site n = s.first; n < s.last; ++n) out[static_cast<std::size_t>(n - s.first)] = op(u[n], v[n]);
  return LatticeVector(s.first, std::move(out));
}

}  // namespace

LatticeVector operator+(const LatticeVector& u, const LatticeVector& v) {
  return combine(u, v, [](double x, double y) { return x + y; });
}

LatticeVector operator-(const LatticeVector& u, const LatticeVector& v) {
  return combine(u, v, [](double x, double y) { return x - y; });
}

LatticeVector operator*(double s, const LatticeVector& u) {
  std::vector<double> out(u.values());
  for (double& x : out) x *= s;
  return LatticeVector(u.offset(), std::move(out));
}

double inner(const LatticeVector& u, const LatticeVector& v) {
  if (u.empty() || v.empty()) return 0.0;
  const Site first = std::max(u.begin_site(), v.begin_site());
  const Site last = std::min(u.end_site(), v.end_site());
  double sum = 0.0;
  for (Site n = first; n < last; ++n) sum += u[n] * v[n];
  return sum;
}

double norm(const LatticeVector& u) {
  double sum = 0.0;
  for (double x : u.values()) sum += x * x;
  return std::sqrt(sum);
}

LatticeVector apply_d(const LatticeVector& phi) {
  if (phi.empty()) return {};
  const Site first = phi.begin_site() - 1;
  std::vector<double> out(phi.size() + 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Site n = first + static_cast<Site>(i);
    out[i] = phi[n + 1] - phi[n];
  }
  return LatticeVector(first, std::move(out));
}

LatticeVector apply_d_adjoint(const LatticeVector& psi) {
  if (psi.empty()) return {};
  const Site first = psi.begin_site();
  std::vector<double> out(psi.size() + 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Site n = first + static_cast<Site>(i);
    out[i] = psi[n - 1] - psi[n];
  }
  return LatticeVector(first, std::move(out));
}

LatticeVector apply_laplacian(const LatticeVector& phi) {
  if (phi.empty()) return {};
  const Site first = phi.begin_site() - 1;
  std::vector<double> out(phi.size() + 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Site n = first + static_cast<Site>(i);
    out[i] = (phi[n] - phi[n - 1]) - (phi[n + 1] - phi[n]);
  }
  return LatticeVector(first, std::move(out));
}

CompactPerturbation::CompactPerturbation(Site offset_, std::vector<double> b_, std::vector<double> a_)
    : offset(offset_), b(std::move(b_)), a(std::move(a_)) {
  if (a.size() != b.size()) {
    throw UsageError("perturbation: len(a) = " + std::to_string(a.size()) + " differs from len(b) = " +
                     std::to_string(b.size()));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] > 0.0)) throw UsageError("perturbation: a[" + std::to_string(i) + "] must be positive");
    if (!std::isfinite(a[i]) || !std::isfinite(b[i])) {
      throw UsageError("perturbation: non-finite entry at index " + std::to_string(i));
    }
  }
}

CompactPerturbation::CompactPerturbation(Site offset_, std::vector<double> b_)
    : CompactPerturbation(offset_, b_, std::vector<double>(b_.size(), 1.0)) {}

bool CompactPerturbation::free_off_diagonal() const noexcept {
  return std::all_of(a.begin(), a.end(), [](double x) { return x == 1.0; });
}

LatticeVector apply_jacobi(const CompactPerturbation& p, const LatticeVector& u) {
  if (u.empty()) return {};
  const Site first = u.begin_site() - 1;
  std::vector<double> out(u.size() + 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Site n = first + static_cast<Site>(i);
    out[i] = p.a_at(n - 1) * u[n - 1] + p.b_at(n) * u[n] + p.a_at(n) * u[n + 1];
  }
  return LatticeVector(first, std::move(out));
}

}  // namespace jlt
