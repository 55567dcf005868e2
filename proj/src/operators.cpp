#include "jlt/operators.hpp"

#include <cmath>

#include "jlt/errors.hpp"

namespace jlt {

void TruncationSpec::validate() const {
  if (margin < 1) throw UsageError("truncation: margin must be >= 1");
  if (growth_factor < 2) throw UsageError("truncation: growth_factor must be >= 2");
  if (max_margin < margin) throw UsageError("truncation: max_margin must be >= margin");
  if (!(stability_tol > 0.0) || !(eig_tol > 0.0)) throw UsageError("truncation: tolerances must be positive");
}

SymTridiag jacobi_matrix_on(const CompactPerturbation& p, Site first, Site last) {
  if (last <= first) throw UsageError("jacobi_matrix_on: empty site range");
  const auto m = static_cast<std::size_t>(last - first);
  std::vector<double> diag(m);
  std::vector<double> off(m - 1);
  for (std::size_t i = 0; i < m; ++i) {
    const Site n = first + static_cast<Site>(i);
    diag[i] = p.b_at(n);
    if (i + 1 < m) off[i] = p.a_at(n);
  }
  return SymTridiag(std::move(diag), std::move(off));
}

SymTridiag jacobi_matrix(const CompactPerturbation& p, const TruncationSpec& spec) {
  spec.validate();
  return jacobi_matrix_on(p, p.begin_site() - spec.margin, p.end_site() + spec.margin);
}

SymTridiag schrodinger_matrix(const Potential& b, SchrodingerSign sign, const TruncationSpec& spec) {
  spec.validate();
  const Site first = b.begin_site() - spec.margin;
  const auto m = static_cast<std::size_t>(b.end_site() + spec.margin - first);
  const bool positive = sign == SchrodingerSign::Positive;
  std::vector<double> diag(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double bn = b[first + static_cast<Site>(i)];
    diag[i] = positive ? 2.0 - bn : bn - 2.0;
  }
  return SymTridiag(std::move(diag), std::vector<double>(m - 1, positive ? -1.0 : 1.0));
}

std::pair<Potential, Potential> sandwich_potentials(const CompactPerturbation& p) {
  if (p.empty()) return {};
  const std::size_t len = p.size() + 1;
  Potential minus{p.offset, std::vector<double>(len)};
  Potential plus{p.offset, std::vector<double>(len)};
  for (std::size_t i = 0; i < len; ++i) {
    const Site n = p.offset + static_cast<Site>(i);
    const double shift = std::abs(p.a_at(n - 1) - 1.0) + std::abs(p.a_at(n) - 1.0);
    minus.values[i] = p.b_at(n) - shift;
    plus.values[i] = p.b_at(n) + shift;
  }
  return {std::move(minus), std::move(plus)};
}

CompactPerturbation with_free_off_diagonal(const Potential& b) { return CompactPerturbation(b.offset, b.values); }

SymTridiag flip_offdiag_signs(const SymTridiag& t) {
  std::vector<double> off(t.offdiag());
  for (double& e : off) e = -e;
  return SymTridiag(t.diag(), std::move(off));
}

}  // namespace jlt
