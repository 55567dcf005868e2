#include "jlt/ltcheck.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "jlt/errors.hpp"

namespace jlt {
namespace {

constexpr std::array<std::pair<Variant, std::string_view>, 5> kVariantNames = {{
    {Variant::Hs1, "hs1"},
    {Variant::HsGamma, "hs-gamma"},
    {Variant::NewGammaJacobi, "new-gamma-jacobi"},
    {Variant::NewGammaSchrodinger, "new-gamma-schrodinger"},
    {Variant::NewGammaSchrodingerPositive, "new-gamma-schrodinger-positive"},
}};

SymTridiag truncation(const CompactPerturbation& p, OperatorKind kind, long margin, const TruncationSpec& base) {
  TruncationSpec spec = base;
  spec.margin = margin;
  spec.max_margin = std::max(spec.max_margin, margin);
  switch (kind) {
    case OperatorKind::Jacobi:
      return jacobi_matrix(p, spec);
    case OperatorKind::SchrodingerNegative:
      return schrodinger_matrix(Potential{p.offset, p.b}, SchrodingerSign::Positive, spec);
    case OperatorKind::SchrodingerPositive:
      return schrodinger_matrix(Potential{p.offset, p.b}, SchrodingerSign::Negative, spec);
  }
  throw UsageError("unknown operator kind");
}

double max_shift(const std::vector<double>& x, const std::vector<double>& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

bool settled(const BoundStates& coarse, const BoundStates& fine, double tol) {
  return coarse.below.size() == fine.below.size() && coarse.above.size() == fine.above.size() &&
         max_shift(coarse.below, fine.below) < tol && max_shift(coarse.above, fine.above) < tol;
}

// Positive LDL^T pivots of (diag - x, offdiag) on a window whose free
// neighbours satisfy diag - x = -2 and |offdiag| = 1. On the free tails the
// pivot map d -> -2 - 1/d sends t = 1/(d + 1) to t - 1: the left tail
// converges to d = -1, and the right tail adds one more positive pivot
// exactly when the exit pivot lies in (-1, 0).
std::size_t positive_pivots_with_tails(const std::vector<double>& diag, const std::vector<double>& off, double x,
                                       double sign) {
  std::size_t count = 0;
  double d = -1.0;
  double coupling = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    d = (sign * diag[i] - x) - coupling * coupling / d;
    if (d == 0.0) d = std::numeric_limits<double>::min();
    if (d > 0.0) ++count;
    coupling = i < off.size() ? off[i] : 1.0;
  }
  d = -2.0 - coupling * coupling / d;
  if (d > 0.0) ++count;
  if (d > -1.0 && d < 0.0) ++count;
  return count;
}

double power_sum(const std::vector<double>& xs, double exponent) {
  double sum = 0.0;
  for (double x : xs) sum += std::pow(std::abs(x), exponent);
  return sum;
}

std::string format_gamma(double g) {
  std::ostringstream os;
  os << g;
  return os.str();
}

}  // namespace

std::string_view to_string(Variant v) {
  for (const auto& [variant, name] : kVariantNames) {
    if (variant == v) return name;
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  for (const auto& [variant, n] : kVariantNames) {
    if (n == name) return variant;
  }
  throw UsageError("unknown variant '" + std::string(name) + "'");
}

const std::vector<Variant>& all_variants() {
  static const std::vector<Variant> variants = [] {
    std::vector<Variant> out;
    for (const auto& entry : kVariantNames) out.push_back(entry.first);
    return out;
  }();
  return variants;
}

OperatorKind operator_kind(Variant v) {
  switch (v) {
    case Variant::NewGammaSchrodinger:
      return OperatorKind::SchrodingerNegative;
    case Variant::NewGammaSchrodingerPositive:
      return OperatorKind::SchrodingerPositive;
    default:
      return OperatorKind::Jacobi;
  }
}

Interval essential_band(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Jacobi:
      return {-2.0, 2.0};
    case OperatorKind::SchrodingerNegative:
      return {0.0, 4.0};
    case OperatorKind::SchrodingerPositive:
      return {-4.0, 0.0};
  }
  return {};
}

bool is_schrodinger(Variant v) { return operator_kind(v) != OperatorKind::Jacobi; }

double min_gamma(Variant v) {
  switch (v) {
    case Variant::Hs1:
      return 0.0;
    case Variant::HsGamma:
      return 0.5;
    default:
      return 1.0;
  }
}

void validate_hypotheses(const CompactPerturbation& p, Variant v, double gamma) {
  if (v != Variant::Hs1 && !(gamma >= min_gamma(v))) {
    throw UsageError("variant " + std::string(to_string(v)) + " requires gamma >= " + format_gamma(min_gamma(v)) +
                     ", got " + format_gamma(gamma));
  }
  if (is_schrodinger(v)) {
    if (!p.free_off_diagonal()) {
      throw UsageError("variant " + std::string(to_string(v)) + " requires a == 1 on the whole window");
    }
    if (std::any_of(p.b.begin(), p.b.end(), [](double b) { return b < 0.0; })) {
      throw UsageError("variant " + std::string(to_string(v)) + " requires b >= 0");
    }
  }
}

BoundStateCount bound_state_count(const CompactPerturbation& p, OperatorKind kind) {
  const SymTridiag t = truncation(p, kind, 1, TruncationSpec{});
  const Interval band = essential_band(kind);
  // Eigenvalues below lo are the eigenvalues of -T above -lo.
  return {positive_pivots_with_tails(t.diag(), t.offdiag(), -band.lo, -1.0),
          positive_pivots_with_tails(t.diag(), t.offdiag(), band.hi, 1.0)};
}

BoundStates bound_states(const CompactPerturbation& p, OperatorKind kind, const TruncationSpec& spec) {
  spec.validate();
  const Interval band = essential_band(kind);
  // Bisect well below the stability threshold so that bracketing noise
  // cannot masquerade as truncation drift.
  const double tol = std::min(spec.eig_tol, spec.stability_tol) / 16.0;

  auto solve = [&](long margin) {
    const auto out = eigenvalues_outside(truncation(p, kind, margin, spec), band.lo, band.hi, tol);
    return BoundStates{out.below, out.above, margin};
  };

  const BoundStateCount expected = bound_state_count(p, kind);
  BoundStates coarse = solve(spec.margin);
  BoundStates previous;
  for (;;) {
    const long next = coarse.margin_used * spec.growth_factor;
    if (next > spec.max_margin) {
      throw StabilizationError("bound states did not stabilise by margin " + std::to_string(coarse.margin_used),
                               {previous.margin_used, previous.below, previous.above},
                               {coarse.margin_used, coarse.below, coarse.above});
    }
    BoundStates fine = solve(next);
    // Dirichlet truncation can only lose bound states, never invent them.
    const bool complete = fine.below.size() >= expected.below && fine.above.size() >= expected.above;
    if (complete && settled(coarse, fine, spec.stability_tol)) return fine;
    previous = std::move(coarse);
    coarse = std::move(fine);
  }
}

double riesz_hs1(const std::vector<double>& below, const std::vector<double>& above) {
  double sum = 0.0;
  for (const auto* list : {&below, &above}) {
    for (double e : *list) {
      if (!(std::abs(e) >= 2.0)) throw DomainError("riesz_hs1: eigenvalue inside [-2, 2]");
      sum += std::sqrt((std::abs(e) - 2.0) * (std::abs(e) + 2.0));
    }
  }
  return sum;
}

double riesz_gamma(const std::vector<double>& below, const std::vector<double>& above, double gamma,
                   Interval band) {
  if (!(gamma >= 0.5)) throw DomainError("riesz_gamma: gamma must be >= 1/2");
  double sum = 0.0;
  for (double e : below) sum += std::pow(std::abs(e - band.lo), gamma);
  for (double e : above) sum += std::pow(std::abs(e - band.hi), gamma);
  return sum;
}

double rhs_functional(const CompactPerturbation& p, Variant v, double gamma) {
  validate_hypotheses(p, v, gamma);
  std::vector<double> a_shift(p.a.size());
  std::transform(p.a.begin(), p.a.end(), a_shift.begin(), [](double a) { return a - 1.0; });

  if (v == Variant::Hs1) return power_sum(p.b, 1.0) + 4.0 * power_sum(a_shift, 1.0);

  const double q = gamma + 0.5;
  const LTConstants c = constants_for(gamma);
  switch (v) {
    case Variant::HsGamma:
      return c.c_hs * (power_sum(p.b, q) + 4.0 * power_sum(a_shift, q));
    case Variant::NewGammaJacobi:
      return c.c_new_jacobi * (power_sum(p.b, q) + 4.0 * power_sum(a_shift, q));
    default:
      return c.c_new_schrodinger * power_sum(p.b, q);
  }
}

SpectralReport evaluate(const CompactPerturbation& p, Variant v, double gamma, const BoundStates& states,
                        double slack) {
  // hs1 is the sqrt(E^2 - 4) sum; it is recorded against gamma = 1/2.
  const double g = v == Variant::Hs1 ? 0.5 : gamma;
  SpectralReport r;
  r.variant = v;
  r.gamma = g;
  r.essential = essential_band(operator_kind(v));
  r.eigenvalues_below = states.below;
  r.eigenvalues_above = states.above;
  r.margin_used = states.margin_used;
  r.constants = constants_for(g);
  r.rhs = rhs_functional(p, v, g);
  r.lhs = v == Variant::Hs1 ? riesz_hs1(states.below, states.above)
                            : riesz_gamma(states.below, states.above, g, r.essential);
  if (r.rhs > 0.0) {
    r.ratio = r.lhs / r.rhs;
  } else {
    r.ratio = r.lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  r.violation = r.ratio > 1.0 + slack;
  return r;
}

SpectralReport check(const CompactPerturbation& p, Variant v, double gamma, const TruncationSpec& spec,
                     double slack) {
  validate_hypotheses(p, v, v == Variant::Hs1 ? 0.5 : gamma);
  return evaluate(p, v, gamma, bound_states(p, operator_kind(v), spec), slack);
}

}  // namespace jlt
