#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jlt/lattice.hpp"
#include "jlt/operators.hpp"
#include "jlt/specfun.hpp"

namespace jlt {

/// Inequality variants. The Jacobi variants act on W; the Schrodinger variants
/// act on D*D - b (negative eigenvalues) or -D*D + b (positive eigenvalues)
/// with b >= 0 and a == 1.
enum class Variant {
  Hs1,
  HsGamma,
  NewGammaJacobi,
  NewGammaSchrodinger,
  NewGammaSchrodingerPositive,
};

/// The operator whose bound states a variant sums over.
enum class OperatorKind {
  Jacobi,               ///< W, essential spectrum [-2, 2]
  SchrodingerNegative,  ///< D*D - b, essential spectrum [0, 4]
  SchrodingerPositive,  ///< -D*D + b, essential spectrum [-4, 0]
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

inline constexpr double kSolverSlack = 1e-9;

std::string_view to_string(Variant v);
/// Throws UsageError on unknown names.
Variant parse_variant(std::string_view name);
const std::vector<Variant>& all_variants();

OperatorKind operator_kind(Variant v);
Interval essential_band(OperatorKind kind);
bool is_schrodinger(Variant v);

/// Smallest admissible gamma for a variant (hs1 has no gamma: returns 0).
double min_gamma(Variant v);

/// Checks gamma range and the sign / off-diagonal hypotheses of a variant.
/// Throws UsageError naming the violated hypothesis.
void validate_hypotheses(const CompactPerturbation& p, Variant v, double gamma);

struct BoundStates {
  std::vector<double> below;  ///< ascending, below the essential band
  std::vector<double> above;  ///< ascending, above the essential band
  long margin_used = 0;
};

struct BoundStateCount {
  std::size_t below = 0;
  std::size_t above = 0;
};

/// Number of eigenvalues of the untruncated operator below and above its
/// essential band, from the LDL^T pivots at the band edge with the free tails
/// summed in closed form. Threshold resonances are not counted.
BoundStateCount bound_state_count(const CompactPerturbation& p, OperatorKind kind);

/// Eigenvalues outside the essential band of the chosen operator, refining the
/// truncation margin by growth_factor until the truncation holds every bound
/// state counted by bound_state_count and every eigenvalue moves by less than
/// stability_tol. Throws StabilizationError past spec.max_margin.
BoundStates bound_states(const CompactPerturbation& p, OperatorKind kind, const TruncationSpec& spec);

/// Sum of sqrt(E^2 - 4) over both lists. Throws DomainError if some |E| < 2.
double riesz_hs1(const std::vector<double>& below, const std::vector<double>& above);

/// Sum |E - band.lo|^gamma over below plus |E - band.hi|^gamma over above.
double riesz_gamma(const std::vector<double>& below, const std::vector<double>& above, double gamma,
                   Interval band = {-2.0, 2.0});

/// Right-hand side of the variant's inequality, constant included.
double rhs_functional(const CompactPerturbation& p, Variant v, double gamma);

struct SpectralReport {
  Variant variant = Variant::Hs1;
  double gamma = 1.0;
  Interval essential;
  std::vector<double> eigenvalues_below;
  std::vector<double> eigenvalues_above;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  long margin_used = 0;
  LTConstants constants;
  bool violation = false;
};

/// Assembles a report from precomputed bound states (lets one spectrum serve many gammas).
SpectralReport evaluate(const CompactPerturbation& p, Variant v, double gamma, const BoundStates& states,
                        double slack = kSolverSlack);

SpectralReport check(const CompactPerturbation& p, Variant v, double gamma, const TruncationSpec& spec,
                     double slack = kSolverSlack);

}  // namespace jlt
