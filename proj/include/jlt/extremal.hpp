#pragma once

#include <cstdint>
#include <vector>

#include "jlt/lattice.hpp"
#include "jlt/ltcheck.hpp"
#include "jlt/operators.hpp"

namespace jlt {

enum class Optimizer { NelderMead, CoordinateScan };

std::string_view to_string(Optimizer o);
Optimizer parse_optimizer(std::string_view name);

struct Bounds {
  double lo = 0.0;
  double hi = 0.0;
};

struct SearchConfig {
  Variant variant = Variant::Hs1;
  double gamma = 1.0;
  int support_size = 1;
  bool vary_a = false;
  Bounds b_bounds{-10.0, 10.0};
  Bounds a_bounds{0.2, 3.0};
  int restarts = 8;
  std::uint64_t seed = 1;
  Optimizer optimizer = Optimizer::NelderMead;
  int max_evals = 400;  ///< per restart
  TruncationSpec truncation{};

  /// Throws UsageError on an inconsistent configuration.
  void validate() const;
  /// Number of free parameters: support_size, doubled when vary_a.
  std::size_t dimension() const;
};

struct RestartTrace {
  std::vector<double> start;
  std::vector<double> best_x;
  double best_ratio = 0.0;
  int evals = 0;
};

struct SearchResult {
  double best_ratio = 0.0;
  CompactPerturbation best_perturbation;
  int evals_used = 0;
  int unstable_evals = 0;  ///< objective evaluations that hit StabilizationError
  std::vector<double> per_restart_ratios;
  std::vector<RestartTrace> trace;
  bool violation = false;  ///< best_ratio above 1 + slack: a bug, not a discovery
};

/// Maps a parameter vector (b entries, then a entries when vary_a) to the
/// perturbation on sites [0, support_size), clamped to the bounds; the
/// Schrodinger variants additionally clamp b to b >= 0.
CompactPerturbation decode(const std::vector<double>& x, const SearchConfig& config);

/// ltcheck ratio at x; 0 when the spectrum outside the band is empty or the
/// truncation fails to stabilise.
double ratio_objective(const std::vector<double>& x, const SearchConfig& config);

/// Deterministic multi-start maximisation of ratio_objective.
SearchResult maximize_ratio(const SearchConfig& config);

}  // namespace jlt
