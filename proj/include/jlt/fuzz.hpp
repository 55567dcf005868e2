#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jlt/lattice.hpp"
#include "jlt/ltcheck.hpp"
#include "jlt/operators.hpp"
#include "jlt/random.hpp"

namespace jlt {

/// Random Jacobi perturbation: support uniform in [1, max_support], offset in
/// [-15, 15], b uniform in [-b_max, b_max], a uniform in [a_lo, a_hi].
CompactPerturbation random_perturbation(Rng& rng, int max_support, double b_max = 5.0, double a_lo = 0.2,
                                        double a_hi = 3.0);

/// Finite-support vector with support inside [-15, 15] and standard normal entries.
LatticeVector random_vector(Rng& rng, int max_length = 20);

struct FuzzConfig {
  std::size_t count = 1000;          ///< perturbations for the theorem suite
  std::size_t lemma_count = 1000;    ///< cases per lemma predicate
  std::uint64_t seed = 7;
  int max_support = 9;
  std::vector<double> gammas{1.0, 1.5, 2.0, 3.0};
  std::vector<Variant> variants = all_variants();
  bool run_theorems = true;
  bool run_lemmas = true;
  TruncationSpec truncation{};
};

/// Worst observation of one predicate over a fuzz batch.
struct PredicateStats {
  std::string name;
  bool lower_is_worse = true;  ///< margins: min is worst; errors and ratios: max is worst
  double threshold = 0.0;      ///< pass iff value >= threshold (margins) or value <= threshold
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::size_t unstable = 0;    ///< theorem checks whose truncation never settled
  double worst = 0.0;
  std::uint64_t worst_seed = 0;

  void record(double value, std::uint64_t seed);
  bool passed() const { return violations == 0; }
};

struct FuzzSummary {
  std::vector<PredicateStats> theorems;  ///< one entry per (variant, gamma), plus rhs dominance
  std::vector<PredicateStats> lemmas;
  bool any_violation() const;
};

/// Per-case seed: cases are reproducible in isolation from (seed + index).
inline std::uint64_t case_seed(std::uint64_t base, std::size_t index) { return base + index; }

FuzzSummary fuzz_theorems(const FuzzConfig& config);
FuzzSummary fuzz_lemmas(const FuzzConfig& config);
/// Both suites, theorems first.
FuzzSummary run_fuzz(const FuzzConfig& config);

}  // namespace jlt
