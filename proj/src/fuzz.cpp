#include "jlt/fuzz.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "jlt/errors.hpp"
#include "jlt/lemmalab.hpp"

namespace jlt {
namespace {

// Stream salts keep the per-predicate generators independent for one case seed.
enum Salt : std::uint64_t {
  kTheorems = 1,
  kAgmon,
  kDgsi,
  kUnitary,
  kJensen,
  kLifting,
  kSandwich,
};

constexpr int kWindowLo = -15;
constexpr int kWindowHi = 15;
constexpr int kMaxSystem = 6;

PredicateStats make_stats(std::string name, bool lower_is_worse, double threshold) {
  PredicateStats s;
  s.name = std::move(name);
  s.lower_is_worse = lower_is_worse;
  s.threshold = threshold;
  s.worst = lower_is_worse ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
  return s;
}

std::string stats_name(Variant v, double gamma) {
  std::ostringstream os;
  os << to_string(v);
  if (v != Variant::Hs1) os << "@gamma=" << gamma;
  return os.str();
}

struct Spectrum {
  BoundStates states;
  bool unstable = false;
};

// On non-convergence the finest truncation is kept: Dirichlet truncation only
// shrinks the outside spectrum, so the ratio it yields is a lower bound.
Spectrum spectrum_of(const CompactPerturbation& p, OperatorKind kind, const TruncationSpec& spec) {
  try {
    return {bound_states(p, kind, spec), false};
  } catch (const StabilizationError& e) {
    return {{e.fine().below, e.fine().above, e.fine().margin}, true};
  }
}

CompactPerturbation nonnegative_part(const CompactPerturbation& p) {
  std::vector<double> b(p.b);
  for (double& x : b) x = std::abs(x);
  return CompactPerturbation(p.offset, std::move(b));
}

LatticeVector random_vector_in(Rng& rng, int max_length) {
  const long length = rng.integer(1, max_length);
  const long offset = rng.integer(kWindowLo, kWindowHi - length + 1);
  std::vector<double> values(static_cast<std::size_t>(length));
  for (double& x : values) x = rng.normal();
  return LatticeVector(offset, std::move(values));
}

}  // namespace

void PredicateStats::record(double value, std::uint64_t seed) {
  ++checks;
  const bool worse = lower_is_worse ? value < worst : value > worst;
  if (worse || std::isnan(value)) {
    worst = value;
    worst_seed = seed;
  }
  const bool ok = lower_is_worse ? value >= threshold : value <= threshold;
  if (!ok) ++violations;
}

bool FuzzSummary::any_violation() const {
  for (const auto* group : {&theorems, &lemmas}) {
    for (const auto& s : *group) {
      if (!s.passed()) return true;
    }
  }
  return false;
}

CompactPerturbation random_perturbation(Rng& rng, int max_support, double b_max, double a_lo, double a_hi) {
  const long support = rng.integer(1, max_support);
  const long offset = rng.integer(kWindowLo, kWindowHi);
  std::vector<double> b(static_cast<std::size_t>(support));
  std::vector<double> a(static_cast<std::size_t>(support));
  for (std::size_t i = 0; i < b.size(); ++i) {
    b[i] = rng.uniform(-b_max, b_max);
    a[i] = rng.uniform(a_lo, a_hi);
  }
  return CompactPerturbation(offset, std::move(b), std::move(a));
}

LatticeVector random_vector(Rng& rng, int max_length) { return random_vector_in(rng, max_length); }

FuzzSummary fuzz_theorems(const FuzzConfig& config) {
  config.truncation.validate();
  FuzzSummary summary;
  const double ratio_limit = 1.0 + kSolverSlack;

  // Index the stats by (variant, gamma) in a fixed order.
  std::vector<std::pair<Variant, double>> keys;
  for (Variant v : config.variants) {
    if (v == Variant::Hs1) {
      keys.emplace_back(v, 0.5);
      continue;
    }
    for (double g : config.gammas) {
      if (g < min_gamma(v)) throw UsageError("fuzz: gamma " + std::to_string(g) + " invalid for " +
                                             std::string(to_string(v)));
      keys.emplace_back(v, g);
    }
  }
  if (config.count == 0) return summary;
  for (const auto& [v, g] : keys) summary.theorems.push_back(make_stats(stats_name(v, g), false, ratio_limit));
  auto dominance = make_stats("rhs-dominance(new-gamma-jacobi/hs-gamma)", false, std::nextafter(1.0, 0.0));

  for (std::size_t i = 0; i < config.count; ++i) {
    const std::uint64_t seed = case_seed(config.seed, i);
    Rng rng(seed, kTheorems);
    const CompactPerturbation jacobi = random_perturbation(rng, config.max_support);
    const CompactPerturbation schrodinger = nonnegative_part(jacobi);

    std::optional<Spectrum> spectra[3];
    auto spectrum = [&](OperatorKind kind) -> const Spectrum& {
      auto& slot = spectra[static_cast<int>(kind)];
      if (!slot) slot = spectrum_of(kind == OperatorKind::Jacobi ? jacobi : schrodinger, kind, config.truncation);
      return *slot;
    };

    for (std::size_t k = 0; k < keys.size(); ++k) {
      const auto [v, g] = keys[k];
      const Spectrum& s = spectrum(operator_kind(v));
      const CompactPerturbation& p = is_schrodinger(v) ? schrodinger : jacobi;
      const SpectralReport report = evaluate(p, v, g, s.states);
      summary.theorems[k].record(report.ratio, seed);
      if (s.unstable) ++summary.theorems[k].unstable;
    }
    for (double g : config.gammas) {
      if (g < 1.0) continue;
      dominance.record(rhs_functional(jacobi, Variant::NewGammaJacobi, g) / rhs_functional(jacobi, Variant::HsGamma, g),
                       seed);
    }
  }
  summary.theorems.push_back(std::move(dominance));
  return summary;
}

FuzzSummary fuzz_lemmas(const FuzzConfig& config) {
  config.truncation.validate();
  FuzzSummary summary;
  auto agmon = make_stats("agmon", true, -1e-12);
  auto dgsi = make_stats("dgsi", true, -1e-10);
  auto unitary = make_stats("unitary-equivalence", false, 1e-12);
  auto jensen = make_stats("jensen", true, -1e-12);
  auto lifting = make_stats("al-lifting", false, 1e-8);
  auto sandwich_lower = make_stats("sandwich-lower", true, -1e-10);
  auto sandwich_upper = make_stats("sandwich-upper", true, -1e-10);

  for (std::size_t i = 0; i < config.lemma_count; ++i) {
    const std::uint64_t seed = case_seed(config.seed, i);
    {
      Rng rng(seed, kAgmon);
      agmon.record(check_agmon(random_vector_in(rng, 20)), seed);
    }
    {
      Rng rng(seed, kDgsi);
      const long n = rng.integer(1, kMaxSystem);
      for (;;) {
        std::vector<LatticeVector> raw;
        for (long j = 0; j < n; ++j) raw.push_back(random_vector_in(rng, 20));
        try {
          dgsi.record(check_dgsi(orthonormalize(raw)), seed);
          break;
        } catch (const UsageError&) {
          // Rank-deficient draw (supports too small); draw again from the same stream.
        }
      }
    }
    {
      Rng rng(seed, kUnitary);
      const CompactPerturbation p = random_perturbation(rng, config.max_support);
      TruncationSpec spec = config.truncation;
      spec.margin = rng.integer(1, 40);
      spec.max_margin = std::max(spec.max_margin, spec.margin);
      unitary.record(check_unitary_equivalence(Potential{p.offset, p.b}, spec), seed);
    }
    {
      Rng rng(seed, kJensen);
      const double x = rng.uniform(), y = rng.uniform(), z = rng.uniform();
      jensen.record(check_jensen(x, y, z, rng.uniform(1.0, 4.0)), seed);
    }
    {
      Rng rng(seed, kLifting);
      const double mu = rng.uniform(0.01, 10.0);
      const double gamma = rng.uniform(1.01, 5.0);
      lifting.record(check_al_lifting(mu, gamma), seed);
    }
    {
      Rng rng(seed, kSandwich);
      const auto [lower, upper] = check_sandwich(random_perturbation(rng, config.max_support), config.truncation);
      sandwich_lower.record(lower, seed);
      sandwich_upper.record(upper, seed);
    }
  }
  if (config.lemma_count > 0) {
    summary.lemmas = {agmon, dgsi, unitary, jensen, lifting, sandwich_lower, sandwich_upper};
  }
  return summary;
}

FuzzSummary run_fuzz(const FuzzConfig& config) {
  FuzzSummary summary;
  if (config.run_theorems) summary.theorems = fuzz_theorems(config).theorems;
  if (config.run_lemmas) summary.lemmas = fuzz_lemmas(config).lemmas;
  return summary;
}

}  // namespace jlt
