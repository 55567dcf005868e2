#include "jlt/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <string>

#include "jlt/errors.hpp"
#include "jlt/random.hpp"

namespace jlt {
namespace {

constexpr int kMaxSupport = 12;
constexpr int kStartResamples = 32;
constexpr int kScanPoints = 21;

struct Evaluation {
  double ratio = 0.0;
  bool unstable = false;
};

Evaluation evaluate_at(const std::vector<double>& x, const SearchConfig& config) {
  const CompactPerturbation p = decode(x, config);
  try {
    return {check(p, config.variant, config.gamma, config.truncation).ratio, false};
  } catch (const StabilizationError&) {
    return {0.0, true};
  }
}

std::vector<Bounds> box(const SearchConfig& config) {
  std::vector<Bounds> out(static_cast<std::size_t>(config.support_size), config.b_bounds);
  if (is_schrodinger(config.variant)) {
    for (auto& b : out) {
      b.lo = std::max(b.lo, 0.0);
      b.hi = std::max(b.hi, 0.0);
    }
  }
  if (config.vary_a) out.insert(out.end(), static_cast<std::size_t>(config.support_size), config.a_bounds);
  return out;
}

void clamp_into(std::vector<double>& x, const std::vector<Bounds>& bounds) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], bounds[i].lo, bounds[i].hi);
}

/// Counts evaluations against a per-restart budget and remembers the best point.
class Budget {
public:
  Budget(const SearchConfig& config, int limit) : config_(config), limit_(limit) {}

  double operator()(const std::vector<double>& x) {
    ++used_;
    const Evaluation e = evaluate_at(x, config_);
    if (e.unstable) ++unstable_;
    if (best_x_.empty() || e.ratio > best_) {
      best_ = e.ratio;
      best_x_ = x;
    }
    return e.ratio;
  }

  bool exhausted() const { return used_ >= limit_; }
  int used() const { return used_; }
  int unstable() const { return unstable_; }
  double best() const { return best_; }
  const std::vector<double>& best_x() const { return best_x_; }

private:
  const SearchConfig& config_;
  int limit_;
  int used_ = 0;
  int unstable_ = 0;
  double best_ = 0.0;
  std::vector<double> best_x_;
};

void nelder_mead(const std::vector<double>& start, const std::vector<Bounds>& bounds, Budget& f) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> simplex{start};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> v = start;
    const double step = 0.1 * (bounds[i].hi - bounds[i].lo);
    v[i] = v[i] + step <= bounds[i].hi ? v[i] + step : v[i] - step;
    clamp_into(v, bounds);
    simplex.push_back(std::move(v));
  }
  // Minimise the negated ratio.
  std::vector<double> values;
  for (const auto& v : simplex) {
    if (f.exhausted()) return;
    values.push_back(-f(v));
  }

  std::vector<std::size_t> order(n + 1);
  while (!f.exhausted()) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];

    double diameter = 0.0;
    for (const auto& v : simplex) {
      for (std::size_t i = 0; i < n; ++i) diameter = std::max(diameter, std::abs(v[i] - simplex[best][i]));
    }
    if (values[worst] - values[best] <= 1e-14 && diameter <= 1e-9) return;
    if (diameter == 0.0) return;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t k : order) {
      if (k == worst) continue;
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i] / static_cast<double>(n);
    }
    auto along = [&](double t) {
      std::vector<double> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = centroid[i] + t * (simplex[worst][i] - centroid[i]);
      clamp_into(v, bounds);
      return v;
    };

    auto reflected = along(-1.0);
    const double f_reflected = -f(reflected);
    if (f_reflected < values[best]) {
      if (f.exhausted()) break;
      auto expanded = along(-2.0);
      const double f_expanded = -f(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = std::move(expanded);
        values[worst] = f_expanded;
      } else {
        simplex[worst] = std::move(reflected);
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = std::move(reflected);
      values[worst] = f_reflected;
      continue;
    }
    if (f.exhausted()) break;
    const bool outside = f_reflected < values[worst];
    auto contracted = along(outside ? -0.5 : 0.5);
    const double f_contracted = -f(contracted);
    if (outside ? f_contracted <= f_reflected : f_contracted < values[worst]) {
      simplex[worst] = std::move(contracted);
      values[worst] = f_contracted;
      continue;
    }
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == best) continue;
      if (f.exhausted()) return;
      for (std::size_t i = 0; i < n; ++i) simplex[k][i] = simplex[best][i] + 0.5 * (simplex[k][i] - simplex[best][i]);
      values[k] = -f(simplex[k]);
    }
  }
}

void coordinate_scan(const std::vector<double>& start, const std::vector<Bounds>& bounds, Budget& f) {
  std::vector<double> x = start;
  double fx = f(x);
  std::vector<Bounds> range = bounds;
  while (!f.exhausted()) {
    bool moved = false;
    for (std::size_t i = 0; i < x.size() && !f.exhausted(); ++i) {
      for (int k = 0; k < kScanPoints && !f.exhausted(); ++k) {
        std::vector<double> trial = x;
        trial[i] = range[i].lo + (range[i].hi - range[i].lo) * k / (kScanPoints - 1);
        const double ft = f(trial);
        if (ft > fx) {
          fx = ft;
          x = std::move(trial);
          moved = true;
        }
      }
    }
    // Shrink every window around the incumbent.
    bool collapsed = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double half = 0.25 * (range[i].hi - range[i].lo);
      range[i] = {std::max(bounds[i].lo, x[i] - half), std::min(bounds[i].hi, x[i] + half)};
      if (range[i].hi - range[i].lo > 1e-12) collapsed = false;
    }
    if (collapsed && !moved) return;
  }
}

}  // namespace

std::string_view to_string(Optimizer o) { return o == Optimizer::NelderMead ? "nelder-mead" : "coordinate-scan"; }

Optimizer parse_optimizer(std::string_view name) {
  if (name == "nelder-mead") return Optimizer::NelderMead;
  if (name == "coordinate-scan") return Optimizer::CoordinateScan;
  throw UsageError("unknown optimizer '" + std::string(name) + "'");
}

void SearchConfig::validate() const {
  if (support_size < 1 || support_size > kMaxSupport) {
    throw UsageError("search: support size must be in [1, " + std::to_string(kMaxSupport) + "]");
  }
  if (restarts < 1) throw UsageError("search: restarts must be >= 1");
  if (max_evals < 10) throw UsageError("search: max_evals must be >= 10");
  if (!(b_bounds.lo <= b_bounds.hi)) throw UsageError("search: b bounds are empty");
  if (vary_a) {
    if (is_schrodinger(variant)) throw UsageError("search: Schrodinger variants keep a == 1");
    if (!(a_bounds.lo > 0.0) || !(a_bounds.lo <= a_bounds.hi)) throw UsageError("search: a bounds must be positive");
  }
  if (variant != Variant::Hs1 && !(gamma >= min_gamma(variant))) {
    throw UsageError("search: variant " + std::string(to_string(variant)) + " requires gamma >= " +
                     std::to_string(min_gamma(variant)));
  }
  truncation.validate();
}

std::size_t SearchConfig::dimension() const {
  return static_cast<std::size_t>(support_size) * (vary_a ? 2 : 1);
}

CompactPerturbation decode(const std::vector<double>& x, const SearchConfig& config) {
  if (x.size() != config.dimension()) throw UsageError("decode: parameter vector has wrong length");
  std::vector<double> xc = x;
  clamp_into(xc, box(config));
  const auto k = static_cast<std::size_t>(config.support_size);
  std::vector<double> b(xc.begin(), xc.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<double> a = config.vary_a ? std::vector<double>(xc.begin() + static_cast<std::ptrdiff_t>(k), xc.end())
                                        : std::vector<double>(k, 1.0);
  return CompactPerturbation(0, std::move(b), std::move(a));
}

double ratio_objective(const std::vector<double>& x, const SearchConfig& config) {
  const Evaluation e = evaluate_at(x, config);
  if (e.unstable) std::clog << "warning: truncation did not stabilise; objective set to 0\n";
  return e.ratio;
}

SearchResult maximize_ratio(const SearchConfig& config) {
  config.validate();
  const std::vector<Bounds> bounds = box(config);
  SearchResult result;
  std::vector<double> best_x;

  for (int r = 0; r < config.restarts; ++r) {
    Rng rng(config.seed, static_cast<std::uint64_t>(r) + 1);
    Budget f(config, config.max_evals);

    // Draw starts until one has a nonempty discrete spectrum.
    std::vector<double> start(bounds.size());
    for (int attempt = 0; attempt < kStartResamples && !f.exhausted(); ++attempt) {
      for (std::size_t i = 0; i < start.size(); ++i) start[i] = rng.uniform(bounds[i].lo, bounds[i].hi);
      if (f(start) > 0.0) break;
    }
    if (!f.exhausted()) {
      if (config.optimizer == Optimizer::NelderMead) {
        nelder_mead(f.best() > 0.0 ? f.best_x() : start, bounds, f);
      } else {
        coordinate_scan(f.best() > 0.0 ? f.best_x() : start, bounds, f);
      }
    }

    RestartTrace t{start, f.best_x(), f.best(), f.used()};
    result.evals_used += f.used();
    result.unstable_evals += f.unstable();
    result.per_restart_ratios.push_back(f.best());
    if (r == 0 || f.best() > result.best_ratio) {
      result.best_ratio = f.best();
      best_x = f.best_x();
    }
    result.trace.push_back(std::move(t));
  }
  result.best_perturbation = decode(best_x, config);
  result.violation = result.best_ratio > 1.0 + kSolverSlack;
  return result;
}

}  // namespace jlt
