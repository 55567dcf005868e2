#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace jlt {

/// Argument outside the mathematical domain of a function (e.g. log_gamma(0)).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Caller-side misuse: inconsistent options, violated hypotheses, malformed input.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive truncation did not settle before the margin cap. Carries the
/// eigenvalue lists from the last two refinements for diagnostics.
class StabilizationError : public std::runtime_error {
public:
  struct Snapshot {
    long margin = 0;
    std::vector<double> below;
    std::vector<double> above;
  };

  StabilizationError(const std::string& what, Snapshot coarse, Snapshot fine)
      : std::runtime_error(what), coarse_(std::move(coarse)), fine_(std::move(fine)) {}

  const Snapshot& coarse() const noexcept { return coarse_; }
  const Snapshot& fine() const noexcept { return fine_; }

private:
  Snapshot coarse_;
  Snapshot fine_;
};

}  // namespace jlt
