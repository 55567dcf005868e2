#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "jlt/errors.hpp"
#include "jlt/random.hpp"
#include "jlt/specfun.hpp"

using namespace jlt;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("log_gamma at exact points", "[specfun]") {
  CHECK_THAT(log_gamma(1.0), WithinAbs(0.0, 1e-15));
  CHECK_THAT(log_gamma(2.0), WithinAbs(0.0, 1e-15));
  CHECK_THAT(log_gamma(0.5), WithinAbs(std::log(std::sqrt(std::numbers::pi)), 1e-15));
  CHECK_THAT(log_gamma(5.0), WithinAbs(std::log(24.0), 1e-14));
  // ln 99! summed in long double.
  long double fact = 0.0L;
  for (int k = 2; k < 100; ++k) fact += std::log(static_cast<long double>(k));
  CHECK_THAT(log_gamma(100.0), WithinAbs(static_cast<double>(fact), 1e-13));
}

TEST_CASE("log_gamma matches lgammal on (0, 100]", "[specfun]") {
  double worst = 0.0;
  for (int i = 1; i <= 20000; ++i) {
    const double x = 100.0 * i / 20000.0;
    worst = std::max(worst, std::abs(log_gamma(x) - static_cast<double>(std::lgamma(static_cast<long double>(x)))));
  }
  for (double x : {1e-300, 1e-10, 1e-3, 0.123456}) {
    worst = std::max(worst, std::abs(log_gamma(x) - static_cast<double>(std::lgamma(static_cast<long double>(x)))));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("log_gamma rejects non-positive arguments", "[specfun]") {
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
  CHECK_THROWS_AS(log_gamma(std::nan("")), DomainError);
}

TEST_CASE("lt_classical closed forms", "[specfun]") {
  CHECK_THAT(lt_classical(1.5), WithinRel(0.1875, 1e-12));
  // Gamma(2) = 1, Gamma(5/2) = 3 sqrt(pi) / 4  =>  2 / (3 pi).
  CHECK_THAT(lt_classical(1.0), WithinRel(2.0 / (3.0 * std::numbers::pi), 1e-12));
  CHECK_THAT(lt_classical(1.0), WithinRel(0.2122065908, 1e-9));
  // Gamma(3/2) = sqrt(pi) / 2, Gamma(2) = 1  =>  1 / 4.
  CHECK_THAT(lt_classical(0.5), WithinRel(0.25, 1e-12));
  CHECK_THROWS_AS(lt_classical(0.49), DomainError);
}

TEST_CASE("lt_classical is strictly decreasing on [1/2, 5]", "[specfun]") {
  double prev = lt_classical(0.5);
  for (int i = 51; i <= 500; ++i) {
    const double v = lt_classical(i / 100.0);
    REQUIRE(v < prev);
    prev = v;
  }
}

TEST_CASE("constants_for at gamma = 1", "[specfun]") {
  const LTConstants c = constants_for(1.0);
  CHECK_THAT(c.c_new_schrodinger, WithinRel(2.0 / (3.0 * std::sqrt(3.0)), 1e-12));
  CHECK_THAT(c.c_new_schrodinger, WithinRel(0.3849001795, 1e-9));
  CHECK_THAT(c.c_new_jacobi, WithinRel(2.0 / 3.0, 1e-12));
  CHECK_THAT(c.c_hs, WithinRel(4.0 / (std::sqrt(3.0) * std::numbers::pi), 1e-12));
  CHECK_THAT(c.c_hs, WithinRel(0.7351051939, 1e-9));
  CHECK_THROWS_AS(constants_for(0.25), DomainError);
}

TEST_CASE("constants invariants across the gamma grid", "[specfun]") {
  const double expected = 2.0 * std::sqrt(3.0) / std::numbers::pi;
  CHECK_THAT(expected, WithinAbs(1.1026577908, 1e-10));
  for (double g : {0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0}) {
    const LTConstants c = constants_for(g);
    CHECK(c.l_classical > 0.0);
    CHECK(c.c_hs > 0.0);
    CHECK(c.c_new_schrodinger > 0.0);
    CHECK(c.c_new_jacobi > 0.0);
    CHECK(c.c_new_jacobi < c.c_hs);
    CHECK_THAT(improvement_factor(c), WithinAbs(expected, 1e-12));
  }
}

TEST_CASE("beta_fn values and symmetry", "[specfun]") {
  CHECK_THAT(beta_fn(1.0, 1.0), WithinRel(1.0, 1e-12));
  CHECK_THAT(beta_fn(2.0, 2.0), WithinRel(1.0 / 6.0, 1e-12));
  CHECK_THAT(beta_fn(0.5, 0.5), WithinRel(std::numbers::pi, 1e-12));
  CHECK_THROWS_AS(beta_fn(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(beta_fn(1.0, -2.0), DomainError);

  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform(0.05, 20.0);
    const double y = rng.uniform(0.05, 20.0);
    CHECK_THAT(beta_fn(x, y), WithinRel(beta_fn(y, x), 1e-14));
  }
}
