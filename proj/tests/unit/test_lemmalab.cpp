#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "jlt/errors.hpp"
#include "jlt/fuzz.hpp"
#include "jlt/lemmalab.hpp"
#include "jlt/random.hpp"
#include "jlt/specfun.hpp"

using namespace jlt;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("orthonormalize examples", "[lemmalab]") {
  const auto d0 = LatticeVector::delta(0);
  const auto d1 = LatticeVector::delta(1);

  const OrthonormalSystem same = orthonormalize({d0, d1});
  REQUIRE(same.vectors.size() == 2);
  CHECK(same.vectors[0] == d0);
  CHECK(same.vectors[1] == d1);
  CHECK(same.ortho_defect == 0.0);

  const OrthonormalSystem projected = orthonormalize({d0, d0 + d1});
  CHECK(projected.vectors[0] == d0);
  CHECK(projected.vectors[1] == d1);

  Rng rng(5);
  std::vector<LatticeVector> raw;
  for (int i = 0; i < 5; ++i) raw.push_back(random_vector(rng));
  const OrthonormalSystem sys = orthonormalize(raw);
  CHECK(sys.ortho_defect <= 1e-10);
  CHECK(ortho_defect(sys.vectors) == sys.ortho_defect);
}

TEST_CASE("orthonormalize rejects dependent input", "[lemmalab]") {
  const auto d0 = LatticeVector::delta(0);
  const auto d1 = LatticeVector::delta(1);
  CHECK_THROWS_WITH(orthonormalize({d0, d1, d0 + 2.0 * d1}), ContainsSubstring("vector 2"));
  CHECK_THROWS_WITH(orthonormalize({d0, LatticeVector{}}), ContainsSubstring("vector 1"));
  CHECK_THROWS_AS(orthonormalize({d0, d0}), UsageError);
}

TEST_CASE("check_agmon examples", "[lemmalab]") {
  CHECK_THAT(check_agmon(LatticeVector::delta(0)), WithinAbs(std::sqrt(2.0) - 1.0, 1e-15));
  CHECK_THAT(check_agmon(LatticeVector(0, {1.0, 1.0})), WithinAbs(1.0, 1e-15));
  CHECK_THROWS_AS(check_agmon(LatticeVector{}), UsageError);
}

TEST_CASE("check_dgsi examples", "[lemmalab]") {
  CHECK_THAT(check_dgsi(orthonormalize({LatticeVector::delta(0)})), WithinAbs(1.0, 1e-15));
  CHECK_THAT(check_dgsi(orthonormalize({LatticeVector::delta(0), LatticeVector::delta(5)})), WithinAbs(2.0, 1e-15));
  for (Site k : {-1000, -3, 0, 7, 123456}) {
    CHECK(check_dgsi(orthonormalize({LatticeVector::delta(k)})) == 1.0);
  }
  OrthonormalSystem bad{{LatticeVector::delta(0), LatticeVector(0, {0.5, 1.0})}, 0.0};
  CHECK_THROWS_AS(check_dgsi(bad), UsageError);
}

TEST_CASE("check_unitary_equivalence examples", "[lemmalab]") {
  const TruncationSpec spec;
  CHECK(check_unitary_equivalence(Potential{}, spec) <= 1e-12);
  CHECK(check_unitary_equivalence(Potential{0, {1.0, -2.0, 0.5}}, spec) <= 1e-12);
  TruncationSpec tiny;
  tiny.margin = 1;
  CHECK(check_unitary_equivalence(Potential{-4, {3.0, 0.0, -1.0, 2.0}}, tiny) <= 1e-12);
}

TEST_CASE("al_lifting examples", "[lemmalab]") {
  CHECK(check_al_lifting(1.0, 2.0) <= 1e-12);
  CHECK_THAT(al_lifting_value(2.0, 3.0), WithinRel(8.0, 1e-12));
  CHECK(check_al_lifting(1.0, 1.5) <= 1e-8);
  CHECK_THROWS_AS(al_lifting_value(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(al_lifting_value(0.0, 2.0), DomainError);
}

TEST_CASE("al_lifting is accurate across its range", "[lemmalab][property]") {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const double mu = rng.uniform(0.01, 10.0);
    const double gamma = rng.uniform(1.01, 5.0);
    CHECK(check_al_lifting(mu, gamma) <= 1e-8);
  }
  for (double gamma : {1.001, 1.01, 1.1, 1.5, 1.99, 2.0, 2.01, 7.5}) CHECK(check_al_lifting(3.0, gamma) <= 1e-8);
}

TEST_CASE("check_jensen examples", "[lemmalab]") {
  CHECK_THAT(check_jensen(1.0, 1.0, 1.0, 2.0), WithinAbs(0.0, 1e-14));
  CHECK_THAT(check_jensen(1.0, 0.0, 0.0, 2.0), WithinAbs(2.0, 1e-14));
  CHECK(check_jensen(0.0, 0.0, 0.0, 1.0) == 0.0);
  CHECK_THROWS_AS(check_jensen(-1.0, 0.0, 0.0, 2.0), DomainError);
  CHECK_THROWS_AS(check_jensen(1.0, 0.0, 0.0, 0.5), DomainError);
}

TEST_CASE("check_sandwich examples", "[lemmalab]") {
  const TruncationSpec spec;
  const auto [lo1, hi1] = check_sandwich(CompactPerturbation(0, {1.0, -2.0}), spec);
  CHECK(lo1 == 0.0);
  CHECK(hi1 == 0.0);
  const auto [lo2, hi2] = check_sandwich(CompactPerturbation(0, {0.0}, {2.0}), spec);
  CHECK(lo2 >= -1e-10);
  CHECK(hi2 >= -1e-10);
}

TEST_CASE("check_sandwich_2x2 closed forms", "[lemmalab]") {
  // middle - lower = [[|a-1|, a-1], [a-1, |a-1|]]: eigenvalues |a-1| -/+ |a-1|, minimum 0.
  // For a = -1 the off-diagonal part of the difference is a - 1 = -2 with |a - 1| = 2.
  for (double a : {-1.0, 0.5, 3.0}) {
    const auto [lower, upper] = check_sandwich_2x2(a);
    CHECK_THAT(lower, WithinAbs(0.0, 1e-15));
    CHECK_THAT(upper, WithinAbs(0.0, 1e-15));
  }
  const auto [l1, u1] = check_sandwich_2x2(1.0);
  CHECK(l1 == 0.0);
  CHECK(u1 == 0.0);
}

TEST_CASE("lemma predicates hold on random inputs", "[lemmalab][property]") {
  Rng rng(1234);
  for (int i = 0; i < 500; ++i) {
    CHECK(check_agmon(random_vector(rng)) >= -1e-12);
    const double x = rng.uniform(), y = rng.uniform(), z = rng.uniform();
    CHECK(check_jensen(x, y, z, rng.uniform(1.0, 4.0)) >= -1e-12);
  }
  for (int i = 0; i < 100; ++i) {
    std::vector<LatticeVector> raw;
    const long n = rng.integer(1, 6);
    for (long j = 0; j < n; ++j) raw.push_back(random_vector(rng));
    try {
      CHECK(check_dgsi(orthonormalize(raw)) >= -1e-10);
    } catch (const UsageError&) {
      // dependent draw
    }
  }
  for (int i = 0; i < 50; ++i) {
    const auto [lo, hi] = check_sandwich(random_perturbation(rng, 9), {});
    CHECK(lo >= -1e-10);
    CHECK(hi >= -1e-10);
  }
}
