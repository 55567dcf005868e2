#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "jlt/errors.hpp"
#include "jlt/fuzz.hpp"
#include "jlt/report.hpp"

using namespace jlt;

TEST_CASE("perturbation files parse", "[report]") {
  const auto full = perturbation_from_json(json::parse(R"({"offset": -2, "b": [1, 0.5], "a": [2, 1]})"));
  CHECK(full == CompactPerturbation(-2, {1.0, 0.5}, {2.0, 1.0}));

  const auto no_a = perturbation_from_json(json::parse(R"({"offset": 4, "b": [3]})"));
  CHECK(no_a == CompactPerturbation(4, {3.0}));

  const auto no_offset = perturbation_from_json(json::parse(R"({"b": []})"));
  CHECK(no_offset.empty());
  CHECK(no_offset.offset == 0);
}

TEST_CASE("perturbation schema violations", "[report]") {
  CHECK_THROWS_AS(perturbation_from_json(json::parse("[1, 2]")), UsageError);
  CHECK_THROWS_AS(perturbation_from_json(json::parse(R"({"offset": 0})")), UsageError);
  CHECK_THROWS_AS(perturbation_from_json(json::parse(R"({"offset": 0.5, "b": [1]})")), UsageError);
  CHECK_THROWS_AS(perturbation_from_json(json::parse(R"({"b": "x"})")), UsageError);
  CHECK_THROWS_AS(perturbation_from_json(json::parse(R"({"b": [1, "x"]})")), UsageError);
  CHECK_THROWS_AS(perturbation_from_json(json::parse(R"({"b": [1, 2], "a": [1]})")), UsageError);
  CHECK_THROWS_AS(perturbation_from_json(json::parse(R"({"b": [1], "a": [-1]})")), UsageError);
}

TEST_CASE("perturbation round trip", "[report]") {
  const CompactPerturbation p(7, {0.1, -2.25, 3.0}, {1.5, 0.25, 1.0});
  CHECK(perturbation_from_json(json::parse(to_json(p).dump())) == p);
}

TEST_CASE("spectral report JSON and CSV", "[report]") {
  const SpectralReport r = check(CompactPerturbation(0, {3.0}), Variant::Hs1, 0.5, {});
  const json j = json::parse(to_json(r).dump());
  CHECK(j.at("variant") == "hs1");
  CHECK(j.at("eigenvalues_above").size() == 1);
  CHECK(j.at("violation") == false);
  CHECK(j.at("constants").contains("improvement"));

  CHECK(csv_header_check() == "variant,gamma,lhs,rhs,ratio,margin_used");
  const std::string row = csv_row(r);
  CHECK(row.rfind("hs1,", 0) == 0);
  CHECK(std::count(row.begin(), row.end(), ',') == 5);
}

TEST_CASE("fuzz summary JSON", "[report]") {
  FuzzConfig c;
  c.count = 3;
  c.lemma_count = 3;
  const FuzzSummary s = run_fuzz(c);
  const json j = to_json(s);
  CHECK(j.at("theorems").size() == s.theorems.size());
  CHECK(j.at("lemmas").size() == 7);
  CHECK(j.at("any_violation") == false);
  CHECK(j.at("theorems").at(0).at("name") == "hs1");
}

TEST_CASE("timestamps honour SOURCE_DATE_EPOCH", "[report]") {
  ::setenv("SOURCE_DATE_EPOCH", "0", 1);
  CHECK(iso_timestamp() == "1970-01-01T00:00:00Z");
  ::setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
  CHECK(iso_timestamp() == "2023-11-14T22:13:20Z");
  ::unsetenv("SOURCE_DATE_EPOCH");
  CHECK(iso_timestamp().size() == 20);
}
