#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "jlt/extremal.hpp"
#include "jlt/fuzz.hpp"
#include "jlt/lattice.hpp"
#include "jlt/ltcheck.hpp"
#include "jlt/specfun.hpp"

namespace jlt {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.3.0";

/// Provenance block embedded in every report.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::string tool_version = kToolVersion;
  std::uint64_t seed = 0;
  std::string timestamp;  ///< ISO-8601 UTC
};

/// Current UTC time, or SOURCE_DATE_EPOCH when that variable is set.
std::string iso_timestamp();

/// Perturbation file format: {"offset": int, "b": [...], "a": [...]} with "a" optional.
/// Throws UsageError on schema violations.
CompactPerturbation perturbation_from_json(const json& j);
json to_json(const CompactPerturbation& p);

json to_json(const RunManifest& m);
json to_json(const LTConstants& c);
json to_json(const SpectralReport& r);
json to_json(const SearchConfig& c);
json to_json(const SearchResult& r);
json to_json(const PredicateStats& s);
json to_json(const FuzzSummary& s);

/// Header and row for the CSV form of a check report.
std::string csv_header_check();
std::string csv_row(const SpectralReport& r);

}  // namespace jlt
