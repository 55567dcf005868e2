#include "jlt/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <sstream>

#include "jlt/errors.hpp"

namespace jlt {
namespace {

// JSON has no infinities; emit them as null like the library does for NaN.
json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string shortest(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  return json(x).dump();
}

std::vector<double> as_reals(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  const json& arr = j.at(key);
  if (!arr.is_array()) throw UsageError(std::string("perturbation: '") + key + "' must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& x : arr) {
    if (!x.is_number()) throw UsageError(std::string("perturbation: '") + key + "' must contain numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

std::string iso_timestamp() {
  std::time_t t;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  } else {
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

CompactPerturbation perturbation_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("perturbation: expected a JSON object");
  if (!j.contains("b")) throw UsageError("perturbation: missing 'b'");
  Site offset = 0;
  if (j.contains("offset")) {
    if (!j.at("offset").is_number_integer()) throw UsageError("perturbation: 'offset' must be an integer");
    offset = j.at("offset").get<Site>();
  }
  std::vector<double> b = as_reals(j, "b");
  if (!j.contains("a")) return CompactPerturbation(offset, std::move(b));
  return CompactPerturbation(offset, std::move(b), as_reals(j, "a"));
}

json to_json(const CompactPerturbation& p) {
  json j;
  j["offset"] = p.offset;
  j["b"] = p.b;
  j["a"] = p.a;
  return j;
}

json to_json(const RunManifest& m) {
  json params = json::object();
  for (const auto& [k, v] : m.parameters) params[k] = v;
  return json{{"command", m.command},
              {"parameters", params},
              {"tool_version", m.tool_version},
              {"seed", m.seed},
              {"timestamp", m.timestamp}};
}

json to_json(const LTConstants& c) {
  return json{{"gamma", c.gamma_exponent},
              {"l_classical", c.l_classical},
              {"c_hs", c.c_hs},
              {"c_new_schrodinger", c.c_new_schrodinger},
              {"c_new_jacobi", c.c_new_jacobi},
              {"improvement", improvement_factor(c)}};
}

json to_json(const SpectralReport& r) {
  return json{{"variant", to_string(r.variant)},
              {"gamma", r.gamma},
              {"essential_spectrum", {r.essential.lo, r.essential.hi}},
              {"eigenvalues_below", r.eigenvalues_below},
              {"eigenvalues_above", r.eigenvalues_above},
              {"lhs", number(r.lhs)},
              {"rhs", number(r.rhs)},
              {"ratio", number(r.ratio)},
              {"margin_used", r.margin_used},
              {"constants", to_json(r.constants)},
              {"violation", r.violation}};
}

json to_json(const SearchConfig& c) {
  json j{{"variant", to_string(c.variant)},
         {"gamma", c.gamma},
         {"support_size", c.support_size},
         {"vary_a", c.vary_a},
         {"b_bounds", {c.b_bounds.lo, c.b_bounds.hi}},
         {"restarts", c.restarts},
         {"seed", c.seed},
         {"optimizer", to_string(c.optimizer)},
         {"max_evals", c.max_evals},
         {"margin", c.truncation.margin}};
  if (c.vary_a) j["a_bounds"] = {c.a_bounds.lo, c.a_bounds.hi};
  return j;
}

json to_json(const SearchResult& r) {
  json trace = json::array();
  for (const auto& t : r.trace) {
    trace.push_back(json{{"start", t.start}, {"best_x", t.best_x}, {"best_ratio", number(t.best_ratio)}, {"evals", t.evals}});
  }
  return json{{"best_ratio", number(r.best_ratio)},
              {"best_perturbation", to_json(r.best_perturbation)},
              {"evals_used", r.evals_used},
              {"unstable_evals", r.unstable_evals},
              {"per_restart_ratios", r.per_restart_ratios},
              {"trace", trace},
              {"violation", r.violation}};
}

json to_json(const PredicateStats& s) {
  return json{{"name", s.name},
              {"worst_is", s.lower_is_worse ? "min" : "max"},
              {"threshold", s.threshold},
              {"checks", s.checks},
              {"violations", s.violations},
              {"unstable", s.unstable},
              {"worst", number(s.worst)},
              {"worst_seed", s.worst_seed}};
}

json to_json(const FuzzSummary& s) {
  json theorems = json::array();
  for (const auto& t : s.theorems) theorems.push_back(to_json(t));
  json lemmas = json::array();
  for (const auto& l : s.lemmas) lemmas.push_back(to_json(l));
  return json{{"theorems", theorems}, {"lemmas", lemmas}, {"any_violation", s.any_violation()}};
}

std::string csv_header_check() { return "variant,gamma,lhs,rhs,ratio,margin_used"; }

std::string csv_row(const SpectralReport& r) {
  std::ostringstream os;
  os << to_string(r.variant) << ',' << shortest(r.gamma) << ',' << shortest(r.lhs) << ',' << shortest(r.rhs) << ','
     << shortest(r.ratio) << ',' << r.margin_used;
  return os.str();
}

}  // namespace jlt
