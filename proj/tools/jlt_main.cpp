// jlt: command-line front end for the Jacobi-matrix Lieb-Thirring toolkit.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 an inequality or lemma
// predicate was violated (which indicates a bug, since each is a theorem).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jlt/errors.hpp"
#include "jlt/extremal.hpp"
#include "jlt/fuzz.hpp"
#include "jlt/ltcheck.hpp"
#include "jlt/report.hpp"
#include "jlt/specfun.hpp"

namespace {

using jlt::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct Output {
  std::string format = "json";
  std::string path;
};

void add_output_options(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", out.path, "Write the report here instead of stdout");
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string num(double x) { return json(x).dump(); }

jlt::CompactPerturbation read_perturbation(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw jlt::UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
  return jlt::perturbation_from_json(j);
}

std::vector<double> parse_reals(const std::string& list) {
  std::vector<double> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw jlt::UsageError("not a number: '" + item + "'");
    out.push_back(x);
  }
  return out;
}

std::vector<std::string> split(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

jlt::Bounds parse_bounds(const std::string& text) {
  const auto v = parse_reals(text);
  if (v.size() != 2) throw jlt::UsageError("bounds must be 'lo,hi', got '" + text + "'");
  return {v[0], v[1]};
}

/// JLT_SEED replaces the default seed; an explicit --seed wins over both.
std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t value) {
  if (flag->count() > 0) return value;
  if (const char* env = std::getenv("JLT_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const auto s = std::strtoull(env, &end, 10);
    if (*end != '\0') throw jlt::UsageError("JLT_SEED must be an unsigned integer");
    return s;
  }
  return value;
}

jlt::RunManifest manifest(const std::string& command, std::map<std::string, std::string> params,
                          std::uint64_t seed = 0) {
  jlt::RunManifest m;
  m.command = command;
  m.parameters = std::move(params);
  m.seed = seed;
  m.timestamp = jlt::iso_timestamp();
  return m;
}

// ---------------------------------------------------------------------------

struct ConstantsArgs {
  std::string gammas = "1,1.5,2,3";
  Output out;
};

int run_constants(const ConstantsArgs& args) {
  const auto gammas = parse_reals(args.gammas);
  if (gammas.empty()) throw jlt::UsageError("--gamma needs at least one value");
  for (double g : gammas) {
    if (!(g >= 0.5)) throw jlt::UsageError("gamma must be >= 1/2, got " + num(g));
  }
  if (args.out.format == "csv") {
    std::string text = "gamma,l_classical,c_hs,c_new_schrodinger,c_new_jacobi,improvement\n";
    for (double g : gammas) {
      const auto c = jlt::constants_for(g);
      text += num(g) + ',' + num(c.l_classical) + ',' + num(c.c_hs) + ',' + num(c.c_new_schrodinger) + ',' +
              num(c.c_new_jacobi) + ',' + num(jlt::improvement_factor(c)) + '\n';
    }
    write_text(text, args.out.path);
    return kExitOk;
  }
  json rows = json::array();
  for (double g : gammas) rows.push_back(jlt::to_json(jlt::constants_for(g)));
  json report{{"manifest", jlt::to_json(manifest("constants", {{"gamma", args.gammas}}))}, {"constants", rows}};
  write_text(dump(report), args.out.path);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string file;
  std::string variant;
  double gamma = 1.0;
  long margin = 32;
  double tol = 1e-12;
  Output out;
};

int run_check(const CheckArgs& args) {
  const jlt::Variant variant = jlt::parse_variant(args.variant);
  const auto p = read_perturbation(args.file);
  jlt::TruncationSpec spec;
  spec.margin = args.margin;
  spec.eig_tol = args.tol;
  spec.max_margin = std::max(spec.max_margin, args.margin);
  const jlt::SpectralReport r = jlt::check(p, variant, args.gamma, spec);

  if (args.out.format == "csv") {
    write_text(jlt::csv_header_check() + "\n" + jlt::csv_row(r) + "\n", args.out.path);
  } else {
    json report{{"manifest", jlt::to_json(manifest("check", {{"file", args.file},
                                                              {"variant", args.variant},
                                                              {"gamma", num(args.gamma)},
                                                              {"margin", std::to_string(args.margin)},
                                                              {"tol", num(args.tol)}}))},
                {"perturbation", jlt::to_json(p)},
                {"report", jlt::to_json(r)}};
    write_text(dump(report), args.out.path);
  }
  return r.violation ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------

struct FuzzArgs {
  std::size_t count = 1000;
  std::optional<std::size_t> lemma_count;
  std::uint64_t seed = 7;
  int support = 9;
  std::string gamma_grid = "1,1.5,2,3";
  std::string variant_set;
  std::string suites = "all";
  Output out;
  CLI::Option* seed_flag = nullptr;
};

int run_fuzz(const FuzzArgs& args) {
  jlt::FuzzConfig config;
  config.count = args.count;
  config.lemma_count = args.lemma_count.value_or(args.count);
  config.seed = resolve_seed(args.seed_flag, args.seed);
  if (args.support < 1) throw jlt::UsageError("--support must be >= 1");
  config.max_support = args.support;
  config.gammas = parse_reals(args.gamma_grid);
  if (!args.variant_set.empty()) {
    config.variants.clear();
    for (const auto& name : split(args.variant_set)) config.variants.push_back(jlt::parse_variant(name));
  }
  config.run_theorems = args.suites == "all" || args.suites == "theorems";
  config.run_lemmas = args.suites == "all" || args.suites == "lemmas";

  const jlt::FuzzSummary summary = jlt::run_fuzz(config);

  if (args.out.format == "csv") {
    std::string text = "suite,name,checks,violations,unstable,worst,worst_seed,threshold\n";
    for (const auto& [suite, group] : {std::pair{"theorem", &summary.theorems}, std::pair{"lemma", &summary.lemmas}}) {
      for (const auto& s : *group) {
        text += std::string(suite) + ',' + s.name + ',' + std::to_string(s.checks) + ',' +
                std::to_string(s.violations) + ',' + std::to_string(s.unstable) + ',' + jlt::to_json(s)["worst"].dump() +
                ',' + std::to_string(s.worst_seed) + ',' + num(s.threshold) + '\n';
      }
    }
    write_text(text, args.out.path);
  } else {
    json report{{"manifest", jlt::to_json(manifest("fuzz",
                                                   {{"count", std::to_string(config.count)},
                                                    {"lemma_count", std::to_string(config.lemma_count)},
                                                    {"support", std::to_string(config.max_support)},
                                                    {"gamma_grid", args.gamma_grid},
                                                    {"variant_set", args.variant_set.empty() ? "all" : args.variant_set},
                                                    {"suites", args.suites}},
                                                   config.seed))},
                {"summary", jlt::to_json(summary)}};
    write_text(dump(report), args.out.path);
  }
  return summary.any_violation() ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
  std::string variant;
  double gamma = 1.0;
  int k = 1;
  int restarts = 8;
  std::uint64_t seed = 1;
  std::string bounds;
  std::string a_bounds = "0.2,3";
  bool vary_a = false;
  std::string optimizer = "nelder-mead";
  int max_evals = 400;
  long margin = 32;
  std::string plot_out;
  int plot_points = 200;
  Output out;
  CLI::Option* seed_flag = nullptr;
};

int run_search(const SearchArgs& args) {
  jlt::SearchConfig config;
  config.variant = jlt::parse_variant(args.variant);
  config.gamma = args.gamma;
  config.support_size = args.k;
  config.restarts = args.restarts;
  config.seed = resolve_seed(args.seed_flag, args.seed);
  config.vary_a = args.vary_a;
  config.optimizer = jlt::parse_optimizer(args.optimizer);
  config.max_evals = args.max_evals;
  config.truncation.margin = args.margin;
  config.truncation.max_margin = std::max(config.truncation.max_margin, args.margin);
  config.b_bounds = args.bounds.empty() ? (jlt::is_schrodinger(config.variant) ? jlt::Bounds{0.01, 50.0}
                                                                               : jlt::Bounds{-10.0, 10.0})
                                        : parse_bounds(args.bounds);
  config.a_bounds = parse_bounds(args.a_bounds);
  if (args.plot_points < 2) throw jlt::UsageError("--plot-points must be >= 2");
  config.validate();

  const jlt::SearchResult result = jlt::maximize_ratio(config);
  if (result.unstable_evals > 0) {
    std::cerr << "warning: " << result.unstable_evals
              << " objective evaluations did not stabilise and were scored 0\n";
  }

  if (args.out.format == "csv") {
    std::string text = "restart,best_ratio,evals\n";
    for (std::size_t r = 0; r < result.trace.size(); ++r) {
      text += std::to_string(r) + ',' + num(result.trace[r].best_ratio) + ',' + std::to_string(result.trace[r].evals) +
              '\n';
    }
    write_text(text, args.out.path);
  } else {
    json report{{"manifest", jlt::to_json(manifest("search",
                                                   {{"variant", args.variant},
                                                    {"gamma", num(args.gamma)},
                                                    {"k", std::to_string(args.k)},
                                                    {"restarts", std::to_string(args.restarts)},
                                                    {"bounds", num(config.b_bounds.lo) + "," + num(config.b_bounds.hi)},
                                                    {"optimizer", args.optimizer}},
                                                   config.seed))},
                {"config", jlt::to_json(config)},
                {"result", jlt::to_json(result)}};
    write_text(dump(report), args.out.path);
  }

  if (!args.plot_out.empty() && config.support_size == 1) {
    std::string text = "# amplitude ratio\n";
    const double lo = jlt::is_schrodinger(config.variant) ? std::max(0.0, config.b_bounds.lo) : config.b_bounds.lo;
    const double hi = std::max(lo, config.b_bounds.hi);
    for (int i = 0; i < args.plot_points; ++i) {
      const double beta = lo + (hi - lo) * i / (args.plot_points - 1);
      std::vector<double> x{beta};
      if (config.vary_a) x.push_back(1.0);
      text += num(beta) + ' ' + num(jlt::ratio_objective(x, config)) + '\n';
    }
    write_text(text, args.plot_out);
  }
  return result.violation ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------

struct SpectrumArgs {
  std::string file;
  long margin = 32;
  double tol = 1e-12;
  Output out;
};

int run_spectrum(const SpectrumArgs& args) {
  const auto p = read_perturbation(args.file);
  jlt::TruncationSpec spec;
  spec.margin = args.margin;
  spec.eig_tol = args.tol;
  spec.max_margin = std::max(spec.max_margin, args.margin);
  const jlt::BoundStates s = jlt::bound_states(p, jlt::OperatorKind::Jacobi, spec);

  // E_1^+ > E_2^+ > ... > 2 and E_1^- < E_2^- < ... < -2.
  std::vector<double> above(s.above.rbegin(), s.above.rend());
  const std::vector<double>& below = s.below;

  if (args.out.format == "csv") {
    std::string text = "side,index,eigenvalue\n";
    for (std::size_t i = 0; i < above.size(); ++i) text += "+," + std::to_string(i + 1) + ',' + num(above[i]) + '\n';
    for (std::size_t i = 0; i < below.size(); ++i) text += "-," + std::to_string(i + 1) + ',' + num(below[i]) + '\n';
    write_text(text, args.out.path);
  } else {
    json report{{"manifest", jlt::to_json(manifest("spectrum", {{"file", args.file},
                                                                 {"margin", std::to_string(args.margin)},
                                                                 {"tol", num(args.tol)}}))},
                {"perturbation", jlt::to_json(p)},
                {"eigenvalues_above", above},
                {"eigenvalues_below", below},
                {"margin_used", s.margin_used}};
    write_text(dump(report), args.out.path);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Lieb-Thirring inequalities for Jacobi matrices: constants, checks, fuzzing, extremal search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", jlt::kToolVersion);
  app.footer(
      "Exit codes: 0 ok, 1 usage/IO error, 2 predicate violated.\n"
      "Environment: JLT_SEED overrides the default seed of fuzz/search (an explicit --seed wins);\n"
      "SOURCE_DATE_EPOCH pins the manifest timestamp for byte-identical reports.");

  ConstantsArgs constants_args;
  auto* constants = app.add_subcommand("constants", "Tabulate L^cl, c_hs, the new constants and their ratio");
  constants->add_option("--gamma", constants_args.gammas, "Comma-separated moment orders (>= 1/2)");
  add_output_options(constants, constants_args.out);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Evaluate one inequality on a perturbation file");
  check->add_option("file", check_args.file, "Perturbation JSON {offset, b, a}")->required();
  check->add_option("--variant", check_args.variant,
                    "hs1 | hs-gamma | new-gamma-jacobi | new-gamma-schrodinger | new-gamma-schrodinger-positive")
      ->required();
  check->add_option("--gamma", check_args.gamma, "Moment order");
  check->add_option("--margin", check_args.margin, "Initial truncation margin");
  check->add_option("--tol", check_args.tol, "Eigenvalue tolerance");
  add_output_options(check, check_args.out);

  FuzzArgs fuzz_args;
  auto* fuzz = app.add_subcommand("fuzz", "Seeded random checks of every inequality and lemma");
  fuzz->add_option("--count", fuzz_args.count, "Random perturbations for the inequality suite");
  fuzz->add_option("--lemma-count", fuzz_args.lemma_count, "Cases per lemma predicate (default: --count)");
  fuzz_args.seed_flag = fuzz->add_option("--seed", fuzz_args.seed, "Base seed");
  fuzz->add_option("--support", fuzz_args.support, "Maximum support size");
  fuzz->add_option("--gamma-grid", fuzz_args.gamma_grid, "Comma-separated gammas");
  fuzz->add_option("--variant-set", fuzz_args.variant_set, "Comma-separated variants (default: all)");
  fuzz->add_option("--suites", fuzz_args.suites, "all | theorems | lemmas")
      ->check(CLI::IsMember({"all", "theorems", "lemmas"}));
  add_output_options(fuzz, fuzz_args.out);

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Maximise lhs/rhs over perturbations");
  search->add_option("--variant", search_args.variant, "Inequality variant")->required();
  search->add_option("--gamma", search_args.gamma, "Moment order");
  search->add_option("--k", search_args.k, "Support size");
  search->add_option("--restarts", search_args.restarts, "Independent restarts");
  search_args.seed_flag = search->add_option("--seed", search_args.seed, "Seed");
  search->add_option("--bounds", search_args.bounds, "Box for b entries as lo,hi");
  search->add_option("--a-bounds", search_args.a_bounds, "Box for a entries as lo,hi (with --vary-a)");
  search->add_flag("--vary-a", search_args.vary_a, "Also optimise the off-diagonal entries");
  search->add_option("--optimizer", search_args.optimizer, "nelder-mead | coordinate-scan")
      ->check(CLI::IsMember({"nelder-mead", "coordinate-scan"}));
  search->add_option("--max-evals", search_args.max_evals, "Objective evaluations per restart");
  search->add_option("--margin", search_args.margin, "Initial truncation margin");
  search->add_option("--plot-out", search_args.plot_out, "Two-column amplitude/ratio data file (k = 1)");
  search->add_option("--plot-points", search_args.plot_points, "Samples in the plot data file");
  add_output_options(search, search_args.out);

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "List the bound states of W outside [-2, 2]");
  spectrum->add_option("file", spectrum_args.file, "Perturbation JSON {offset, b, a}")->required();
  spectrum->add_option("--margin", spectrum_args.margin, "Initial truncation margin");
  spectrum->add_option("--tol", spectrum_args.tol, "Eigenvalue tolerance");
  add_output_options(spectrum, spectrum_args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*constants) return run_constants(constants_args);
    if (*check) return run_check(check_args);
    if (*fuzz) return run_fuzz(fuzz_args);
    if (*search) return run_search(search_args);
    if (*spectrum) return run_spectrum(spectrum_args);
  } catch (const jlt::StabilizationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
