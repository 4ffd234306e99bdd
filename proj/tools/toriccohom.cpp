// toriccohom: line bundle cohomology on simplicial projective toric varieties.

#include <algorithm>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "toric/engine.hpp"
#include "toric/oracle.hpp"
#include "toric/report.hpp"

namespace {

constexpr int kExitParse = 1;
constexpr int kExitNonFinite = 2;
constexpr int kExitCheckFailed = 3;
constexpr std::size_t kRationomLimit = 50;

struct RunConfig {
  std::string input_path;
  std::vector<std::string> classes;
  std::string box;
  std::string format = "table";
  bool verbose = false;
  bool oracle_check = false;
  bool serre_check = false;
  bool unfiltered = false;
  int generator_cap = toric::kDefaultGeneratorCap;
  unsigned threads = 0;
};

void warn_if_singular(const toric::ToricVarietyModel& model) {
  if (auto smooth = toric::appears_smooth(model); smooth && !*smooth) {
    std::cerr << "warning: input does not look smooth; Cl(X) and Pic(X) may differ\n";
  }
}

int run(const RunConfig& cfg) {
  std::unique_ptr<toric::ToricVarietyModel> model;
  std::vector<toric::DivisorClass> alphas;
  try {
    model = std::make_unique<toric::ToricVarietyModel>(toric::load_variety(cfg.input_path));
    for (const auto& c : cfg.classes) alphas.push_back(toric::parse_class(c));
    if (!cfg.box.empty()) {
      const auto ranges = toric::parse_box(cfg.box);
      auto boxed = toric::class_box(ranges);
      alphas.insert(alphas.end(), boxed.begin(), boxed.end());
    }
    if (alphas.empty()) throw toric::ModelError("no divisor classes requested (use --class or --box)");
    for (const auto& a : alphas) model->check_class(a);
    if (cfg.oracle_check && !model->has_fan()) throw toric::ModelError("--oracle-check needs max_cones in the input");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  warn_if_singular(*model);

  toric::EngineOptions options;
  options.summation = cfg.unfiltered ? toric::Summation::kUnfiltered : toric::Summation::kFiltered;
  options.generator_cap = cfg.generator_cap;
  options.threads = cfg.threads;

  std::unique_ptr<toric::CohomologyEngine> engine;
  std::unique_ptr<toric::FanOracle> oracle;
  try {
    engine = std::make_unique<toric::CohomologyEngine>(*model, options);
    if (cfg.oracle_check) oracle = std::make_unique<toric::FanOracle>(*model);
  } catch (const toric::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  if (!engine->filter_sound()) {
    std::cerr << "warning: complement filter drops degrees with nonzero multiplicity; summing over all of P(I)\n";
  }

  const auto batch = engine->cohomology_all(alphas);
  std::vector<toric::ReportRow> rows;
  bool non_finite = false;
  bool check_failed = false;
  for (const auto& entry : batch) {
    toric::ReportRow row{entry};
    if (!entry.result) {
      if (entry.non_finite) non_finite = true;
      else check_failed = true;
      rows.push_back(std::move(row));
      continue;
    }
    if (oracle) {
      try {
        row.oracle = oracle->cohomology(entry.alpha) == entry.result->dims ? toric::CheckStatus::kPass
                                                                            : toric::CheckStatus::kFail;
      } catch (const toric::NonFiniteCohomology&) {
        row.oracle = toric::CheckStatus::kFail;
        row.check_note = "(oracle: non-finite)";
      }
    }
    if (cfg.serre_check) {
      const auto report = toric::serre_check(*engine, entry.alpha);
      row.serre = report.pass ? toric::CheckStatus::kPass : toric::CheckStatus::kFail;
      if (!report.pass) row.check_note += (row.check_note.empty() ? "" : " ") + ("(" + report.report + ")");
    }
    if (row.oracle == toric::CheckStatus::kFail || row.serre == toric::CheckStatus::kFail) check_failed = true;
    if (cfg.verbose) {
      for (const auto& e : entry.result->breakdown) {
        if (e.count.is_infinite() || e.count.is_zero() || e.count.value() > kRationomLimit) continue;
        row.rationoms.emplace_back(
            e.degree, engine->counter().enumerate(toric::NegGroupQuery{entry.alpha, e.degree}, kRationomLimit));
      }
    }
    rows.push_back(std::move(row));
  }

  if (cfg.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) out.push_back(toric::row_to_json(row, model->n()));
    std::cout << out.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << toric::csv_header(*model) << '\n';
    for (const auto& row : rows) std::cout << toric::csv_row(row) << '\n';
  } else {
    for (const auto& row : rows) std::cout << toric::table_row(row, *model, cfg.verbose);
  }
  for (const auto& row : rows) {
    if (!row.entry.result) std::cerr << "error " << toric::format_class(row.entry.alpha) << ": " << row.entry.error << '\n';
  }
  if (non_finite) return kExitNonFinite;
  if (check_failed) return kExitCheckFailed;
  return 0;
}

int info(const std::string& path, int cap) {
  try {
    const auto model = toric::load_variety(path);
    const toric::CohomologyEngine engine(model, toric::EngineOptions{toric::Summation::kFiltered, cap, 1});
    std::cout << "coordinates: " << model.n() << "  dimension: " << model.d()
              << "  SR generators: " << model.generator_count() << '\n';
    std::cout << "SR ideal:";
    for (auto g : model.sr_generators()) std::cout << ' ' << toric::format_set(g);
    std::cout << "\ncanonical class: " << toric::format_class(toric::canonical_class(model)) << '\n';
    if (auto smooth = toric::appears_smooth(model)) std::cout << "smooth: " << (*smooth ? "yes" : "no") << '\n';
    std::cout << "|P(I)| = " << engine.degrees().entries().size() << ", summed degrees = "
              << engine.summed_degrees().size() << (engine.filter_sound() ? "" : " (filter unsound, unfiltered)")
              << '\n';
    std::cout << "multiplicity factors:\n";
    for (const auto& [deg, factors] : engine.table().entries()) {
      if (factors.empty()) continue;
      std::cout << "  " << toric::degree_bitstring(deg, model.n()) << ':';
      for (const auto& [r, beta] : factors) std::cout << " beta_" << r << '=' << beta;
      std::cout << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return 0;
}

int hochster(const std::string& path) {
  try {
    const auto model = toric::load_variety(path);
    const auto report = toric::hochster_check(model);
    std::cout << "degrees checked: " << report.degrees_checked
              << "  vanishing checked: " << report.vanishing_checked
              << "  mismatches: " << report.mismatches.size() << '\n';
    for (const auto& m : report.mismatches) std::cout << "  " << m << '\n';
    return report.ok() ? 0 : kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line bundle cohomology on simplicial projective toric varieties"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* run_cmd = app.add_subcommand("run", "compute h^i(X; O(alpha)) for one or more classes");
  run_cmd->add_option("input", cfg.input_path, "variety file (JSON)")->required();
  run_cmd->add_option("--class", cfg.classes, "divisor class, comma-separated components (repeatable)")
      ->allow_extra_args(false);
  run_cmd->add_option("--box", cfg.box, "inclusive ranges per component, e.g. -2..2,0..3");
  run_cmd->add_option("--format", cfg.format, "table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  run_cmd->add_flag("--verbose,-v", cfg.verbose, "per-degree breakdown with rationom listing");
  run_cmd->add_flag("--oracle-check", cfg.oracle_check, "compare against the fan-complex route");
  run_cmd->add_flag("--serre-check", cfg.serre_check, "check h^i(a) = h^(d-i)(K - a)");
  run_cmd->add_flag("--unfiltered", cfg.unfiltered, "sum over all of P(I), ignoring the complement filter");
  run_cmd->add_option("--generator-cap", cfg.generator_cap, "maximum number of SR generators");
  run_cmd->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");

  std::string path;
  int cap = toric::kDefaultGeneratorCap;
  auto* info_cmd = app.add_subcommand("info", "print P(I), multiplicity factors and diagnostics");
  info_cmd->add_option("input", path, "variety file (JSON)")->required();
  info_cmd->add_option("--generator-cap", cap, "maximum number of SR generators");
  auto* hochster_cmd = app.add_subcommand("hochster", "cross-check multiplicity factors against the fan");
  hochster_cmd->add_option("input", path, "variety file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }
  if (*run_cmd) return run(cfg);
  if (*info_cmd) return info(path, cap);
  return hochster(path);
}
