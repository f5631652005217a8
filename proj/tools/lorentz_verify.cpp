// Command-line runner for the verification suite: executes built-in or
// user-configured experiments and emits byte-stable reports.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lorentz/experiment.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Lorentzian distance comparison verification suite"};
  app.set_version_flag("--version", std::string(lorentz::kToolVersion));

  std::string config_path;
  std::vector<std::string> experiment_ids;
  std::string out_path;
  std::string format = "structured-record";
  bool verbose = false;
  bool list_only = false;
  bool timings = false;
  lorentz::RunOverrides ov;

  app.add_option("--config", config_path, "JSON config with user experiments");
  app.add_option("--experiment", experiment_ids,
                 "experiment id to run (repeatable; default: all)");
  std::uint64_t seed_val = 0;
  auto* seed_opt = app.add_option("--seed", seed_val, "override sampling seed");
  int samples_val = 0;
  auto* samples_opt =
      app.add_option("--samples", samples_val, "override sample counts");
  double fd_val = 0.0;
  auto* fd_opt = app.add_option("--fd-step", fd_val,
                                "override the distance-field FD step scale");
  double tol_val = 0.0;
  auto* tol_opt =
      app.add_option("--tolerance", tol_val, "override check tolerances");
  app.add_option("--out", out_path, "write the report to a file");
  app.add_option("--format", format,
                 "report format: structured-record | tabular")
      ->check(CLI::IsMember({"structured-record", "tabular"}));
  app.add_flag("--verbose", verbose, "include per-sample margins");
  app.add_flag("--timings", timings,
               "include wall times (excluded from byte stability)");
  app.add_flag("--list", list_only, "list experiment ids and exit");

  CLI11_PARSE(app, argc, argv);

  if (*seed_opt) ov.seed = seed_val;
  if (*samples_opt) {
    if (samples_val <= 0) {
      std::cerr << "error: --samples must be positive\n";
      return 2;
    }
    ov.samples = samples_val;
  }
  if (*fd_opt) ov.fd_step = fd_val;
  if (*tol_opt) ov.tolerance = tol_val;

  try {
    std::vector<lorentz::ExperimentConfig> catalog =
        lorentz::builtin_experiments();
    if (!config_path.empty()) {
      for (auto& cfg : lorentz::load_config_file(config_path)) {
        for (const auto& existing : catalog)
          if (existing.id == cfg.id)
            throw lorentz::ConfigError("duplicate experiment id '" + cfg.id +
                                       "'");
        catalog.push_back(std::move(cfg));
      }
    }

    if (list_only) {
      std::cout << lorentz::list_experiments(catalog);
      return 0;
    }

    const lorentz::RunReport report =
        lorentz::run_experiments(catalog, experiment_ids, ov);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) {
        std::cerr << "error: cannot write to '" << out_path << "'\n";
        return 2;
      }
      os = &file;
    }
    if (format == "tabular")
      lorentz::emit_tabular(report, *os);
    else
      lorentz::emit_structured(report, *os, verbose, timings);

    for (const auto& e : report.experiments)
      if (!e.error.empty())
        std::cerr << "error in experiment '" << e.id << "': " << e.error << "\n";
    return report.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
