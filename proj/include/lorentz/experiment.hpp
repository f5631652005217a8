#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lorentz/report.hpp"
#include "lorentz/spacetime.hpp"

namespace lorentz {

inline constexpr const char* kToolName = "lorentz-verify";
inline constexpr const char* kToolVersion = "0.1.0";

// Raised on malformed configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ModelConfig {
  std::string kind = "minkowski"; // minkowski | de_sitter | anti_de_sitter | grw
  int n = 2;
  double c = 1.0;
  std::string warping = "const";
  double warping_param = 1.0;
  double t_lo = -5.0, t_hi = 5.0;
};

struct FieldConfig {
  bool present = false;
  std::string kind = "point"; // point | slice
  std::vector<double> p;      // point source, chart coordinates
  double t0 = 0.0;            // slice source
  double fd_scale = 1e-4;
};

struct ImmersionConfig {
  bool present = false;
  std::string catalog; // hyperboloid | shifted-hyperboloid | tilted-plane |
                       // minkowski-graph | slice | warped-graph |
                       // de-sitter-level-set | boosted-geodesic
  double s = 1.0, tau = 0.0, radius = 1.0, height = 2.0, eps = 0.1, t0 = 0.0,
         chi = 0.8;
  std::vector<double> slope;
};

struct BoxConfig {
  bool present = false;
  std::vector<double> lo, hi;
};

struct CurvatureConfig {
  std::optional<double> c;
  BoxConfig box; // defaults to the event box
  int samples = 1500;
  double beta_max = 1.5;
  double pad = 1e-9;
};

struct CheckConfig {
  std::string name;
  std::optional<double> tolerance;
  std::optional<double> d_min, d_max;
  double s = 1.0;          // geodesic length for index/profile checks
  int perturbations = 100; // maximality sweeps
};

// One model + field + immersion scenario with its checks.
struct StageConfig {
  std::string label;
  ModelConfig model;
  FieldConfig field;
  ImmersionConfig immersion;
  BoxConfig box;
  CurvatureConfig curvature;
  std::vector<CheckConfig> checks;
  int samples = 1000;
  int directions = 8;
  std::uint64_t seed = 1;
};

struct ExperimentConfig {
  std::string id;
  std::string description;
  std::vector<StageConfig> stages;
};

struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::optional<double> fd_step;
  std::optional<double> tolerance;
};

struct ExperimentResult {
  std::string id;
  std::vector<CheckReport> checks; // check_id is "stage/check"
  std::string error;               // nonempty: config/domain error mid-run
  double wall_seconds = 0.0;
};

struct RunReport {
  std::vector<ExperimentResult> experiments;
  int pass_count = 0;
  int fail_count = 0;
  int skip_count = 0;
  bool had_error = false;
  bool aggregate_pass() const { return !had_error && fail_count == 0; }
  // 0 = all pass, 1 = at least one failed check, 2 = config/domain error
  int exit_code() const {
    if (had_error) return 2;
    return fail_count == 0 ? 0 : 1;
  }
};

// The built-in experiment catalog.
std::vector<ExperimentConfig> builtin_experiments();

// Parse a JSON config file; throws ConfigError naming the offending key on
// malformed input.
std::vector<ExperimentConfig> load_config_file(const std::string& path);

std::vector<CheckReport> run_experiment(const ExperimentConfig& cfg,
                                        const RunOverrides& ov);

RunReport run_experiments(const std::vector<ExperimentConfig>& configs,
                          const std::vector<std::string>& selected_ids,
                          const RunOverrides& ov);

// id + one-line description per catalog entry.
std::string list_experiments(const std::vector<ExperimentConfig>& configs);

// Byte-stable report emission. Wall times are segregated behind the timings
// flag and excluded from the determinism contract.
void emit_structured(const RunReport& report, std::ostream& os, bool verbose,
                     bool timings);
void emit_tabular(const RunReport& report, std::ostream& os);

} // namespace lorentz
