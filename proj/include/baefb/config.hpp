#pragma once

#include <optional>
#include <string>
#include <vector>

#include "baefb/gaussian.hpp"
#include "baefb/model.hpp"

namespace baefb {

enum class FeedbackKind {
  kNone,
  kMarkovIdeal,
  kMarkovCavity,
  kMarkovMechanical,
  kMarkovForce,
  kBayesIdeal,
  kBayesForce,
};

std::string to_string(FeedbackKind kind);
std::optional<FeedbackKind> feedback_from_string(const std::string& name);

enum class SweepVariable { kKappa, kG, kLambda, kChi };
std::string to_string(SweepVariable v);

enum class OutputFormat { kCsv, kJson };

struct SweepSpec {
  SweepVariable variable = SweepVariable::kKappa;
  std::vector<double> values;
  bool log_spaced = false;  // descriptive flag recorded in output headers
};

// One preset may expand into several series (e.g. one curve per g or chi);
// each series is the base config with the series variable overridden.
struct SeriesSpec {
  SweepVariable variable = SweepVariable::kG;
  std::vector<double> values;
};

struct NumericsConfig {
  double dt = 0.0;  // 0 = automatic step selection
  double dt_sde = 5e-3;
  double tol_period = 1e-9;
  long max_periods = 1000000;
  int n_traj = 1000;
  std::uint64_t base_seed = 1;
};

struct OutputConfig {
  std::string path;
  OutputFormat format = OutputFormat::kCsv;
  DbConvention db_convention = DbConvention::kPaperAbsolute;
};

struct RunConfig {
  SystemParams params;
  FeedbackKind feedback = FeedbackKind::kNone;
  std::optional<double> lambda;  // required iff feedback == markov_force
  std::optional<double> chi;     // required iff feedback is bayes_*
  SweepSpec sweep;
  std::optional<SeriesSpec> series;
  NumericsConfig numerics;
  OutputConfig output;
  std::optional<std::string> preset_name;  // recorded when expanded from a preset

  void validate() const;  // throws ValidationError listing all violations
};

// Flat dotted-key config document, e.g.
//   feedback = markov_mechanical
//   params.g = 0.05
//   sweep.variable = kappa
//   sweep.values = 0.1, 1, 10
// Unknown keys are rejected. A `preset = <name>` line expands first and the
// remaining keys override it.
RunConfig parse_config(const std::string& text);
std::string emit_config(const RunConfig& config);

// Figure presets. Parameters follow the reference setup gamma = 1e-4, eta = 1,
// nbar = 10; kappa grids use 60 log-spaced points per decade.
RunConfig preset(const std::string& name);
std::vector<std::string> preset_names();

struct ResultRow {
  double sweep_value = 0.0;
  std::optional<double> var_c;
  std::optional<double> var_fb_mean, var_fb_min, var_fb_max;
  std::optional<double> db_c, db_fb;
  std::optional<double> threshold, adiabatic;
  std::optional<double> excess_q;
  std::optional<double> avg_force_dimensionless, avg_force_newton;
  bool converged = false;
  double runtime_s = 0.0;
  std::string status = "ok";
};

struct SweepResult {
  std::vector<ResultRow> rows;
  std::vector<std::string> files_written;
  bool all_ok = true;
};

// Executes the per-point pipeline for every sweep value (and every series
// entry), writing one CSV/JSON file per series. Deterministic given the seed.
SweepResult run_sweep(const RunConfig& config, int n_threads = 0);

struct McValidationResult {
  bool pass = true;
  std::string report_path;
  std::vector<std::string> lines;
};

// Monte-Carlo oracle vs the deterministic excess-noise solution for the
// configured law; writes a z-score table. self_test_mismatch perturbs the
// reference to confirm the harness can fail.
McValidationResult mc_validate(const RunConfig& config, bool self_test_mismatch = false,
                               int n_threads = 0);

// CSV schema (fixed order), shared by writer and golden tests.
const std::vector<std::string>& result_columns();

}  // namespace baefb
