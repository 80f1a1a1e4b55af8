#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dfw/approx.hpp"
#include "dfw/baselines.hpp"
#include "dfw/dfw.hpp"
#include "dfw/synth.hpp"

namespace dfw {

enum class SolverMode { Centralized, Dfw, ApproxDfw, BaselineRandom, BaselineLocalFw };

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Flat experiment description; mirrors the CLI flags one to one.
struct ExperimentConfig {
  SolverMode mode = SolverMode::Centralized;

  // objective + data
  std::string objective = "lasso";  // lasso | svm | adaboost
  std::string data_path;            // libsvm file; empty -> synthetic
  bool transpose = false;
  SynthLassoParams synth;
  std::string kernel = "rbf:auto";  // rbf:sigma | rbf:auto | linear
  double svm_c = 100.0;
  double temperature = 1.0;
  LambdaMaxRule lambda_rule = LambdaMaxRule::AtY;

  // domain
  std::optional<double> beta;  // l1 ball radius; "auto" -> suggested beta
  bool beta_auto = false;
  bool simplex = false;

  // network
  std::string topology = "star:4";
  std::string partition = "contiguous";
  std::string election = "auto";
  bool hub_holds_atoms = false;

  // solver
  double epsilon = 1e-6;
  int max_iter = 1000;
  std::string step = "harmonic";  // harmonic | linesearch
  double drop_p = 0.0;
  std::uint64_t seed = 0;

  // approx
  std::string centers;  // "fixed:m" | "fixed:auto-balance" | "linear:rate"
  bool certificates = false;

  // baselines
  std::vector<int> baseline_grid;

  std::string out_dir = ".";

  void validate() const;  // throws ConfigError
};

struct ExperimentReport {
  double final_gap = 0.0;
  long long total_communication = 0;
  int rounds = 0;
  double final_objective = 0.0;
  bool converged = false;
  std::vector<BaselinePoint> baseline_curve;  // baseline modes only
};

/// Builds the problem instance described by the config (shared by all modes).
Problem build_problem(const ExperimentConfig& cfg);

/// Runs the configured experiment and writes trace.csv / summary.json (or
/// baseline_curve.csv) under out_dir.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

void write_trace_csv(const std::string& path, const RunTrace& trace, int node_count = 0);
void write_summary_json(const std::string& path, const ExperimentConfig& cfg,
                        const ExperimentReport& report);
void write_baseline_csv(const std::string& path, const std::vector<BaselinePoint>& curve);

/// 0 gap reached, 1 not converged, 2 config error, 3 numerical abort.
int exit_code_for(const ExperimentReport& report);

SolverConfig solver_config_from(const ExperimentConfig& cfg);

}  // namespace dfw
