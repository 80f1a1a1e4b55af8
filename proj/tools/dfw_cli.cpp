// Command-line front end: centralized FW, distributed FW over a simulated
// network, the approximate (clustered) variant, baselines, and the synthetic
// problem generator.

#include <iostream>

#include "CLI11.hpp"
#include "dfw/experiment.hpp"
#include "dfw/libsvm_io.hpp"

namespace {

void add_common_flags(CLI::App* cmd, dfw::ExperimentConfig& cfg) {
  cmd->add_option("--objective", cfg.objective, "lasso | svm | adaboost")
      ->check(CLI::IsMember({"lasso", "svm", "adaboost"}));
  cmd->add_option("--data", cfg.data_path,
                  "libsvm file, or identity:d / blobs:n:d synthetic shorthands");
  cmd->add_flag("--transpose", cfg.transpose, "treat features (not examples) as atoms");
  cmd->add_option("--synth-d", cfg.synth.d, "synthetic lasso: target dimension");
  cmd->add_option("--synth-n", cfg.synth.n, "synthetic lasso: atom count");
  cmd->add_option("--synth-sa", cfg.synth.density_a, "synthetic lasso: matrix density");
  cmd->add_option("--synth-salpha", cfg.synth.density_alpha, "synthetic lasso: solution density");
  cmd->add_option("--synth-noise", cfg.synth.noise_var, "synthetic lasso: noise variance");
  cmd->add_option("--kernel", cfg.kernel, "svm kernel: linear | rbf:sigma | rbf:auto");
  cmd->add_option("--svm-c", cfg.svm_c, "svm parameter C");
  cmd->add_option("--temperature", cfg.temperature, "adaboost temperature T");

  auto* beta = cmd->add_option_function<std::string>(
      "--beta",
      [&cfg](const std::string& v) {
        if (v == "auto") {
          cfg.beta_auto = true;
        } else {
          cfg.beta = std::stod(v);
        }
      },
      "l1 ball radius, or 'auto' for the generator-suggested value");
  cmd->add_flag("--simplex", cfg.simplex, "optimize over the unit simplex")->excludes(beta);
  cmd->add_option_function<std::string>(
      "--lambda-max", [&cfg](const std::string& v) {
        if (v == "a_t_y") cfg.lambda_rule = dfw::LambdaMaxRule::AtY;
        else if (v == "ay") cfg.lambda_rule = dfw::LambdaMaxRule::AY;
        else throw CLI::ValidationError("--lambda-max must be a_t_y or ay");
      },
      "lambda_max convention: a_t_y (default) or ay");

  cmd->add_option("--epsilon", cfg.epsilon, "surrogate gap tolerance");
  cmd->add_option("--max-iter", cfg.max_iter, "iteration cap");
  cmd->add_option("--step", cfg.step, "harmonic | linesearch")
      ->check(CLI::IsMember({"harmonic", "linesearch"}));
  cmd->add_option("--seed", cfg.seed, "master seed (all randomness derives from it)");
  cmd->add_option("--out", cfg.out_dir, "output directory for trace.csv / summary.json");
  cmd->set_config("--config", "", "flat key=value config file mirroring the flags");
}

void add_network_flags(CLI::App* cmd, dfw::ExperimentConfig& cfg) {
  cmd->add_option("--topology", cfg.topology, "star:N | tree:b:N | general:N:seed | full:N");
  cmd->add_option("--partition", cfg.partition,
                  "contiguous | uniform[:seed] | unbalanced:frac[:seed]");
  cmd->add_option("--election", cfg.election, "auto | naive | tree | star")
      ->check(CLI::IsMember({"auto", "naive", "tree", "star"}));
  cmd->add_flag("--hub-holds-atoms", cfg.hub_holds_atoms, "give the star hub a data share");
}

int run(const dfw::ExperimentConfig& cfg) {
  try {
    dfw::ExperimentReport report = dfw::run_experiment(cfg);
    std::cout << "rounds=" << report.rounds << " final_objective=" << report.final_objective
              << " final_gap=" << report.final_gap
              << " total_communication=" << report.total_communication << '\n';
    return dfw::exit_code_for(report);
  } catch (const dfw::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const dfw::NumericalError& e) {
    std::cerr << "numerical abort: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed Frank-Wolfe sparse learning simulator"};
  app.require_subcommand(1);

  dfw::ExperimentConfig cfg;

  CLI::App* solve = app.add_subcommand("solve", "centralized Frank-Wolfe");
  add_common_flags(solve, cfg);

  CLI::App* dist = app.add_subcommand("dfw", "distributed Frank-Wolfe over a simulated network");
  add_common_flags(dist, cfg);
  add_network_flags(dist, cfg);
  double drop_p = 0.0;
  dist->add_option("--drop", drop_p, "message drop probability (async mode)");

  CLI::App* approx = app.add_subcommand("approx", "approximate dFW on greedy centers");
  add_common_flags(approx, cfg);
  add_network_flags(approx, cfg);
  approx->add_option("--centers", cfg.centers, "fixed:m | fixed:auto-balance | linear:rate")
      ->required();
  approx->add_flag("--certificates", cfg.certificates,
                   "emit per-round selection-error certificates (test oracle)");

  CLI::App* baseline = app.add_subcommand("baseline", "random / local-FW selection baselines");
  add_common_flags(baseline, cfg);
  add_network_flags(baseline, cfg);
  std::string strategy = "random";
  baseline->add_option("--strategy", strategy, "random | localfw")
      ->check(CLI::IsMember({"random", "localfw"}));
  baseline->add_option("--m-grid", cfg.baseline_grid, "per-node selection sizes to sweep")
      ->delimiter(',')
      ->required();

  CLI::App* synth = app.add_subcommand("synth", "write a synthetic lasso instance as libsvm");
  add_common_flags(synth, cfg);
  std::string synth_out = "synth.libsvm";
  synth->add_option("--file", synth_out, "output libsvm path");

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) {
    cfg.mode = dfw::SolverMode::Centralized;
    return run(cfg);
  }
  if (dist->parsed()) {
    cfg.mode = dfw::SolverMode::Dfw;
    cfg.drop_p = drop_p;
    return run(cfg);
  }
  if (approx->parsed()) {
    cfg.mode = dfw::SolverMode::ApproxDfw;
    return run(cfg);
  }
  if (baseline->parsed()) {
    cfg.mode = strategy == "random" ? dfw::SolverMode::BaselineRandom
                                    : dfw::SolverMode::BaselineLocalFw;
    return run(cfg);
  }
  if (synth->parsed()) {
    try {
      dfw::SynthLassoParams params = cfg.synth;
      params.seed = cfg.seed;
      dfw::SynthLassoResult s = dfw::synth_lasso(params, cfg.lambda_rule);
      // store feature atoms as rows so a --transpose load restores them
      dfw::write_libsvm(synth_out, s.atoms, s.target);
      std::cout << "wrote " << synth_out << " lambda_max=" << s.lambda_max
                << " suggested_beta=" << s.suggested_beta << '\n';
      return 0;
    } catch (const std::exception& e) {
      std::cerr << "synth failed: " << e.what() << '\n';
      return 2;
    }
  }
  return 2;
}
