#include "dfw/experiment.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace dfw {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

KernelSpec parse_kernel(const std::string& s, double c, const AtomMatrix& atoms) {
  KernelSpec k;
  k.C = c;
  if (s == "linear") {
    k.base = KernelSpec::Base::Linear;
    return k;
  }
  auto parts = split(s, ':');
  if (parts[0] == "rbf" && parts.size() == 2) {
    k.base = KernelSpec::Base::Rbf;
    k.sigma = parts[1] == "auto" ? mean_pairwise_distance(atoms) : std::stod(parts[1]);
    if (k.sigma <= 0.0) throw ConfigError("kernel bandwidth must be positive");
    return k;
  }
  throw ConfigError("bad kernel spec: " + s);
}

PartitionSpec parse_partition(const std::string& s, std::uint64_t master_seed) {
  if (s == "uniform") {
    PartitionSpec spec;
    spec.scheme = PartitionScheme::UniformRandom;
    spec.seed = master_seed;
    return spec;
  }
  auto parts = split(s, ':');
  if (parts[0] == "unbalanced" && parts.size() == 2) {
    PartitionSpec spec;
    spec.scheme = PartitionScheme::Unbalanced;
    spec.fraction = std::stod(parts[1]);
    spec.seed = master_seed;
    return spec;
  }
  return PartitionSpec::parse(s);
}

}  // namespace

void ExperimentConfig::validate() const {
  if (objective != "lasso" && objective != "svm" && objective != "adaboost")
    throw ConfigError("unknown objective: " + objective);
  if (epsilon <= 0.0) throw ConfigError("epsilon must be positive");
  if (max_iter < 1) throw ConfigError("max-iter must be >= 1");
  if (step != "harmonic" && step != "linesearch") throw ConfigError("unknown step rule: " + step);
  if (drop_p < 0.0 || drop_p >= 1.0) throw ConfigError("drop probability must be in [0,1)");
  if (objective == "lasso" && !simplex && !beta && !beta_auto && data_path.rfind("identity:", 0) != 0)
    throw ConfigError("lasso needs --beta, --beta auto, or --simplex");
  if (objective != "lasso" && (beta || beta_auto))
    throw ConfigError("--beta only applies to lasso (svm/adaboost use the simplex)");
  if (mode == SolverMode::ApproxDfw && centers.empty())
    throw ConfigError("approx mode needs --centers");
  if ((mode == SolverMode::BaselineRandom || mode == SolverMode::BaselineLocalFw) &&
      baseline_grid.empty())
    throw ConfigError("baseline mode needs --m-grid");
  if (temperature <= 0.0) throw ConfigError("temperature must be positive");
  if (svm_c <= 0.0) throw ConfigError("svm C must be positive");
}

SolverConfig solver_config_from(const ExperimentConfig& cfg) {
  SolverConfig sc;
  sc.epsilon = cfg.epsilon;
  sc.max_iter = cfg.max_iter;
  sc.step_rule = cfg.step == "linesearch" ? StepRule::LineSearch : StepRule::Harmonic;
  return sc;
}

Problem build_problem(const ExperimentConfig& cfg) {
  Domain domain = cfg.simplex ? Domain{Simplex{}} : Domain{L1Ball{cfg.beta.value_or(1.0)}};

  if (cfg.objective == "lasso") {
    AtomMatrix atoms;
    std::vector<double> y;
    double suggested = 0.0;
    if (cfg.data_path.rfind("identity:", 0) == 0) {
      int d = std::stoi(cfg.data_path.substr(9));
      atoms = AtomMatrix::identity(d);
      y.assign(d, 0.0);
      suggested = 1.0;
    } else if (cfg.data_path.empty()) {
      SynthLassoParams params = cfg.synth;
      params.seed = cfg.seed;
      SynthLassoResult s = synth_lasso(params, cfg.lambda_rule);
      atoms = std::move(s.atoms);
      y = std::move(s.target);
      suggested = s.suggested_beta;
    } else {
      LibsvmData data = load_libsvm(cfg.data_path);
      if (!cfg.transpose)
        throw ConfigError("lasso on libsvm data distributes features; pass --transpose");
      atoms = transpose(data.atoms);
      y = std::move(data.labels);
      suggested = lambda_max_of(atoms, y, cfg.lambda_rule);  // scale hint only
    }
    if (!cfg.simplex) {
      double beta = cfg.beta ? *cfg.beta : suggested;
      if (beta <= 0.0) throw ConfigError("beta must be positive");
      domain = L1Ball{beta};
    }
    return Problem{std::move(atoms), LassoSpec{std::move(y)}, domain};
  }

  if (cfg.objective == "svm") {
    LibsvmData data;
    if (cfg.data_path.rfind("blobs:", 0) == 0) {
      auto parts = split(cfg.data_path, ':');
      if (parts.size() != 3) throw ConfigError("blobs spec is blobs:n:d");
      data = synth_svm_points(std::stoi(parts[1]), std::stoi(parts[2]), cfg.seed);
    } else if (cfg.data_path.empty()) {
      throw ConfigError("svm needs --data (libsvm file or blobs:n:d)");
    } else {
      data = load_libsvm(cfg.data_path);
    }
    for (double& lab : data.labels) lab = lab > 0.0 ? +1.0 : -1.0;
    KernelSpec kernel = parse_kernel(cfg.kernel, cfg.svm_c, data.atoms);
    return Problem{std::move(data.atoms), SvmSpec{std::move(data.labels), kernel}, Simplex{}};
  }

  // adaboost: columns of the data are the base-classifier response atoms
  if (cfg.data_path.empty()) throw ConfigError("adaboost needs --data");
  AtomMatrix atoms;
  if (cfg.data_path.rfind("identity:", 0) == 0) {
    atoms = AtomMatrix::identity(std::stoi(cfg.data_path.substr(9)));
  } else {
    LibsvmData data = load_libsvm(cfg.data_path);
    atoms = cfg.transpose ? transpose(data.atoms) : std::move(data.atoms);
  }
  return Problem{std::move(atoms), AdaboostSpec{cfg.temperature}, Simplex{}};
}

void write_trace_csv(const std::string& path, const RunTrace& trace, int node_count) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "iter,selected_atom,owner_node,objective,gap,cum_reals,wallclock_ns";
  bool per_node = node_count > 0 && !trace.rows.empty() && !trace.rows.front().node_objectives.empty();
  if (per_node)
    for (int v = 0; v < node_count; ++v) out << ",node_obj_" << v;
  out << '\n';
  out << std::setprecision(17);
  for (const TraceRow& r : trace.rows) {
    out << r.iter << ',' << r.atom << ',' << r.owner << ',' << r.objective << ',' << r.gap << ','
        << r.cum_reals << ',' << r.wall_ns;
    if (per_node)
      for (double f : r.node_objectives) out << ',' << f;
    out << '\n';
  }
}

void write_summary_json(const std::string& path, const ExperimentConfig& cfg,
                        const ExperimentReport& report) {
  nlohmann::json j;
  j["final_gap"] = report.final_gap;
  j["total_communication"] = report.total_communication;
  j["rounds"] = report.rounds;
  j["final_objective"] = report.final_objective;
  j["converged"] = report.converged;
  j["config"]["objective"] = cfg.objective;
  j["config"]["topology"] = cfg.topology;
  j["config"]["partition"] = cfg.partition;
  j["config"]["epsilon"] = cfg.epsilon;
  j["config"]["step"] = cfg.step;
  j["config"]["seed"] = cfg.seed;
  j["config"]["drop_p"] = cfg.drop_p;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

void write_baseline_csv(const std::string& path, const std::vector<BaselinePoint>& curve) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "m,comm_reals,objective\n" << std::setprecision(17);
  for (const BaselinePoint& p : curve)
    out << p.m << ',' << p.comm_reals << ',' << p.objective << '\n';
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::filesystem::create_directories(cfg.out_dir);
  auto out_path = [&](const char* name) { return cfg.out_dir + "/" + name; };

  Problem problem = build_problem(cfg);
  SolverConfig solver = solver_config_from(cfg);
  ExperimentReport report;

  try {
    if (cfg.mode == SolverMode::Centralized) {
      RunTrace trace = solve_fw(problem, solver);
      report.final_gap = trace.final_gap;
      report.rounds = trace.rounds();
      report.final_objective = trace.final_objective;
      report.converged = trace.converged;
      write_trace_csv(out_path("trace.csv"), trace);
      write_summary_json(out_path("summary.json"), cfg, report);
      return report;
    }

    Topology topo = Topology::parse(cfg.topology);
    PartitionSpec partition = parse_partition(cfg.partition, cfg.seed);

    if (cfg.mode == SolverMode::Dfw || cfg.mode == SolverMode::ApproxDfw) {
      DfwOptions options;
      options.solver = solver;
      if (cfg.election != "auto") options.election = parse_election(cfg.election);
      options.hub_holds_atoms = cfg.hub_holds_atoms;
      if (cfg.drop_p > 0.0) {
        options.mode = RunMode::Drop;
        options.drop_p = cfg.drop_p;
        options.drop_seed = cfg.seed + 0x9e3779b9;
      }

      RunTrace trace(problem.domain);
      long long total = 0;
      if (cfg.mode == SolverMode::Dfw) {
        DfwResult res = solve_dfw(problem, topo, partition, options);
        trace = std::move(res.trace);
        total = res.ledger.total();
      } else {
        ApproxOptions approx;
        approx.dfw = options;
        approx.schedule = CenterSchedule::parse(cfg.centers);
        approx.certificates = cfg.certificates;
        ApproxResult res = solve_approx_dfw(problem, topo, partition, approx);
        trace = std::move(res.trace);
        total = res.ledger.total();
        if (cfg.certificates) {
          std::ofstream cert(out_path("certificates.csv"));
          cert << "iter,delta,bound,r_max\n" << std::setprecision(17);
          for (const RoundCertificate& c : res.certificates)
            cert << c.iter << ',' << c.delta << ',' << c.bound << ',' << c.r_max << '\n';
        }
      }
      report.final_gap = trace.final_gap;
      report.rounds = trace.rounds();
      report.final_objective = trace.final_objective;
      report.converged = trace.converged;
      report.total_communication = total;
      write_trace_csv(out_path("trace.csv"), trace, topo.node_count());
      write_summary_json(out_path("summary.json"), cfg, report);
      return report;
    }

    // baseline curves
    std::vector<int> holders = holder_nodes(topo, cfg.hub_holds_atoms);
    auto lists = partition_atoms(problem.atoms.count(), static_cast<int>(holders.size()),
                                 partition);
    for (int m : cfg.baseline_grid) {
      BaselinePoint p = cfg.mode == SolverMode::BaselineRandom
                            ? baseline_random(problem, lists, m, cfg.seed + m, solver)
                            : baseline_local_fw(problem, lists, m, solver);
      report.baseline_curve.push_back(p);
    }
    report.converged = true;
    if (!report.baseline_curve.empty()) {
      report.final_objective = report.baseline_curve.back().objective;
      report.total_communication = report.baseline_curve.back().comm_reals;
    }
    write_baseline_csv(out_path("baseline_curve.csv"), report.baseline_curve);
    write_summary_json(out_path("summary.json"), cfg, report);
    return report;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::runtime_error& e) {
    throw NumericalError(e.what());
  }
}

int exit_code_for(const ExperimentReport& report) { return report.converged ? 0 : 1; }

}  // namespace dfw
