#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dfw/iterate.hpp"
#include "dfw/objectives.hpp"

namespace dfw {

enum class StepRule { Harmonic, LineSearch };

struct SolverConfig {
  double epsilon = 1e-6;
  int max_iter = 1000;
  StepRule step_rule = StepRule::Harmonic;
  /// Optional curvature bound C_f; metadata for the 6.75*C_f/eps iteration
  /// bound checks, never used by the solver loop itself.
  std::optional<double> curvature_bound;
};

/// The vertex sign*magnitude*e_j returned by a linear minimization oracle.
struct LmoResult {
  int index = -1;
  int sign = +1;       // always +1 for the simplex
  double magnitude = 1.0;
};

struct TraceRow {
  int iter;
  int atom;
  int owner;  // node id, -1 for centralized runs
  double gamma;
  double objective;
  double gap;
  long long cum_reals;
  long long wall_ns;
  std::vector<double> node_objectives;  // drop-mode runs only
};

struct RunTrace {
  explicit RunTrace(Domain domain) : final_iterate(std::move(domain)) {}

  std::vector<TraceRow> rows;
  Iterate final_iterate;
  bool converged = false;
  double final_gap = 0.0;
  double final_objective = 0.0;
  int rounds() const { return static_cast<int>(rows.size()); }
};

/// argmax_j |grad_j|, ties to the smallest index; vertex sgn(-grad_j)*beta*e_j
/// with sgn(0) := +1.
LmoResult lmo_l1(std::span<const double> grads, double beta);
/// argmin_j grad_j, ties to the smallest index; vertex e_j.
LmoResult lmo_simplex(std::span<const double> grads);
LmoResult lmo(std::span<const double> grads, const Domain& domain);

/// <alpha - s, grad f>, the surrogate optimality gap.
double duality_gap(const Iterate& alpha, const LmoResult& s, std::span<const double> grads);
double support_grad_dot(const Iterate& alpha, std::span<const double> grads);

/// Harmonic: exactly 2/(k+2). LineSearch: closed form gap/(2q) clipped to
/// [0,1] for quadratic objectives (q <= 0 degenerates to gamma = 1), golden
/// section to 1e-10 otherwise.
double step_size(int k, StepRule rule, Objective& obj, const Iterate& alpha, const LmoResult& s,
                 double gap, double support_dot);

double golden_section_gamma(const Objective& obj, const Iterate& alpha, const LmoResult& s,
                            double tol = 1e-10);

/// alpha^(0): 0 for the l1 ball, e_0 for the simplex.
Iterate start_iterate(const Domain& domain);

RunTrace solve_fw(Objective& obj, int atom_count, const Domain& domain, const SolverConfig& cfg);
RunTrace solve_fw(const Problem& problem, const SolverConfig& cfg);

}  // namespace dfw
