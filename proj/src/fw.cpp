#include "dfw/fw.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace dfw {

LmoResult lmo_l1(std::span<const double> grads, double beta) {
  if (grads.empty()) throw std::invalid_argument("lmo_l1: empty gradient");
  if (beta <= 0.0) throw std::invalid_argument("lmo_l1: beta must be positive");
  int best = 0;
  double best_mag = std::abs(grads[0]);
  for (int j = 1; j < static_cast<int>(grads.size()); ++j) {
    double m = std::abs(grads[j]);
    if (m > best_mag) {
      best_mag = m;
      best = j;
    }
  }
  int sign = grads[best] > 0.0 ? -1 : +1;  // sgn(-grad), sgn(0) := +1
  return LmoResult{best, sign, beta};
}

LmoResult lmo_simplex(std::span<const double> grads) {
  if (grads.empty()) throw std::invalid_argument("lmo_simplex: empty gradient");
  int best = 0;
  for (int j = 1; j < static_cast<int>(grads.size()); ++j) {
    if (grads[j] < grads[best]) best = j;
  }
  return LmoResult{best, +1, 1.0};
}

LmoResult lmo(std::span<const double> grads, const Domain& domain) {
  if (const auto* ball = std::get_if<L1Ball>(&domain)) return lmo_l1(grads, ball->beta);
  return lmo_simplex(grads);
}

double support_grad_dot(const Iterate& alpha, std::span<const double> grads) {
  double s = 0.0;
  for (const auto& [j, w] : alpha.support()) s += w * grads[j];
  return s;
}

double duality_gap(const Iterate& alpha, const LmoResult& s, std::span<const double> grads) {
  return support_grad_dot(alpha, grads) - s.sign * s.magnitude * grads[s.index];
}

double golden_section_gamma(const Objective& obj, const Iterate& alpha, const LmoResult& s,
                            double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double coeff = s.sign * s.magnitude;
  double a = 0.0, b = 1.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = obj.probe(alpha, c, s.index, coeff);
  double fd = obj.probe(alpha, d, s.index, coeff);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = obj.probe(alpha, c, s.index, coeff);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = obj.probe(alpha, d, s.index, coeff);
    }
  }
  return 0.5 * (a + b);
}

double step_size(int k, StepRule rule, Objective& obj, const Iterate& alpha, const LmoResult& s,
                 double gap, double support_dot) {
  if (k < 0) throw std::invalid_argument("step_size: negative iteration index");
  if (rule == StepRule::Harmonic) return 2.0 / (k + 2);
  if (obj.has_closed_form_linesearch()) {
    double q = obj.linesearch_denominator(s.index, s.sign * s.magnitude, support_dot);
    if (q <= 0.0) return 1.0;  // degenerate direction
    double g = gap / (2.0 * q);
    return std::clamp(g, 0.0, 1.0);
  }
  return golden_section_gamma(obj, alpha, s);
}

Iterate start_iterate(const Domain& domain) {
  if (const auto* ball = std::get_if<L1Ball>(&domain)) return Iterate(L1Ball{ball->beta});
  return Iterate::vertex(domain, 0, 1.0);
}

RunTrace solve_fw(Objective& obj, int atom_count, const Domain& domain, const SolverConfig& cfg) {
  RunTrace trace(domain);
  Iterate alpha = start_iterate(domain);
  obj.rebuild_cache(alpha);

  auto t0 = std::chrono::steady_clock::now();
  auto elapsed_ns = [&t0] {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                                t0)
        .count();
  };

  std::vector<double> grads(atom_count);
  double gap = std::numeric_limits<double>::infinity();
  for (int k = 0; k < cfg.max_iter; ++k) {
    for (int j = 0; j < atom_count; ++j) grads[j] = obj.grad_entry(j);
    LmoResult s = lmo(grads, domain);
    double sdot = support_grad_dot(alpha, grads);
    gap = sdot - s.sign * s.magnitude * grads[s.index];
    double f = obj.value(alpha);
    if (!std::isfinite(f) || !std::isfinite(gap))
      throw std::runtime_error("solve_fw: non-finite objective or gap at iteration " +
                               std::to_string(k));

    if (gap <= cfg.epsilon) {
      trace.rows.push_back({k, s.index, -1, 0.0, f, gap, 0, elapsed_ns(), {}});
      trace.converged = true;
      break;
    }

    double gamma = step_size(k, cfg.step_rule, obj, alpha, s, gap, sdot);
    trace.rows.push_back({k, s.index, -1, gamma, f, gap, 0, elapsed_ns(), {}});
    alpha.step_toward_vertex(gamma, s.index, s.sign * s.magnitude);
    obj.apply_vertex_step(gamma, s.index, s.sign * s.magnitude);
  }

  trace.final_iterate = alpha;
  trace.final_gap = gap;
  trace.final_objective = obj.value(alpha);
  trace.converged = trace.converged || gap <= cfg.epsilon;
  return trace;
}

RunTrace solve_fw(const Problem& problem, const SolverConfig& cfg) {
  auto store = make_full_store(problem);
  auto obj = make_objective(problem, *store);
  return solve_fw(*obj, problem.atoms.count(), problem.domain, cfg);
}

}  // namespace dfw
