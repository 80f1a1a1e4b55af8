#pragma once

#include <cstdint>
#include <vector>

#include "dfw/atoms.hpp"
#include "dfw/libsvm_io.hpp"

namespace dfw {

struct SynthLassoParams {
  int d = 100;
  int n = 1000;
  double density_a = 0.1;      // column density of A
  double density_alpha = 0.01;  // density of the planted solution
  double noise_var = 1e-3;
  std::uint64_t seed = 0;
};

/// Which norm defines lambda_max. The regularized-problem convention is
/// ||A^T y||_inf; AY mirrors a likely typo in the source experiment protocol
/// and must be selected explicitly.
enum class LambdaMaxRule { AtY, AY };

struct SynthLassoResult {
  AtomMatrix atoms;
  std::vector<double> target;
  std::vector<double> alpha_true;
  double lambda_max = 0.0;
  /// ||alpha_hat||_1 for the lambda = 0.1*lambda_max regularized solution
  /// (proximal gradient at desk scale).
  double suggested_beta = 0.0;
};

SynthLassoResult synth_lasso(const SynthLassoParams& params,
                             LambdaMaxRule rule = LambdaMaxRule::AtY);

double lambda_max_of(const AtomMatrix& atoms, const std::vector<double>& y, LambdaMaxRule rule);

/// Proximal-gradient (FISTA) solver for 0.5*||y - A a||^2 + lambda*||a||_1;
/// used to derive suggested_beta and as a reference in tests.
std::vector<double> fista_lasso(const AtomMatrix& atoms, const std::vector<double>& y,
                                double lambda, int iters = 500);

/// Two seeded Gaussian blobs with +-1 labels; columns are points.
LibsvmData synth_svm_points(int n, int d, std::uint64_t seed);

}  // namespace dfw
