#pragma once

#include <string>
#include <vector>

#include "dfw/clustering.hpp"
#include "dfw/dfw.hpp"

namespace dfw {

/// Per-node center-count schedule m_i^(k).
struct CenterSchedule {
  enum class Growth { Fixed, Linear };
  Growth growth = Growth::Fixed;
  int fixed_m = 0;          // Fixed: centers per node (0 with auto_balance)
  bool auto_balance = false;
  double linear_rate = 1.0;  // Linear: ceil(rate) centers added per round

  /// "fixed:m" | "fixed:auto-balance" | "linear:rate"
  static CenterSchedule parse(const std::string& s);
  std::string to_string() const;

  /// m_i at round k for a node with local_count atoms; sizes[] are all
  /// holders' atom counts (auto-balance).
  int target(int round, int node_index, int local_count, std::span<const int> sizes) const;
};

struct RoundCertificate {
  int iter;
  double delta;  // |grad at the true best atom| - |grad at the selected atom|
  double bound;  // 2 * r_max * G (direct kernel-metric radius for SvmDual)
  double r_max;
};

struct ApproxOptions {
  DfwOptions dfw;
  CenterSchedule schedule;
  /// Computes per-round error certificates through a global, test-only
  /// oracle; off in production runs.
  bool certificates = false;
};

struct ApproxResult {
  RunTrace trace;
  MessageLedger ledger;
  std::vector<RoundCertificate> certificates;
  explicit ApproxResult(Domain d) : trace(std::move(d)) {}
};

/// Upper bound on G = max over feasible alpha of the infinity norm of
/// grad g(A alpha). For SvmDual the kernel-metric certificate absorbs G;
/// the returned 0.5 makes 2*r*G equal the direct metric bound r.
double grad_bound_G(const Problem& problem);

ApproxResult solve_approx_dfw(const Problem& problem, const Topology& topo,
                              const PartitionSpec& partition, const ApproxOptions& options);

}  // namespace dfw
