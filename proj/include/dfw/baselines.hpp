#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dfw/fw.hpp"
#include "dfw/objectives.hpp"

namespace dfw {

struct BaselinePoint {
  int m;                   // atoms selected per node
  long long comm_reals;    // shipping cost to the designated solver node
  double objective;        // batch solve on the union of selected atoms
};

/// Each node ships m uniformly random local atoms (seeded) to node 0; the
/// union is solved centrally. Ledger: m * payload reals per shipping node.
BaselinePoint baseline_random(const Problem& problem,
                              std::span<const std::vector<int>> node_atoms, int m,
                              std::uint64_t seed, const SolverConfig& cfg);

/// Each node runs Frank-Wolfe locally for m iterations and ships the selected
/// support (at most m atoms per node).
BaselinePoint baseline_local_fw(const Problem& problem,
                                std::span<const std::vector<int>> node_atoms, int m,
                                const SolverConfig& cfg);

}  // namespace dfw
