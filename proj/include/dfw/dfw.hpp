#pragma once

#include <memory>
#include <optional>

#include "dfw/fw.hpp"
#include "dfw/netops.hpp"
#include "dfw/objectives.hpp"
#include "dfw/partition.hpp"

namespace dfw {

/// One simulated machine: its atom ids, a store restricted to those atoms
/// plus broadcast winners, a replica of the iterate and the objective cache.
struct NodeState {
  int id = -1;
  std::vector<int> owned;  // ascending global atom ids
  std::unique_ptr<NodeStore> store;
  std::unique_ptr<Objective> objective;
  Iterate replica;

  NodeState(int node_id, std::vector<int> owned_ids, const Problem& problem);
  double local_objective() const { return objective->value(replica); }
};

/// Per-round per-node report: locally selected atom, its gradient entry, and
/// the partial sum for the stopping criterion.
struct LocalSelection {
  int node = -1;
  int atom = -1;
  double grad = 0.0;
  double partial_sum = 0.0;
  bool empty = true;  // sentinel: node holds no candidate this round
};

/// Scans the node's own atoms: argmax |grad| for the l1 ball, argmin grad for
/// the simplex, smallest-index ties; partial sum over the owned support.
LocalSelection local_select(const NodeState& node);
/// Same, restricted to a candidate subset (approximate variant).
LocalSelection local_select_over(const NodeState& node, std::span<const int> candidates);

struct ElectionOutcome {
  int winner_node = -1;
  int winner_atom = -1;
  double winner_grad = 0.0;
  double partial_sum_total = 0.0;
};

/// Elects argmax_i |g_i| (argmin for the simplex), smallest-node-id ties,
/// totals the partial sums, and floods the winner's index + atom payload.
/// Charges the strategy's exact scalar cost plus (payload_reals + 1) floods.
ElectionOutcome global_select(std::span<const LocalSelection> selections, const Topology& topo,
                              ElectionStrategy strategy, bool l1_domain, int payload_reals,
                              MessageLedger& ledger, int iter);

enum class RunMode { Sync, Drop };

struct DfwOptions {
  SolverConfig solver;
  std::optional<ElectionStrategy> election;  // default: per-topology
  bool hub_holds_atoms = false;              // star hubs hold no atoms by default
  RunMode mode = RunMode::Sync;
  double drop_p = 0.0;
  std::uint64_t drop_seed = 0;
  bool record_per_node_objectives = false;  // always on in Drop mode
};

struct DfwResult {
  RunTrace trace;
  MessageLedger ledger;
  explicit DfwResult(Domain d) : trace(std::move(d)) {}
};

/// Nodes that hold atoms under the given topology/options (a star hub is
/// excluded unless hub_holds_atoms).
std::vector<int> holder_nodes(const Topology& topo, bool hub_holds_atoms);

DfwResult solve_dfw(const Problem& problem, const Topology& topo, const PartitionSpec& partition,
                    const DfwOptions& options);

}  // namespace dfw
