#pragma once

#include <functional>
#include <vector>

#include "dfw/dfw.hpp"

namespace dfw::detail {

/// Round customization points shared by the exact and approximate solvers.
struct ProtocolHooks {
  /// Per-node candidate selection; defaults to local_select over owned atoms.
  std::function<LocalSelection(const NodeState&)> selector;
  /// Called after the winner and step size are fixed, before replicas update
  /// (iterate state is still alpha^(k)).
  std::function<void(int round, const ElectionOutcome& outcome, double gamma, double coeff)>
      on_round;
  /// Called after all replicas updated (center growth).
  std::function<void(int round)> after_update;
};

DfwResult run_protocol(const Problem& problem, const Topology& topo,
                       const PartitionSpec& partition, const DfwOptions& options,
                       const ProtocolHooks& hooks);

ElectionOutcome elect(std::span<const LocalSelection> selections, const Topology& topo,
                      ElectionStrategy strategy, bool l1_domain, MessageLedger& ledger, int iter);

}  // namespace dfw::detail
