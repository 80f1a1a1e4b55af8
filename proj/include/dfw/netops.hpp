#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "dfw/ledger.hpp"
#include "dfw/topology.hpp"

namespace dfw {

/// How per-round scalars travel. All strategies deliver the same values to
/// every node; they differ only in ledger cost.
enum class ElectionStrategy { NaiveFlood, TreeReduce, StarCoordinator };

ElectionStrategy default_election(const Topology& topo);
ElectionStrategy parse_election(const std::string& s);  // "auto" handled by caller
const char* election_name(ElectionStrategy s);

/// Delivers `real_count` reals from `origin` to all nodes. Charges
/// flood_cost(origin) * real_count; returns the charged amount.
long long broadcast(MessageLedger& ledger, const Topology& topo, int origin, long long real_count,
                    MsgKind kind, int iter);

enum class ReduceKey { AbsValue, MinValue };

struct NodeScalar {
  int node;
  double value;
};

struct ReduceMaxResult {
  int node;
  double value;
};

/// Winner over participant scalars (largest |value| or smallest value),
/// smallest-node-id tie break; the result is known at all nodes.
/// TreeReduce/StarCoordinator charge exactly (N-1) up + (N-1) down;
/// NaiveFlood charges one flood per participant scalar.
ReduceMaxResult reduce_max(MessageLedger& ledger, const Topology& topo,
                           std::span<const NodeScalar> values, ReduceKey key,
                           ElectionStrategy strategy, int iter);

/// Exact total via a left fold in node-id order; same costs as reduce_max.
double reduce_sum(MessageLedger& ledger, const Topology& topo, std::span<const NodeScalar> values,
                  ElectionStrategy strategy, int iter);

/// Deterministic Bernoulli(1-p) keep/drop stream for the asynchrony model.
class DropFilter {
 public:
  DropFilter(std::uint64_t seed, double p);
  bool keep();
  double drop_probability() const { return p_; }

 private:
  std::mt19937_64 rng_;
  double p_;
};

}  // namespace dfw
