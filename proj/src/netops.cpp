#include "dfw/netops.hpp"

#include <cmath>
#include <stdexcept>

namespace dfw {

ElectionStrategy default_election(const Topology& topo) {
  switch (topo.kind()) {
    case TopologyKind::Star:
      return ElectionStrategy::StarCoordinator;
    case TopologyKind::Tree:
    case TopologyKind::Full:
      return ElectionStrategy::TreeReduce;
    case TopologyKind::General:
      return ElectionStrategy::NaiveFlood;
  }
  return ElectionStrategy::NaiveFlood;
}

ElectionStrategy parse_election(const std::string& s) {
  if (s == "naive") return ElectionStrategy::NaiveFlood;
  if (s == "tree") return ElectionStrategy::TreeReduce;
  if (s == "star") return ElectionStrategy::StarCoordinator;
  throw std::invalid_argument("unknown election strategy: " + s);
}

const char* election_name(ElectionStrategy s) {
  switch (s) {
    case ElectionStrategy::NaiveFlood:
      return "naive";
    case ElectionStrategy::TreeReduce:
      return "tree";
    case ElectionStrategy::StarCoordinator:
      return "star";
  }
  return "?";
}

long long broadcast(MessageLedger& ledger, const Topology& topo, int origin, long long real_count,
                    MsgKind kind, int iter) {
  if (real_count < 0) throw std::invalid_argument("broadcast: negative real count");
  if (origin < 0 || origin >= topo.node_count())
    throw std::out_of_range("broadcast: origin out of range");
  long long cost = static_cast<long long>(topo.flood_cost(origin)) * real_count;
  ledger.charge(iter, kind, cost);
  return cost;
}

namespace {

bool beats(double challenger, double incumbent, ReduceKey key) {
  if (key == ReduceKey::AbsValue) return std::abs(challenger) > std::abs(incumbent);
  return challenger < incumbent;
}

// One aggregated scalar per edge, up and down; result known at all nodes.
long long reduce_cost(const Topology& topo, std::span<const NodeScalar> values,
                      ElectionStrategy strategy) {
  int n = topo.node_count();
  if (strategy == ElectionStrategy::NaiveFlood) {
    long long c = 0;
    for (const NodeScalar& v : values) c += topo.flood_cost(v.node);
    return c;
  }
  return 2LL * (n - 1);
}

}  // namespace

ReduceMaxResult reduce_max(MessageLedger& ledger, const Topology& topo,
                           std::span<const NodeScalar> values, ReduceKey key,
                           ElectionStrategy strategy, int iter) {
  if (values.empty()) throw std::invalid_argument("reduce_max: no participant scalars");
  ReduceMaxResult best{values[0].node, values[0].value};
  for (const NodeScalar& v : values.subspan(1)) {
    // ascending node ids assumed; strict improvement keeps the smallest id on ties
    if (beats(v.value, best.value, key)) best = {v.node, v.value};
  }
  ledger.charge(iter, MsgKind::ReduceScalar, reduce_cost(topo, values, strategy));
  return best;
}

double reduce_sum(MessageLedger& ledger, const Topology& topo, std::span<const NodeScalar> values,
                  ElectionStrategy strategy, int iter) {
  double total = 0.0;
  for (const NodeScalar& v : values) total += v.value;  // node-id order fold
  ledger.charge(iter, MsgKind::ReduceScalar, reduce_cost(topo, values, strategy));
  return total;
}

DropFilter::DropFilter(std::uint64_t seed, double p) : rng_(seed), p_(p) {
  if (p < 0.0 || p >= 1.0) throw std::invalid_argument("drop probability must be in [0,1)");
}

bool DropFilter::keep() {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return u(rng_) >= p_;
}

}  // namespace dfw
