#include "dfw/dfw.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "protocol_impl.hpp"

namespace dfw {

NodeState::NodeState(int node_id, std::vector<int> owned_ids, const Problem& problem)
    : id(node_id),
      owned(std::move(owned_ids)),
      store(make_node_store(problem, owned)),
      objective(make_objective(problem, *store)),
      replica(start_iterate(problem.domain)) {}

std::vector<int> holder_nodes(const Topology& topo, bool hub_holds_atoms) {
  std::vector<int> holders;
  int first = (topo.kind() == TopologyKind::Star && !hub_holds_atoms) ? 1 : 0;
  for (int v = first; v < topo.node_count(); ++v) holders.push_back(v);
  return holders;
}

LocalSelection local_select_over(const NodeState& node, std::span<const int> candidates) {
  LocalSelection sel;
  sel.node = node.id;
  if (candidates.empty()) return sel;
  const bool l1 = is_l1(node.replica.domain());

  int best = -1;
  double best_g = 0.0;
  for (int j : candidates) {
    double g = node.objective->grad_entry(j);
    if (best < 0) {
      best = j;
      best_g = g;
      continue;
    }
    bool better = l1 ? std::abs(g) > std::abs(best_g) : g < best_g;
    if (better) {
      best = j;
      best_g = g;
    }
  }

  double partial = 0.0;
  for (const auto& [j, w] : node.replica.support()) {
    if (node.store->owns(j)) partial += w * node.objective->grad_entry(j);
  }

  sel.atom = best;
  sel.grad = best_g;
  sel.partial_sum = partial;
  sel.empty = false;
  return sel;
}

LocalSelection local_select(const NodeState& node) { return local_select_over(node, node.owned); }

namespace detail {

ElectionOutcome elect(std::span<const LocalSelection> selections, const Topology& topo,
                      ElectionStrategy strategy, bool l1_domain, MessageLedger& ledger, int iter) {
  if (selections.empty()) throw std::runtime_error("dfw: election round with no candidates");

  ElectionOutcome out;
  double sum = 0.0;
  for (const LocalSelection& s : selections) {  // ascending node ids
    sum += s.partial_sum;
    if (out.winner_node < 0) {
      out = {s.node, s.atom, s.grad, 0.0};
      continue;
    }
    bool better = l1_domain ? std::abs(s.grad) > std::abs(out.winner_grad) : s.grad < out.winner_grad;
    if (better) {
      out.winner_node = s.node;
      out.winner_atom = s.atom;
      out.winner_grad = s.grad;
    }
  }
  out.partial_sum_total = sum;

  int n = topo.node_count();
  switch (strategy) {
    case ElectionStrategy::NaiveFlood:
      for (const LocalSelection& s : selections) {
        ledger.charge(iter, MsgKind::GradScalar, topo.flood_cost(s.node));
        ledger.charge(iter, MsgKind::PartialSum, topo.flood_cost(s.node));
      }
      break;
    case ElectionStrategy::TreeReduce:
      // one aggregated scalar per edge, up then down, per reduction
      ledger.charge(iter, MsgKind::ReduceScalar, 2LL * (n - 1));
      ledger.charge(iter, MsgKind::ReduceScalar, 2LL * (n - 1));
      break;
    case ElectionStrategy::StarCoordinator: {
      long long up = 0;
      for (const LocalSelection& s : selections) up += topo.depth(s.node);
      ledger.charge(iter, MsgKind::GradScalar, up);
      ledger.charge(iter, MsgKind::PartialSum, up);
      // reply (total partial sum + ack) to the winner only
      ledger.charge(iter, MsgKind::ReduceScalar, 2LL * topo.depth(out.winner_node));
      break;
    }
  }
  return out;
}

}  // namespace detail

ElectionOutcome global_select(std::span<const LocalSelection> selections, const Topology& topo,
                              ElectionStrategy strategy, bool l1_domain, int payload_reals,
                              MessageLedger& ledger, int iter) {
  ElectionOutcome out = detail::elect(selections, topo, strategy, l1_domain, ledger, iter);
  broadcast(ledger, topo, out.winner_node, 1, MsgKind::IndexScalar, iter);
  broadcast(ledger, topo, out.winner_node, payload_reals, MsgKind::AtomPayload, iter);
  return out;
}

namespace detail {

namespace {

double stopping_gap(const ElectionOutcome& out, const Domain& domain) {
  if (const auto* ball = std::get_if<L1Ball>(&domain))
    return out.partial_sum_total + ball->beta * std::abs(out.winner_grad);
  return out.partial_sum_total - out.winner_grad;
}

void deliver_atom(NodeState& node, const Problem& problem, int j) {
  if (node.store->sees(j)) {
    node.objective->on_atom_received(j, node.replica);
    return;
  }
  const std::vector<double>* labels = problem.labels();
  node.store->add_received(j, problem.atoms.col(j), labels ? (*labels)[j] : 0.0);
  node.objective->on_atom_received(j, node.replica);
}

void check_sync_replicas(const std::vector<NodeState>& nodes) {
  const Iterate& ref = nodes[0].replica;
  for (const NodeState& node : nodes) {
    const auto& a = ref.support();
    const auto& b = node.replica.support();
    if (a.size() != b.size())
      throw std::runtime_error("dfw: replica support divergence in sync mode");
    auto ia = a.begin();
    for (auto ib = b.begin(); ib != b.end(); ++ia, ++ib) {
      if (ia->first != ib->first || std::abs(ia->second - ib->second) > 1e-9)
        throw std::runtime_error("dfw: replica value divergence in sync mode");
    }
  }
}

}  // namespace

DfwResult run_protocol(const Problem& problem, const Topology& topo,
                       const PartitionSpec& partition, const DfwOptions& options,
                       const ProtocolHooks& hooks) {
  const int n_atoms = problem.atoms.count();
  const int n_nodes = topo.node_count();
  const bool l1 = is_l1(problem.domain);
  const bool drop_mode = options.mode == RunMode::Drop;
  const bool per_node_obj = drop_mode || options.record_per_node_objectives;
  const ElectionStrategy strategy = options.election.value_or(default_election(topo));

  std::vector<int> holders = holder_nodes(topo, options.hub_holds_atoms);
  auto lists = partition_atoms(n_atoms, static_cast<int>(holders.size()), partition);

  DfwResult result(problem.domain);
  MessageLedger& ledger = result.ledger;

  std::vector<NodeState> nodes;
  nodes.reserve(n_nodes);
  {
    std::vector<std::vector<int>> by_node(n_nodes);
    for (std::size_t h = 0; h < holders.size(); ++h) by_node[holders[h]] = std::move(lists[h]);
    for (int v = 0; v < n_nodes; ++v) nodes.emplace_back(v, std::move(by_node[v]), problem);
  }

  const int payload = nodes[0].objective->payload_reals();

  // Simplex runs start at e_0; the owner floods atom 0 so every replica can
  // build its cache.
  if (!l1) {
    int owner0 = -1;
    for (const NodeState& node : nodes)
      if (node.store->owns(0)) owner0 = node.id;
    if (owner0 < 0) throw std::runtime_error("dfw: atom 0 has no owner");
    for (NodeState& node : nodes)
      if (node.id != owner0) deliver_atom(node, problem, 0);
    broadcast(ledger, topo, owner0, payload, MsgKind::AtomPayload, 0);
  }
  for (NodeState& node : nodes) node.objective->rebuild_cache(node.replica);

  DropFilter drops(options.drop_seed, drop_mode ? options.drop_p : 0.0);

  auto t0 = std::chrono::steady_clock::now();
  auto elapsed_ns = [&t0] {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                                t0)
        .count();
  };

  std::function<LocalSelection(const NodeState&)> selector = hooks.selector;
  if (!selector) selector = [](const NodeState& n) { return local_select(n); };

  auto node_objectives = [&]() {
    std::vector<double> fs;
    if (!per_node_obj) return fs;
    fs.reserve(nodes.size());
    for (const NodeState& node : nodes) fs.push_back(node.local_objective());
    return fs;
  };
  auto mean_of = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
  };

  const int representative = holders.front();
  double last_gap = std::numeric_limits<double>::infinity();
  RunTrace& trace = result.trace;

  for (int k = 0; k < options.solver.max_iter; ++k) {
    // step 3: local selections on every atom-holding node
    std::vector<LocalSelection> selections;
    selections.reserve(holders.size());
    for (int h : holders) {
      LocalSelection s = selector(nodes[h]);
      if (!s.empty) selections.push_back(s);
    }
    if (selections.empty() && !drop_mode)
      throw std::runtime_error("dfw: every node reported an empty selection");

    if (drop_mode) {
      std::vector<LocalSelection> kept;
      for (const LocalSelection& s : selections) {
        if (drops.keep()) {
          kept.push_back(s);
          // direct exchange accounting under drops
          ledger.charge(k, MsgKind::GradScalar, 1);
          ledger.charge(k, MsgKind::PartialSum, 1);
        }
      }
      selections = std::move(kept);
      if (selections.empty()) {
        // stalled round: no candidate reached the election
        std::vector<double> fs = node_objectives();
        double favg = fs.empty() ? nodes[representative].local_objective() : mean_of(fs);
        trace.rows.push_back({k, -1, -1, 0.0, favg, last_gap, ledger.total(), elapsed_ns(),
                              std::move(fs)});
        continue;
      }
    }

    // step 4: election + stopping pieces
    ElectionOutcome outcome =
        elect(selections, topo, drop_mode ? ElectionStrategy::NaiveFlood : strategy, l1, ledger, k);
    double gap = stopping_gap(outcome, problem.domain);
    last_gap = gap;

    std::vector<double> fs = node_objectives();
    double f = drop_mode ? mean_of(fs) : nodes[representative].local_objective();
    if (!std::isfinite(f) || !std::isfinite(gap))
      throw std::runtime_error("dfw: non-finite objective or gap at round " + std::to_string(k));

    if (gap <= options.solver.epsilon) {
      trace.rows.push_back({k, outcome.winner_atom, outcome.winner_node, 0.0, f, gap,
                            ledger.total(), elapsed_ns(), std::move(fs)});
      trace.converged = true;
      break;
    }

    // step size; line-search gamma is computed by the winner and broadcast
    NodeState& winner = nodes[outcome.winner_node];
    double coeff = 1.0;
    if (l1) {
      int sign = outcome.winner_grad > 0.0 ? -1 : +1;
      coeff = sign * std::get<L1Ball>(problem.domain).beta;
    }
    LmoResult vertex{outcome.winner_atom, coeff < 0.0 ? -1 : +1, std::abs(coeff)};
    double gamma = step_size(k, options.solver.step_rule, *winner.objective, winner.replica,
                             vertex, gap, outcome.partial_sum_total);
    const bool send_gamma = options.solver.step_rule == StepRule::LineSearch;

    if (hooks.on_round) hooks.on_round(k, outcome, gamma, coeff);

    // step 4 continued: winner floods index + atom (+ gamma)
    std::vector<bool> delivered(nodes.size(), false);
    delivered[outcome.winner_node] = true;
    if (drop_mode) {
      long long copy_reals = 1 + payload + (send_gamma ? 1 : 0);
      for (int v = 0; v < n_nodes; ++v) {
        if (v == outcome.winner_node) continue;
        if (drops.keep()) {
          delivered[v] = true;
          ledger.charge(k, MsgKind::IndexScalar, 1);
          ledger.charge(k, MsgKind::AtomPayload, copy_reals - 1);
        }
      }
    } else {
      std::fill(delivered.begin(), delivered.end(), true);
      broadcast(ledger, topo, outcome.winner_node, 1, MsgKind::IndexScalar, k);
      broadcast(ledger, topo, outcome.winner_node, payload, MsgKind::AtomPayload, k);
      if (send_gamma) broadcast(ledger, topo, outcome.winner_node, 1, MsgKind::ReduceScalar, k);
    }

    // step 5: synchronized update on every node that got the payload
    for (NodeState& node : nodes) {
      if (!delivered[node.id]) continue;
      deliver_atom(node, problem, outcome.winner_atom);
      node.replica.step_toward_vertex(gamma, outcome.winner_atom, coeff);
      node.objective->apply_vertex_step(gamma, outcome.winner_atom, coeff);
    }
    if (!drop_mode) check_sync_replicas(nodes);

    trace.rows.push_back({k, outcome.winner_atom, outcome.winner_node, gamma, f, gap,
                          ledger.total(), elapsed_ns(), std::move(fs)});

    if (hooks.after_update) hooks.after_update(k);
  }

  trace.final_iterate = nodes[representative].replica;
  trace.final_gap = last_gap;
  if (drop_mode) {
    std::vector<double> fs = node_objectives();
    trace.final_objective = mean_of(fs);
  } else {
    trace.final_objective = nodes[representative].local_objective();
  }
  trace.converged = trace.converged || last_gap <= options.solver.epsilon;
  return result;
}

}  // namespace detail

DfwResult solve_dfw(const Problem& problem, const Topology& topo, const PartitionSpec& partition,
                    const DfwOptions& options) {
  detail::ProtocolHooks hooks;
  return detail::run_protocol(problem, topo, partition, options, hooks);
}

}  // namespace dfw
