#include "dfw/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "protocol_impl.hpp"

namespace dfw {

CenterSchedule CenterSchedule::parse(const std::string& s) {
  CenterSchedule sched;
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
  if (head == "fixed" && rest == "auto-balance") {
    sched.growth = Growth::Fixed;
    sched.auto_balance = true;
    return sched;
  }
  if (head == "fixed" && !rest.empty()) {
    sched.growth = Growth::Fixed;
    sched.fixed_m = std::stoi(rest);
    if (sched.fixed_m < 1) throw std::invalid_argument("centers: fixed m must be >= 1");
    return sched;
  }
  if (head == "linear" && !rest.empty()) {
    sched.growth = Growth::Linear;
    sched.linear_rate = std::stod(rest);
    if (sched.linear_rate <= 0.0) throw std::invalid_argument("centers: linear rate must be > 0");
    return sched;
  }
  throw std::invalid_argument("bad center schedule: " + s);
}

std::string CenterSchedule::to_string() const {
  if (growth == Growth::Linear) return "linear:" + std::to_string(linear_rate);
  if (auto_balance) return "fixed:auto-balance";
  return "fixed:" + std::to_string(fixed_m);
}

int CenterSchedule::target(int round, int node_index, int local_count,
                           std::span<const int> sizes) const {
  if (growth == Growth::Linear) {
    int step = static_cast<int>(std::ceil(linear_rate));
    long long m = static_cast<long long>(step) * (round + 1);
    return static_cast<int>(std::min<long long>(m, local_count));
  }
  if (auto_balance) {
    // aim at the mean atom count of the other nodes
    long long total = std::accumulate(sizes.begin(), sizes.end(), 0LL);
    long long others = total - sizes[node_index];
    int cnt = static_cast<int>(sizes.size()) - 1;
    int m = cnt > 0 ? static_cast<int>(std::llround(static_cast<double>(others) / cnt))
                    : local_count;
    return std::clamp(m, 1, local_count);
  }
  return std::min(fixed_m, local_count);
}

double grad_bound_G(const Problem& problem) {
  double radius = is_l1(problem.domain) ? std::get<L1Ball>(problem.domain).beta : 1.0;
  if (const auto* lasso = std::get_if<LassoSpec>(&problem.objective)) {
    double y_inf = 0.0;
    for (double v : lasso->target) y_inf = std::max(y_inf, std::abs(v));
    return 2.0 * (radius * problem.atoms.max_col_linf() + y_inf);
  }
  if (const auto* ada = std::get_if<AdaboostSpec>(&problem.objective)) {
    return 1.0 / ada->temperature;  // |grad g|_inf = |w|_inf / T <= 1/T
  }
  // SvmDual: clustering runs in the augmented-kernel feature space and the
  // selection-error bound is the metric radius itself; 0.5 folds that into
  // the common 2*r*G form.
  return 0.5;
}

ApproxResult solve_approx_dfw(const Problem& problem, const Topology& topo,
                              const PartitionSpec& partition, const ApproxOptions& options) {
  const bool l1 = is_l1(problem.domain);
  const bool svm = problem.kind() == ObjectiveKind::SvmDual;

  std::vector<int> holders = holder_nodes(topo, options.dfw.hub_holds_atoms);
  auto lists = partition_atoms(problem.atoms.count(), static_cast<int>(holders.size()), partition);
  std::vector<int> sizes(lists.size());
  for (std::size_t h = 0; h < lists.size(); ++h) sizes[h] = static_cast<int>(lists[h].size());

  // per-holder clustering state, grown per round by the schedule
  struct NodeClusters {
    CenterSet centers;
    MetricFn metric;
    int m = 0;
  };
  std::vector<NodeClusters> clusters(lists.size());
  std::vector<int> node_to_holder(topo.node_count(), -1);
  for (std::size_t h = 0; h < holders.size(); ++h) node_to_holder[holders[h]] = static_cast<int>(h);

  // Certificates need a global view; built only when asked for.
  std::unique_ptr<FullStore> oracle_store;
  std::unique_ptr<Objective> oracle_obj;
  Iterate oracle_alpha = start_iterate(problem.domain);
  if (options.certificates) {
    if (options.dfw.mode == RunMode::Drop)
      throw std::invalid_argument("certificates require sync mode");
    oracle_store = make_full_store(problem);
    oracle_obj = make_objective(problem, *oracle_store);
    oracle_obj->rebuild_cache(oracle_alpha);
  }

  ApproxResult result(problem.domain);

  detail::ProtocolHooks hooks;
  hooks.selector = [&](const NodeState& node) -> LocalSelection {
    int h = node_to_holder[node.id];
    if (h < 0 || node.owned.empty()) {
      LocalSelection s;
      s.node = node.id;
      return s;
    }
    NodeClusters& nc = clusters[h];
    if (!nc.metric) {
      nc.metric = svm ? kernel_metric(*node.store, std::get<SvmSpec>(problem.objective).kernel)
                      : l1_metric(*node.store);
      int m0 = options.schedule.target(0, h, sizes[h], sizes);
      greedy_selection(node.owned, nc.metric, nc.centers, m0);
      nc.m = static_cast<int>(nc.centers.centers.size());
    }
    return local_select_over(node, nc.centers.centers);
  };

  hooks.on_round = [&](int round, const ElectionOutcome& outcome, double gamma, double coeff) {
    if (!options.certificates) return;
    // exact best atom over all data at alpha^(k), through the oracle only
    int n = problem.atoms.count();
    int best = 0;
    double best_g = oracle_obj->grad_entry(0);
    for (int j = 1; j < n; ++j) {
      double g = oracle_obj->grad_entry(j);
      bool better = l1 ? std::abs(g) > std::abs(best_g) : g < best_g;
      if (better) {
        best = j;
        best_g = g;
      }
    }
    double selected_g = oracle_obj->grad_entry(outcome.winner_atom);
    double delta = l1 ? std::abs(best_g) - std::abs(selected_g) : selected_g - best_g;
    double r_max = 0.0;
    for (const NodeClusters& nc : clusters)
      if (nc.metric) r_max = std::max(r_max, nc.centers.radius);
    double bound = 2.0 * r_max * grad_bound_G(problem);
    result.certificates.push_back({round, delta, bound, r_max});
    oracle_alpha.step_toward_vertex(gamma, outcome.winner_atom, coeff);
    oracle_obj->apply_vertex_step(gamma, outcome.winner_atom, coeff);
  };

  hooks.after_update = [&](int round) {
    for (std::size_t h = 0; h < clusters.size(); ++h) {
      NodeClusters& nc = clusters[h];
      if (!nc.metric) continue;
      int next_m = options.schedule.target(round + 1, static_cast<int>(h), sizes[h], sizes);
      if (next_m > nc.m) {
        greedy_selection(lists[h], nc.metric, nc.centers, next_m - nc.m);
        nc.m = static_cast<int>(nc.centers.centers.size());
      }
    }
  };

  DfwResult base = detail::run_protocol(problem, topo, partition, options.dfw, hooks);
  result.trace = std::move(base.trace);
  result.ledger = std::move(base.ledger);
  return result;
}

}  // namespace dfw
