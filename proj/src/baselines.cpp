#include "dfw/baselines.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace dfw {

namespace {

// Ships the chosen atoms to node 0 and solves the restricted problem there.
BaselinePoint solve_on_union(const Problem& problem, const std::vector<std::vector<int>>& chosen,
                             int m, const SolverConfig& cfg) {
  std::set<int> union_ids;
  long long comm = 0;
  auto store = make_full_store(problem);
  int payload = 0;
  {
    auto probe_obj = make_objective(problem, *store);
    payload = probe_obj->payload_reals();
  }
  for (std::size_t node = 0; node < chosen.size(); ++node) {
    // node 0 already holds its own atoms
    if (node > 0) comm += static_cast<long long>(chosen[node].size()) * payload;
    union_ids.insert(chosen[node].begin(), chosen[node].end());
  }

  std::vector<int> ids(union_ids.begin(), union_ids.end());
  std::vector<Column> cols;
  cols.reserve(ids.size());
  std::vector<double> labels;
  const std::vector<double>* all_labels = problem.labels();
  for (int j : ids) {
    cols.push_back(problem.atoms.col(j));
    if (all_labels) labels.push_back((*all_labels)[j]);
  }
  Problem sub{AtomMatrix(problem.atoms.dim(), std::move(cols)), problem.objective,
              problem.domain};
  if (auto* svm = std::get_if<SvmSpec>(&sub.objective)) svm->labels = std::move(labels);

  RunTrace trace = solve_fw(sub, cfg);
  return BaselinePoint{m, comm, trace.final_objective};
}

}  // namespace

BaselinePoint baseline_random(const Problem& problem,
                              std::span<const std::vector<int>> node_atoms, int m,
                              std::uint64_t seed, const SolverConfig& cfg) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> chosen;
  chosen.reserve(node_atoms.size());
  for (const std::vector<int>& owned : node_atoms) {
    if (m > static_cast<int>(owned.size()))
      throw std::invalid_argument("baseline_random: m exceeds a node's atom count");
    std::vector<int> ids(owned);
    for (int i = 0; i < m; ++i) {
      std::uniform_int_distribution<int> pick(i, static_cast<int>(ids.size()) - 1);
      std::swap(ids[i], ids[pick(rng)]);
    }
    ids.resize(m);
    std::sort(ids.begin(), ids.end());
    chosen.push_back(std::move(ids));
  }
  return solve_on_union(problem, chosen, m, cfg);
}

BaselinePoint baseline_local_fw(const Problem& problem,
                                std::span<const std::vector<int>> node_atoms, int m,
                                const SolverConfig& cfg) {
  std::vector<std::vector<int>> chosen;
  chosen.reserve(node_atoms.size());
  for (const std::vector<int>& owned : node_atoms) {
    if (m > static_cast<int>(owned.size()))
      throw std::invalid_argument("baseline_local_fw: m exceeds a node's atom count");

    // local FW on the node's atoms only, m iterations
    std::vector<Column> cols;
    cols.reserve(owned.size());
    std::vector<double> labels;
    const std::vector<double>* all_labels = problem.labels();
    for (int j : owned) {
      cols.push_back(problem.atoms.col(j));
      if (all_labels) labels.push_back((*all_labels)[j]);
    }
    Problem local{AtomMatrix(problem.atoms.dim(), std::move(cols)), problem.objective,
                  problem.domain};
    if (auto* svm = std::get_if<SvmSpec>(&local.objective)) svm->labels = std::move(labels);

    SolverConfig local_cfg = cfg;
    local_cfg.max_iter = m;
    local_cfg.epsilon = 0.0;
    RunTrace trace = solve_fw(local, local_cfg);

    std::vector<int> picked;
    for (const auto& [local_j, w] : trace.final_iterate.support())
      picked.push_back(owned[local_j]);
    // a simplex start counts e_0 even if never reselected
    std::sort(picked.begin(), picked.end());
    chosen.push_back(std::move(picked));
  }
  return solve_on_union(problem, chosen, m, cfg);
}

}  // namespace dfw
