#pragma once

#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "dfw/kernel.hpp"
#include "dfw/objectives.hpp"

namespace dfw {

/// Distance between two atoms given by global id.
using MetricFn = std::function<double(int, int)>;

MetricFn l1_metric(const AtomStore& store);
/// Squared augmented-kernel feature distance
/// ktilde(i,i) + ktilde(j,j) - 2 ktilde(i,j).
MetricFn kernel_metric(const AtomStore& store, const KernelSpec& kernel);

/// Greedy m-center state for one node: chosen centers (ascending), each local
/// atom's distance to its nearest center, and the achieved radius.
struct CenterSet {
  std::vector<int> centers;
  std::unordered_map<int, double> nearest;
  double radius = 0.0;

  bool contains(int id) const;
};

/// Adds delta_k centers by farthest-first traversal (smallest-index ties).
/// An empty set is seeded with the smallest-index atom, which counts toward
/// delta_k. Stops early once every atom is a center.
void greedy_selection(std::span<const int> atom_ids, const MetricFn& metric, CenterSet& centers,
                      int delta_k);

/// Exact optimal m-center radius with centers restricted to the atoms;
/// exponential enumeration, guarded to |atom_ids| <= 12.
double brute_force_optimal_radius(std::span<const int> atom_ids, const MetricFn& metric, int m);

}  // namespace dfw
