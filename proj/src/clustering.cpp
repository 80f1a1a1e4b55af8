#include "dfw/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dfw {

MetricFn l1_metric(const AtomStore& store) {
  return [&store](int a, int b) { return store.require(a).l1_dist(store.require(b)); };
}

MetricFn kernel_metric(const AtomStore& store, const KernelSpec& kernel) {
  return [&store, kernel](int a, int b) {
    const Column& xa = store.require(a);
    const Column& xb = store.require(b);
    double ya = store.label(a);
    double yb = store.label(b);
    return kernel.augmented_diag(xa, ya) + kernel.augmented_diag(xb, yb) -
           2.0 * kernel.augmented(xa, ya, a, xb, yb, b);
  };
}

bool CenterSet::contains(int id) const {
  return std::binary_search(centers.begin(), centers.end(), id);
}

void greedy_selection(std::span<const int> atom_ids, const MetricFn& metric, CenterSet& centers,
                      int delta_k) {
  if (delta_k < 0) throw std::invalid_argument("greedy_selection: negative center count");
  const double inf = std::numeric_limits<double>::infinity();

  auto add_center = [&](int c) {
    centers.centers.insert(
        std::upper_bound(centers.centers.begin(), centers.centers.end(), c), c);
    double radius = 0.0;
    for (int j : atom_ids) {
      double d = j == c ? 0.0 : metric(j, c);
      auto it = centers.nearest.find(j);
      if (it == centers.nearest.end() || d < it->second) {
        centers.nearest[j] = d;
        radius = std::max(radius, d);
      } else {
        radius = std::max(radius, it->second);
      }
    }
    centers.radius = radius;
  };

  for (int step = 0; step < delta_k; ++step) {
    if (centers.centers.size() >= atom_ids.size()) break;  // every atom is a center
    if (centers.centers.empty()) {
      add_center(*std::min_element(atom_ids.begin(), atom_ids.end()));
      continue;
    }
    int farthest = -1;
    double best = -inf;
    for (int j : atom_ids) {  // ascending ids: strict > keeps the smallest on ties
      double d = centers.nearest.at(j);
      if (d > best) {
        best = d;
        farthest = j;
      }
    }
    add_center(farthest);
  }
}

double brute_force_optimal_radius(std::span<const int> atom_ids, const MetricFn& metric, int m) {
  int n = static_cast<int>(atom_ids.size());
  if (n > 12) throw std::invalid_argument("brute_force_optimal_radius: too many atoms");
  if (m < 1) throw std::invalid_argument("brute_force_optimal_radius: m must be >= 1");
  if (m >= n) return 0.0;

  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) dist[a][b] = dist[b][a] = metric(atom_ids[a], atom_ids[b]);

  double best = std::numeric_limits<double>::infinity();
  std::vector<int> pick(m);
  // enumerate all size-m subsets of [0, n)
  for (int i = 0; i < m; ++i) pick[i] = i;
  while (true) {
    double radius = 0.0;
    for (int j = 0; j < n; ++j) {
      double nearest = std::numeric_limits<double>::infinity();
      for (int c : pick) nearest = std::min(nearest, dist[j][c]);
      radius = std::max(radius, nearest);
    }
    best = std::min(best, radius);

    int i = m - 1;
    while (i >= 0 && pick[i] == n - m + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int k = i + 1; k < m; ++k) pick[k] = pick[k - 1] + 1;
  }
  return best;
}

}  // namespace dfw
