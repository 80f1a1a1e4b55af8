#include "dfw/kernel.hpp"

#include <cmath>

namespace dfw {

double KernelSpec::base_eval(const Column& xi, const Column& xj) const {
  if (base == Base::Linear) return xi.dot(xj);
  double sq = xi.squared_norm() + xj.squared_norm() - 2.0 * xi.dot(xj);
  if (sq < 0.0) sq = 0.0;
  return std::exp(-sq / (2.0 * sigma * sigma));
}

double KernelSpec::augmented(const Column& xi, double yi, int i, const Column& xj, double yj,
                             int j) const {
  double k = yi * yj * base_eval(xi, xj) + yi * yj;
  if (i == j) k += 1.0 / C;
  return k;
}

double KernelSpec::augmented_diag(const Column& xi, double yi) const {
  return yi * yi * base_eval(xi, xi) + yi * yi + 1.0 / C;
}

double mean_pairwise_distance(const AtomMatrix& points, int cap) {
  int n = points.count();
  int stride = n <= cap ? 1 : (n + cap - 1) / cap;
  std::vector<int> ids;
  for (int i = 0; i < n; i += stride) ids.push_back(i);
  if (ids.size() < 2) return 1.0;
  double total = 0.0;
  long long pairs = 0;
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      const Column& xa = points.col(ids[a]);
      const Column& xb = points.col(ids[b]);
      double sq = xa.squared_norm() + xb.squared_norm() - 2.0 * xa.dot(xb);
      total += std::sqrt(sq < 0.0 ? 0.0 : sq);
      ++pairs;
    }
  }
  double mean = total / static_cast<double>(pairs);
  return mean > 0.0 ? mean : 1.0;
}

void KernelRowCache::touch(int center) {
  if (rows_.size() >= capacity_ && rows_.find(center) == rows_.end()) {
    int evict = lru_.back();
    lru_.pop_back();
    rows_.erase(evict);
  }
  lru_.push_front(center);
  rows_[center] = Row{{}, lru_.begin()};
}

}  // namespace dfw
