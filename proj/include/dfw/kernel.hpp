#pragma once

#include <list>
#include <unordered_map>

#include "dfw/atoms.hpp"

namespace dfw {

/// Base kernel k(x, x') plus the augmentation constants of the L2-SVM dual:
/// ktilde(z_i, z_j) = y_i y_j k(x_i, x_j) + y_i y_j + delta_ij / C.
struct KernelSpec {
  enum class Base { Linear, Rbf };
  Base base = Base::Rbf;
  double sigma = 1.0;  // RBF bandwidth
  double C = 100.0;

  double base_eval(const Column& xi, const Column& xj) const;
  double augmented(const Column& xi, double yi, int i, const Column& xj, double yj, int j) const;
  double augmented_diag(const Column& xi, double yi) const;
};

/// Mean pairwise distance over a subsample (deterministic stride, at most
/// `cap` points); used as the default RBF bandwidth.
double mean_pairwise_distance(const AtomMatrix& points, int cap = 1000);

/// LRU cache of augmented-kernel entries against a fixed center atom.
/// Rows are extended lazily as new atom ids are queried.
class KernelRowCache {
 public:
  explicit KernelRowCache(std::size_t capacity = 256) : capacity_(capacity) {}

  /// ktilde(z_center, z_other); `eval` computes a missing entry.
  template <typename Eval>
  double get(int center, int other, Eval&& eval) {
    auto it = rows_.find(center);
    if (it == rows_.end()) {
      touch(center);
      it = rows_.find(center);
    } else {
      lru_.splice(lru_.begin(), lru_, it->second.lru_pos);
    }
    auto& row = it->second.entries;
    auto e = row.find(other);
    if (e != row.end()) return e->second;
    double v = eval();
    row.emplace(other, v);
    return v;
  }

  std::size_t rows() const { return rows_.size(); }

 private:
  struct Row {
    std::unordered_map<int, double> entries;
    std::list<int>::iterator lru_pos;
  };

  void touch(int center);

  std::size_t capacity_;
  std::list<int> lru_;
  std::unordered_map<int, Row> rows_;
};

}  // namespace dfw
