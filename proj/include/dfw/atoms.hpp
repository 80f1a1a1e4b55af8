#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfw {

struct DimensionError : std::runtime_error {
  explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

/// A single atom a_j in R^d, stored dense or as sorted (index, value) pairs.
/// Columns with more than 50% nonzeros are stored dense.
class Column {
 public:
  Column() = default;

  static Column dense(std::vector<double> values);
  static Column sparse(int dim, std::vector<int> indices, std::vector<double> values);
  /// Picks the dense/sparse representation from the nonzero count.
  static Column compress(const std::vector<double>& values);

  int dim() const { return dim_; }
  bool is_dense() const { return dense_; }
  int nnz() const;

  double entry(int i) const;
  double dot(std::span<const double> v) const;
  double dot(const Column& other) const;
  /// out += c * a_j
  void axpy(double c, std::vector<double>& out) const;
  std::vector<double> to_dense() const;

  double linf_norm() const;
  double squared_norm() const;
  double l1_dist(const Column& other) const;

  const std::vector<int>& sparse_indices() const { return idx_; }
  const std::vector<double>& sparse_values() const { return val_; }
  const std::vector<double>& dense_values() const { return dense_val_; }

 private:
  bool dense_ = true;
  int dim_ = 0;
  std::vector<double> dense_val_;
  std::vector<int> idx_;
  std::vector<double> val_;
};

/// Column-partitioned atom storage: A = [a_1 ... a_n] in R^{d x n}.
class AtomMatrix {
 public:
  AtomMatrix() = default;
  AtomMatrix(int d, std::vector<Column> cols);

  int dim() const { return d_; }
  int count() const { return static_cast<int>(cols_.size()); }
  const Column& col(int j) const;

  double max_col_linf() const;

  static AtomMatrix identity(int d);
  static AtomMatrix from_dense(int d, int n, const std::vector<double>& col_major);

 private:
  int d_ = 0;
  std::vector<Column> cols_;
};

}  // namespace dfw
