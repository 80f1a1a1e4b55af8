#include "dfw/atoms.hpp"

#include <algorithm>
#include <cmath>

namespace dfw {

Column Column::dense(std::vector<double> values) {
  Column c;
  c.dense_ = true;
  c.dim_ = static_cast<int>(values.size());
  c.dense_val_ = std::move(values);
  return c;
}

Column Column::sparse(int dim, std::vector<int> indices, std::vector<double> values) {
  if (indices.size() != values.size())
    throw DimensionError("sparse column: index/value length mismatch");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= dim)
      throw DimensionError("sparse column: index out of range");
    if (i > 0 && indices[i] <= indices[i - 1])
      throw DimensionError("sparse column: indices must be strictly increasing");
  }
  Column c;
  c.dense_ = false;
  c.dim_ = dim;
  c.idx_ = std::move(indices);
  c.val_ = std::move(values);
  return c;
}

Column Column::compress(const std::vector<double>& values) {
  int nnz = 0;
  for (double v : values)
    if (v != 0.0) ++nnz;
  if (2 * nnz > static_cast<int>(values.size())) return dense(values);
  std::vector<int> idx;
  std::vector<double> val;
  idx.reserve(nnz);
  val.reserve(nnz);
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    if (values[i] != 0.0) {
      idx.push_back(i);
      val.push_back(values[i]);
    }
  }
  return sparse(static_cast<int>(values.size()), std::move(idx), std::move(val));
}

int Column::nnz() const {
  if (!dense_) return static_cast<int>(idx_.size());
  int k = 0;
  for (double v : dense_val_)
    if (v != 0.0) ++k;
  return k;
}

double Column::entry(int i) const {
  if (i < 0 || i >= dim_) throw DimensionError("column entry out of range");
  if (dense_) return dense_val_[i];
  auto it = std::lower_bound(idx_.begin(), idx_.end(), i);
  if (it == idx_.end() || *it != i) return 0.0;
  return val_[static_cast<std::size_t>(it - idx_.begin())];
}

double Column::dot(std::span<const double> v) const {
  if (static_cast<int>(v.size()) != dim_) throw DimensionError("dot: dimension mismatch");
  double s = 0.0;
  if (dense_) {
    for (int i = 0; i < dim_; ++i) s += dense_val_[i] * v[i];
  } else {
    for (std::size_t k = 0; k < idx_.size(); ++k) s += val_[k] * v[idx_[k]];
  }
  return s;
}

double Column::dot(const Column& other) const {
  if (other.dim_ != dim_) throw DimensionError("dot: dimension mismatch");
  if (dense_ && other.dense_) {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) s += dense_val_[i] * other.dense_val_[i];
    return s;
  }
  if (!dense_ && !other.dense_) {
    double s = 0.0;
    std::size_t a = 0, b = 0;
    while (a < idx_.size() && b < other.idx_.size()) {
      if (idx_[a] == other.idx_[b]) {
        s += val_[a] * other.val_[b];
        ++a;
        ++b;
      } else if (idx_[a] < other.idx_[b]) {
        ++a;
      } else {
        ++b;
      }
    }
    return s;
  }
  const Column& sp = dense_ ? other : *this;
  const Column& de = dense_ ? *this : other;
  double s = 0.0;
  for (std::size_t k = 0; k < sp.idx_.size(); ++k) s += sp.val_[k] * de.dense_val_[sp.idx_[k]];
  return s;
}

void Column::axpy(double c, std::vector<double>& out) const {
  if (static_cast<int>(out.size()) != dim_) throw DimensionError("axpy: dimension mismatch");
  if (dense_) {
    for (int i = 0; i < dim_; ++i) out[i] += c * dense_val_[i];
  } else {
    for (std::size_t k = 0; k < idx_.size(); ++k) out[idx_[k]] += c * val_[k];
  }
}

std::vector<double> Column::to_dense() const {
  if (dense_) return dense_val_;
  std::vector<double> out(dim_, 0.0);
  for (std::size_t k = 0; k < idx_.size(); ++k) out[idx_[k]] = val_[k];
  return out;
}

double Column::linf_norm() const {
  double m = 0.0;
  if (dense_) {
    for (double v : dense_val_) m = std::max(m, std::abs(v));
  } else {
    for (double v : val_) m = std::max(m, std::abs(v));
  }
  return m;
}

double Column::squared_norm() const {
  double s = 0.0;
  if (dense_) {
    for (double v : dense_val_) s += v * v;
  } else {
    for (double v : val_) s += v * v;
  }
  return s;
}

double Column::l1_dist(const Column& other) const {
  if (other.dim_ != dim_) throw DimensionError("l1_dist: dimension mismatch");
  if (dense_ || other.dense_) {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) s += std::abs(entry(i) - other.entry(i));
    return s;
  }
  double s = 0.0;
  std::size_t a = 0, b = 0;
  while (a < idx_.size() || b < other.idx_.size()) {
    if (b == other.idx_.size() || (a < idx_.size() && idx_[a] < other.idx_[b])) {
      s += std::abs(val_[a]);
      ++a;
    } else if (a == idx_.size() || other.idx_[b] < idx_[a]) {
      s += std::abs(other.val_[b]);
      ++b;
    } else {
      s += std::abs(val_[a] - other.val_[b]);
      ++a;
      ++b;
    }
  }
  return s;
}

AtomMatrix::AtomMatrix(int d, std::vector<Column> cols) : d_(d), cols_(std::move(cols)) {
  if (d_ < 1) throw DimensionError("atom matrix: d must be >= 1");
  if (cols_.empty()) throw DimensionError("atom matrix: need at least one atom");
  for (const Column& c : cols_) {
    if (c.dim() != d_) throw DimensionError("atom matrix: column dimension mismatch");
  }
}

const Column& AtomMatrix::col(int j) const {
  if (j < 0 || j >= count()) throw DimensionError("atom index out of range");
  return cols_[j];
}

double AtomMatrix::max_col_linf() const {
  double m = 0.0;
  for (const Column& c : cols_) m = std::max(m, c.linf_norm());
  return m;
}

AtomMatrix AtomMatrix::identity(int d) {
  std::vector<Column> cols;
  cols.reserve(d);
  for (int j = 0; j < d; ++j) cols.push_back(Column::sparse(d, {j}, {1.0}));
  return AtomMatrix(d, std::move(cols));
}

AtomMatrix AtomMatrix::from_dense(int d, int n, const std::vector<double>& col_major) {
  if (static_cast<int>(col_major.size()) != d * n)
    throw DimensionError("from_dense: size mismatch");
  std::vector<Column> cols;
  cols.reserve(n);
  for (int j = 0; j < n; ++j) {
    std::vector<double> v(col_major.begin() + static_cast<std::ptrdiff_t>(j) * d,
                          col_major.begin() + static_cast<std::ptrdiff_t>(j + 1) * d);
    cols.push_back(Column::compress(v));
  }
  return AtomMatrix(d, std::move(cols));
}

}  // namespace dfw
