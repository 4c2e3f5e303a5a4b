#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace ggan {

/// Dense row-major matrix. Batched activations use rows = samples.
template <typename S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, S value = S(0))
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, value) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  S* data() { return data_.data(); }
  const S* data() const { return data_.data(); }
  S* row(int r) { return data_.data() + static_cast<size_t>(r) * cols_; }
  const S* row(int r) const { return data_.data() + static_cast<size_t>(r) * cols_; }

  S& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  S operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  void resize(int rows, int cols) {
    rows_ = rows;
    cols_ = cols;
    data_.assign(static_cast<size_t>(rows) * cols, S(0));
  }
  void fill(S v) { std::fill(data_.begin(), data_.end(), v); }
  void zero() { fill(S(0)); }

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  template <typename T>
  Matrix<T> cast() const {
    Matrix<T> out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data()[i] = static_cast<T>(data_[i]);
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<S> data_;
};

using MatF = Matrix<float>;
using MatD = Matrix<double>;

}  // namespace ggan
