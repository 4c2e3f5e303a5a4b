#pragma once

#include <vector>

#include "ggan/kernels.hpp"
#include "ggan/matrix.hpp"

namespace ggan::net {

template <typename S>
struct Linear {
  Matrix<S> w;       // (in, out)
  std::vector<S> b;  // out

  int in_dim() const { return w.rows(); }
  int out_dim() const { return w.cols(); }
};

template <typename S>
struct LinearGrads {
  Matrix<S> w;
  std::vector<S> b;

  void match(const Linear<S>& l) {
    w.resize(l.w.rows(), l.w.cols());
    b.assign(l.b.size(), S(0));
  }
};

template <typename S>
Matrix<S> linear_forward(const Linear<S>& l, const Matrix<S>& x, Exec mode) {
  Matrix<S> y(x.rows(), l.out_dim());
  set_rows_to_bias(y, l.b, mode);
  gemm_acc(x, l.w, y, mode);
  return y;
}

template <typename S>
void linear_backward(const Linear<S>& l, const Matrix<S>& x, const Matrix<S>& dy,
                     LinearGrads<S>* grads, Matrix<S>* dx, Exec mode) {
  if (grads) {
    gemm_tn_acc(x, dy, grads->w, mode);
    colsum_acc(dy, grads->b);
  }
  if (dx) gemm_nt_acc(dy, l.w, *dx, mode);
}

}  // namespace ggan::net
