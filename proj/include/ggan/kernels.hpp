#pragma once

#include <cassert>

#include "ggan/exec.hpp"
#include "ggan/matrix.hpp"

// Batched linear-algebra kernels. All parallelism is over independent output
// rows; per-row arithmetic lives in noinline helpers so the serial and OpenMP
// drivers execute the exact same code. Accumulation order never depends on
// the thread count, which keeps results bit-identical across Exec modes.

namespace ggan {
namespace kern {

#if defined(__GNUC__)
#define GGAN_NOINLINE __attribute__((noinline))
#else
#define GGAN_NOINLINE
#endif

template <typename S>
GGAN_NOINLINE void axpy_row(const S* a_row, const S* b, S* c_row, int k, int n) {
  for (int kk = 0; kk < k; ++kk) {
    const S a = a_row[kk];
    const S* brow = b + static_cast<size_t>(kk) * n;
    for (int j = 0; j < n; ++j) c_row[j] += a * brow[j];
  }
}

template <typename S>
GGAN_NOINLINE void dot_row(const S* a_row, const S* bt, S* c_row, int k, int n) {
  for (int j = 0; j < n; ++j) {
    const S* brow = bt + static_cast<size_t>(j) * k;
    S acc = S(0);
    for (int kk = 0; kk < k; ++kk) acc += a_row[kk] * brow[kk];
    c_row[j] += acc;
  }
}

template <typename S>
GGAN_NOINLINE void outer_col(const S* a, const S* b, S* w_row, int m, int k, int n, int col) {
  for (int i = 0; i < m; ++i) {
    const S a_ik = a[static_cast<size_t>(i) * k + col];
    const S* brow = b + static_cast<size_t>(i) * n;
    for (int j = 0; j < n; ++j) w_row[j] += a_ik * brow[j];
  }
}

}  // namespace kern

/// C(m,n) += A(m,k) * B(k,n)
template <typename S>
void gemm_acc(const Matrix<S>& a, const Matrix<S>& b, Matrix<S>& c, Exec mode) {
  assert(a.cols() == b.rows() && a.rows() == c.rows() && b.cols() == c.cols());
  const int m = a.rows(), k = a.cols(), n = b.cols();
  for_rows(m, mode, [&](int i) { kern::axpy_row(a.row(i), b.data(), c.row(i), k, n); });
}

/// C(m,n) += A(m,k) * B(n,k)^T
template <typename S>
void gemm_nt_acc(const Matrix<S>& a, const Matrix<S>& bt, Matrix<S>& c, Exec mode) {
  assert(a.cols() == bt.cols() && a.rows() == c.rows() && bt.rows() == c.cols());
  const int m = a.rows(), k = a.cols(), n = bt.rows();
  for_rows(m, mode, [&](int i) { kern::dot_row(a.row(i), bt.data(), c.row(i), k, n); });
}

/// W(k,n) += A(m,k)^T * B(m,n) — weight-gradient accumulation.
/// Parallel over rows of W; the sum over samples runs in fixed index order.
template <typename S>
void gemm_tn_acc(const Matrix<S>& a, const Matrix<S>& b, Matrix<S>& w, Exec mode) {
  assert(a.rows() == b.rows() && a.cols() == w.rows() && b.cols() == w.cols());
  const int m = a.rows(), k = a.cols(), n = b.cols();
  for_rows(k, mode, [&](int col) { kern::outer_col(a.data(), b.data(), w.row(col), m, k, n, col); });
}

/// out(n) += column sums of B(m,n), fixed row order.
template <typename S>
void colsum_acc(const Matrix<S>& b, std::vector<S>& out) {
  assert(static_cast<int>(out.size()) == b.cols());
  for (int i = 0; i < b.rows(); ++i) {
    const S* row = b.row(i);
    for (int j = 0; j < b.cols(); ++j) out[j] += row[j];
  }
}

/// Every row of A := bias.
template <typename S>
void set_rows_to_bias(Matrix<S>& a, const std::vector<S>& bias, Exec mode) {
  assert(static_cast<int>(bias.size()) == a.cols());
  const int n = a.cols();
  for_rows(a.rows(), mode, [&](int i) {
    S* row = a.row(i);
    for (int j = 0; j < n; ++j) row[j] = bias[j];
  });
}

/// Elementwise map over rows: body(row_ptr..., cols).
template <typename S, typename F>
void for_each_row(Matrix<S>& a, Exec mode, F&& body) {
  for_rows(a.rows(), mode, [&](int i) { body(a.row(i), a.cols()); });
}

template <typename S>
void add_inplace(Matrix<S>& a, const Matrix<S>& b, Exec mode) {
  assert(a.same_shape(b));
  const int n = a.cols();
  for_rows(a.rows(), mode, [&](int i) {
    S* ar = a.row(i);
    const S* br = b.row(i);
    for (int j = 0; j < n; ++j) ar[j] += br[j];
  });
}

/// Sum of all entries, accumulated in double in fixed order.
template <typename S>
double sum_all(const Matrix<S>& a) {
  double acc = 0.0;
  const S* p = a.data();
  for (size_t i = 0; i < a.size(); ++i) acc += static_cast<double>(p[i]);
  return acc;
}

}  // namespace ggan
