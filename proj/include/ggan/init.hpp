#pragma once

#include <cmath>

#include "ggan/linear.hpp"
#include "ggan/lstm.hpp"
#include "ggan/rng.hpp"

// Weight initialization: dense input/head maps uniform in +-1/sqrt(fan_in),
// recurrent weights orthogonal per gate block, forget-gate bias 1.

namespace ggan::net {

template <typename S>
void init_uniform_fanin(Matrix<S>& w, int fan_in, Rng& rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
  for (size_t i = 0; i < w.size(); ++i)
    w.data()[i] = static_cast<S>(rng.uniform(-bound, bound));
}

/// Orthogonalize a square gaussian matrix with modified Gram-Schmidt.
template <typename S>
Matrix<S> random_orthogonal(int n, Rng& rng) {
  Matrix<double> q(n, n);
  for (size_t i = 0; i < q.size(); ++i) q.data()[i] = rng.gaussian();
  for (int c = 0; c < n; ++c) {
    for (int prev = 0; prev < c; ++prev) {
      double dot = 0;
      for (int r = 0; r < n; ++r) dot += q(r, c) * q(r, prev);
      for (int r = 0; r < n; ++r) q(r, c) -= dot * q(r, prev);
    }
    double norm = 0;
    for (int r = 0; r < n; ++r) norm += q(r, c) * q(r, c);
    norm = std::sqrt(norm);
    for (int r = 0; r < n; ++r) q(r, c) /= norm;
  }
  return q.template cast<S>();
}

template <typename S>
void init_lstm(LstmParams<S>& p, int in_dim, int hidden, Rng& rng) {
  p.w_x.resize(in_dim, 4 * hidden);
  p.w_h.resize(hidden, 4 * hidden);
  p.b.assign(4 * hidden, S(0));
  init_uniform_fanin(p.w_x, in_dim, rng);
  for (int gate = 0; gate < 4; ++gate) {
    Matrix<S> q = random_orthogonal<S>(hidden, rng);
    for (int r = 0; r < hidden; ++r)
      for (int c = 0; c < hidden; ++c) p.w_h(r, gate * hidden + c) = q(r, c);
  }
  for (int j = 0; j < hidden; ++j) p.b[hidden + j] = S(1);  // forget gate
}

template <typename S>
void init_linear(Linear<S>& l, int in_dim, int out_dim, Rng& rng) {
  l.w.resize(in_dim, out_dim);
  l.b.assign(out_dim, S(0));
  init_uniform_fanin(l.w, in_dim, rng);
}

}  // namespace ggan::net
