#pragma once

#include <cmath>
#include <vector>

#include "ggan/kernels.hpp"
#include "ggan/matrix.hpp"

// Single-layer unidirectional LSTM over fixed-length sequences, batched with
// rows = samples. Gate columns are ordered [input | forget | cell | output].
// Initial hidden and cell states are zero.

namespace ggan::net {

template <typename S>
struct LstmParams {
  Matrix<S> w_x;     // (in, 4H)
  Matrix<S> w_h;     // (H, 4H)
  std::vector<S> b;  // 4H

  int in_dim() const { return w_x.rows(); }
  int hidden() const { return w_h.rows(); }
};

template <typename S>
struct LstmGrads {
  Matrix<S> w_x;
  Matrix<S> w_h;
  std::vector<S> b;

  void match(const LstmParams<S>& p) {
    w_x.resize(p.w_x.rows(), p.w_x.cols());
    w_h.resize(p.w_h.rows(), p.w_h.cols());
    b.assign(p.b.size(), S(0));
  }
};

/// Per-timestep activations kept for backprop.
template <typename S>
struct LstmCache {
  std::vector<Matrix<S>> x;                   // (B, in) inputs
  std::vector<Matrix<S>> gi, gf, gg, go;      // post-activation gates (B, H)
  std::vector<Matrix<S>> c, h, tc;            // cell, hidden, tanh(cell)
  int steps() const { return static_cast<int>(h.size()); }
};

namespace detail {

template <typename S>
GGAN_NOINLINE void gate_forward_row(const S* a, const S* c_prev, S* gi, S* gf, S* gg, S* go,
                                    S* c, S* tc, S* h, int hdim) {
  for (int j = 0; j < hdim; ++j) {
    const S ai = a[j];
    const S af = a[hdim + j];
    const S ag = a[2 * hdim + j];
    const S ao = a[3 * hdim + j];
    const S i = S(1) / (S(1) + std::exp(-ai));
    const S f = S(1) / (S(1) + std::exp(-af));
    const S g = std::tanh(ag);
    const S o = S(1) / (S(1) + std::exp(-ao));
    const S cc = f * (c_prev ? c_prev[j] : S(0)) + i * g;
    const S t = std::tanh(cc);
    gi[j] = i;
    gf[j] = f;
    gg[j] = g;
    go[j] = o;
    c[j] = cc;
    tc[j] = t;
    h[j] = o * t;
  }
}

template <typename S>
GGAN_NOINLINE void gate_backward_row(const S* dh, const S* gi, const S* gf, const S* gg,
                                     const S* go, const S* tc, const S* c_prev, S* dc, S* da,
                                     int hdim) {
  for (int j = 0; j < hdim; ++j) {
    const S i = gi[j], f = gf[j], g = gg[j], o = go[j], t = tc[j];
    const S dhj = dh[j];
    const S do_ = dhj * t;
    S dcj = dc[j] + dhj * o * (S(1) - t * t);
    const S df = dcj * (c_prev ? c_prev[j] : S(0));
    const S di = dcj * g;
    const S dg = dcj * i;
    da[j] = di * i * (S(1) - i);
    da[hdim + j] = df * f * (S(1) - f);
    da[2 * hdim + j] = dg * (S(1) - g * g);
    da[3 * hdim + j] = do_ * o * (S(1) - o);
    dc[j] = dcj * f;  // carried to t-1
  }
}

}  // namespace detail

template <typename S>
void lstm_forward(const LstmParams<S>& p, const std::vector<Matrix<S>>& xs, LstmCache<S>& cache,
                  Exec mode) {
  const int steps = static_cast<int>(xs.size());
  const int batch = xs.empty() ? 0 : xs[0].rows();
  const int hdim = p.hidden();

  cache.x = xs;
  auto sized = [&](std::vector<Matrix<S>>& v) {
    v.assign(steps, Matrix<S>(batch, hdim));
  };
  sized(cache.gi);
  sized(cache.gf);
  sized(cache.gg);
  sized(cache.go);
  sized(cache.c);
  sized(cache.h);
  sized(cache.tc);

  Matrix<S> a(batch, 4 * hdim);
  for (int t = 0; t < steps; ++t) {
    set_rows_to_bias(a, p.b, mode);
    gemm_acc(xs[t], p.w_x, a, mode);
    if (t > 0) gemm_acc(cache.h[t - 1], p.w_h, a, mode);
    const Matrix<S>* cprev = t > 0 ? &cache.c[t - 1] : nullptr;
    for_rows(batch, mode, [&](int r) {
      detail::gate_forward_row(a.row(r), cprev ? cprev->row(r) : nullptr, cache.gi[t].row(r),
                               cache.gf[t].row(r), cache.gg[t].row(r), cache.go[t].row(r),
                               cache.c[t].row(r), cache.tc[t].row(r), cache.h[t].row(r), hdim);
    });
  }
}

/// Backprop through time. `dh` carries the per-timestep output gradients
/// (empty matrices mean zero). Parameter gradients accumulate into `grads`
/// when non-null; input gradients are written to `dx` when non-null.
template <typename S>
void lstm_backward(const LstmParams<S>& p, const LstmCache<S>& cache,
                   const std::vector<Matrix<S>>& dh, LstmGrads<S>* grads,
                   std::vector<Matrix<S>>* dx, Exec mode) {
  const int steps = cache.steps();
  const int batch = steps > 0 ? cache.h[0].rows() : 0;
  const int hdim = p.hidden();

  if (dx) dx->assign(steps, Matrix<S>(batch, p.in_dim()));

  Matrix<S> dh_acc(batch, hdim);
  Matrix<S> dc(batch, hdim);
  Matrix<S> da(batch, 4 * hdim);

  for (int t = steps - 1; t >= 0; --t) {
    if (t < static_cast<int>(dh.size()) && !dh[t].empty()) add_inplace(dh_acc, dh[t], mode);

    const Matrix<S>* cprev = t > 0 ? &cache.c[t - 1] : nullptr;
    for_rows(batch, mode, [&](int r) {
      detail::gate_backward_row(dh_acc.row(r), cache.gi[t].row(r), cache.gf[t].row(r),
                                cache.gg[t].row(r), cache.go[t].row(r), cache.tc[t].row(r),
                                cprev ? cprev->row(r) : nullptr, dc.row(r), da.row(r), hdim);
    });

    if (grads) {
      gemm_tn_acc(cache.x[t], da, grads->w_x, mode);
      if (t > 0) gemm_tn_acc(cache.h[t - 1], da, grads->w_h, mode);
      colsum_acc(da, grads->b);
    }
    if (dx) gemm_nt_acc(da, p.w_x, (*dx)[t], mode);

    dh_acc.zero();
    if (t > 0) gemm_nt_acc(da, p.w_h, dh_acc, mode);
  }
}

}  // namespace ggan::net
