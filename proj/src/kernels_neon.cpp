// NEON variants of the channel kernels (two doubles per vector). Baseline on
// aarch64, so no runtime probe is needed. vmulq/vaddq round per lane exactly
// like the scalar reference; fused forms are deliberately avoided.

#include <arm_neon.h>

#include <cmath>

#include "tcgabor/kernels.hpp"

namespace tcgabor::simd {
namespace {

void filter_layer(double* y, const double* x, const double* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t yv = vld1q_f64(y + i);
    const float64x2_t xv = vld1q_f64(x + i);
    const float64x2_t av = vld1q_f64(a + i);
    vst1q_f64(y + i, vaddq_f64(yv, vmulq_f64(vsubq_f64(xv, yv), av)));
  }
  for (; i < n; ++i) y[i] = y[i] + (x[i] - y[i]) * a[i];
}

void oscillator_rotate(double* cosv, double* sinv, const double* dcos, const double* dsin,
                       std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t c = vld1q_f64(cosv + i);
    const float64x2_t s = vld1q_f64(sinv + i);
    const float64x2_t dc = vld1q_f64(dcos + i);
    const float64x2_t ds = vld1q_f64(dsin + i);
    vst1q_f64(cosv + i, vsubq_f64(vmulq_f64(c, dc), vmulq_f64(s, ds)));
    vst1q_f64(sinv + i, vaddq_f64(vmulq_f64(s, dc), vmulq_f64(c, ds)));
  }
  for (; i < n; ++i) {
    const double c = cosv[i];
    const double s = sinv[i];
    cosv[i] = c * dcos[i] - s * dsin[i];
    sinv[i] = s * dcos[i] + c * dsin[i];
  }
}

void modulate_sample(double* out_cos, double* out_sin, double x, const double* cosv,
                     const double* sinv, std::size_t n) {
  const float64x2_t xv = vdupq_n_f64(x);
  const float64x2_t nxv = vdupq_n_f64(-x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out_cos + i, vmulq_f64(xv, vld1q_f64(cosv + i)));
    vst1q_f64(out_sin + i, vmulq_f64(nxv, vld1q_f64(sinv + i)));
  }
  for (; i < n; ++i) {
    out_cos[i] = x * cosv[i];
    out_sin[i] = -x * sinv[i];
  }
}

void magnitude(double* m, const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t av = vld1q_f64(a + i);
    const float64x2_t bv = vld1q_f64(b + i);
    vst1q_f64(m + i, vsqrtq_f64(vaddq_f64(vmulq_f64(av, av), vmulq_f64(bv, bv))));
  }
  for (; i < n; ++i) m[i] = std::sqrt(a[i] * a[i] + b[i] * b[i]);
}

double dot(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    acc1 = vaddq_f64(acc1, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  for (; i + 2 <= n; i += 2) {
    acc0 = vaddq_f64(acc0, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  double result = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) result += a[i] * b[i];
  return result;
}

}  // namespace

const Kernels& neon_kernels() {
  static const Kernels k{filter_layer, oscillator_rotate, modulate_sample, magnitude, dot,
                         "neon"};
  return k;
}

}  // namespace tcgabor::simd
