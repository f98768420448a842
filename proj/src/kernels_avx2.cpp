// AVX2 variants of the channel kernels. Four channels per vector; the tail
// falls back to the identical scalar expressions, and no FMA is used so that
// each lane rounds exactly like the scalar reference.

#include <immintrin.h>

#include <cmath>

#include "tcgabor/kernels.hpp"

namespace tcgabor::simd {
namespace {

void filter_layer(double* y, const double* x, const double* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d yv = _mm256_loadu_pd(y + i);
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d av = _mm256_loadu_pd(a + i);
    const __m256d r = _mm256_add_pd(yv, _mm256_mul_pd(_mm256_sub_pd(xv, yv), av));
    _mm256_storeu_pd(y + i, r);
  }
  for (; i < n; ++i) y[i] = y[i] + (x[i] - y[i]) * a[i];
}

void oscillator_rotate(double* cosv, double* sinv, const double* dcos, const double* dsin,
                       std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d c = _mm256_loadu_pd(cosv + i);
    const __m256d s = _mm256_loadu_pd(sinv + i);
    const __m256d dc = _mm256_loadu_pd(dcos + i);
    const __m256d ds = _mm256_loadu_pd(dsin + i);
    _mm256_storeu_pd(cosv + i, _mm256_sub_pd(_mm256_mul_pd(c, dc), _mm256_mul_pd(s, ds)));
    _mm256_storeu_pd(sinv + i, _mm256_add_pd(_mm256_mul_pd(s, dc), _mm256_mul_pd(c, ds)));
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
  const __m256d xv = _mm256_set1_pd(x);
  const __m256d nxv = _mm256_set1_pd(-x);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out_cos + i, _mm256_mul_pd(xv, _mm256_loadu_pd(cosv + i)));
    _mm256_storeu_pd(out_sin + i, _mm256_mul_pd(nxv, _mm256_loadu_pd(sinv + i)));
  }
  for (; i < n; ++i) {
    out_cos[i] = x * cosv[i];
    out_sin[i] = -x * sinv[i];
  }
}

void magnitude(double* m, const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d av = _mm256_loadu_pd(a + i);
    const __m256d bv = _mm256_loadu_pd(b + i);
    const __m256d sum = _mm256_add_pd(_mm256_mul_pd(av, av), _mm256_mul_pd(bv, bv));
    _mm256_storeu_pd(m + i, _mm256_sqrt_pd(sum));
  }
  for (; i < n; ++i) m[i] = std::sqrt(a[i] * a[i] + b[i] * b[i]);
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    acc1 = _mm256_add_pd(acc1,
                         _mm256_mul_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4)));
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d sum2 = _mm_add_pd(lo, hi);
  double result = _mm_cvtsd_f64(_mm_add_sd(sum2, _mm_unpackhi_pd(sum2, sum2)));
  for (; i < n; ++i) result += a[i] * b[i];
  return result;
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels k{filter_layer, oscillator_rotate, modulate_sample, magnitude, dot,
                         "avx2"};
  return k;
}

}  // namespace tcgabor::simd
