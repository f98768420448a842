#include <cmath>

#include "tcgabor/kernels.hpp"

namespace tcgabor::simd {
namespace {

void filter_layer(double* y, const double* x, const double* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + (x[i] - y[i]) * a[i];
}

void oscillator_rotate(double* cosv, double* sinv, const double* dcos, const double* dsin,
                       std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double c = cosv[i];
    const double s = sinv[i];
    cosv[i] = c * dcos[i] - s * dsin[i];
    sinv[i] = s * dcos[i] + c * dsin[i];
  }
}

void modulate_sample(double* out_cos, double* out_sin, double x, const double* cosv,
                     const double* sinv, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out_cos[i] = x * cosv[i];
    out_sin[i] = -x * sinv[i];
  }
}

void magnitude(double* m, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) m[i] = std::sqrt(a[i] * a[i] + b[i] * b[i]);
}

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{filter_layer, oscillator_rotate, modulate_sample, magnitude, dot,
                         "scalar"};
  return k;
}

}  // namespace tcgabor::simd
