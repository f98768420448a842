#pragma once

#include <cstddef>

namespace tcgabor::simd {

/// The data-parallel inner loops of the filterbank engine. Channels
/// (frequency bins x quadrature parts) are independent, so every kernel maps
/// elementwise over contiguous arrays; the SIMD variants perform the exact
/// same operation sequence per lane as the scalar reference and must match it
/// bit for bit (dot is the one exception: its accumulation order differs, so
/// it is compared with a tolerance).
struct Kernels {
  /// One recursive-filter layer across channels: y[i] += (x[i] - y[i]) * a[i].
  void (*filter_layer)(double* y, const double* x, const double* a, std::size_t n);

  /// Advance quadrature oscillators by one sample:
  ///   c' = c*dc - s*ds,  s' = s*dc + c*ds.
  void (*oscillator_rotate)(double* cosv, double* sinv, const double* dcos,
                            const double* dsin, std::size_t n);

  /// Modulate one input sample onto all channels:
  ///   out_cos[i] = x * cosv[i],  out_sin[i] = -x * sinv[i].
  void (*modulate_sample)(double* out_cos, double* out_sin, double x,
                          const double* cosv, const double* sinv, std::size_t n);

  /// m[i] = sqrt(a[i]^2 + b[i]^2)
  void (*magnitude)(double* m, const double* a, const double* b, std::size_t n);

  /// Plain dot product (window convolution inner loop).
  double (*dot)(const double* a, const double* b, std::size_t n);

  const char* name;
};

enum class IsaLevel { scalar, avx2, neon };

const Kernels& scalar_kernels();
bool isa_available(IsaLevel level);

/// Kernel set for an explicit ISA; throws std::runtime_error if unavailable.
const Kernels& kernels_for(IsaLevel level);

/// Best available set, detected once at first use (scalar on unknown CPUs).
const Kernels& active_kernels();

/// Test hook: pin the active set to one ISA (must be available).
void set_active_isa(IsaLevel level);
void reset_active_isa();

}  // namespace tcgabor::simd
