#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "tcgabor/kernel.hpp"
#include "tcgabor/transform.hpp"

namespace tcgabor {

struct InverseConfig {
  /// Horizon over which future transform rows are gathered; infinity means
  /// "until the kernel mass is exhausted". Reconstruction at time u reads
  /// rows at u..u+horizon only; it is deliberately not time-causal.
  double delta_u_s = std::numeric_limits<double>::infinity();
  /// Angular-frequency band for the omega integral; zero/infinity default to
  /// the stored grid's band. Negative frequencies enter through conjugate
  /// symmetry, which holds for transforms of real signals.
  double omega_min = 0.0;
  double omega_max = std::numeric_limits<double>::infinity();
  /// Optional uniform quadrature step (rad/s). Zero integrates on the stored
  /// log-frequency grid with explicit trapezoid dw weights; a positive value
  /// resamples the channels linearly onto a uniform grid first.
  double quadrature_step = 0.0;
};

struct InverseResult {
  std::vector<double> samples;  ///< reconstruction for columns 0..n-1
  std::size_t horizon_samples = 0;
  double imag_residue_l2 = 0.0;  ///< see inverse_transform
  double real_l2 = 0.0;
};

/// Reconstructs the signal from a time-causal transform by weighting future
/// rows with the kernel's own impulse response:
///
///   f(u) = (1/2pi) [ int_0^{du} Psi(v) int Hf(u+v, w) e^{iwu} dw dv ]
///                  / int_0^{du} Psi^2(v) dv
///
/// The spectrogram must retain both quadrature channels at every sample
/// (column_stride 1) and must have been computed with one fixed temporal
/// scale across bins, matching `kernel` (tau in sample units). Psi(v) is the
/// discrete cascade's impulse response; no closed form exists. The two-sided
/// omega integral makes the output real with pairwise-cancelling imaginary
/// parts; their accumulated size is reported as imag_residue_l2.
/// Throws when the horizon holds less than 1e-12 of the kernel's energy.
InverseResult inverse_transform(const Spectrogram& spec, const KernelParams& kernel,
                                const InverseConfig& config);

/// Unit impulse through the discrete cascade (unit DC gain, so the response
/// sums to 1 as length grows).
std::vector<double> limit_kernel_impulse(const KernelParams& kernel, std::size_t length);

}  // namespace tcgabor
