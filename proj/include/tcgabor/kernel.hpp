#pragma once

#include <complex>
#include <vector>

namespace tcgabor {

/// Configuration of the time-causal limit kernel.
///
/// The kernel is an infinite cascade of truncated exponential smoothers with
/// geometrically distributed time constants, approximated by the `layers`
/// filters with the longest time constants. `tau` is the temporal variance of
/// the composed kernel and `c > 1` the ratio between adjacent temporal scale
/// levels. All formulas here are unit-agnostic; callers that work in sample
/// units scale `tau` by rate^2 first.
struct KernelParams {
  double tau = 1.0;
  double c = 2.0;
  int layers = 8;

  /// Throws std::invalid_argument unless tau > 0, c > 1 and layers >= 1.
  void validate() const;
};

/// Temporal scale ladder tau_k = c^{2(k-K)} tau for k = 1..K.
/// Strictly increasing, with tau_K = tau exactly.
std::vector<double> scale_ladder(const KernelParams& p);

/// Continuous time constants of the cascade:
///   mu_1 = c^{1-K} sqrt(tau),
///   mu_k = c^{k-K-1} sqrt(c^2-1) sqrt(tau)   (k >= 2).
/// The squares telescope: sum mu_k^2 = tau.
std::vector<double> continuous_time_constants(const KernelParams& p);

/// Time constant of one discrete first-order recursive filter whose variance
/// mu^2 + mu equals the scale increment delta_tau (sample units).
double discrete_mu(double delta_tau);

/// Discrete time constants matched to the ladder increments so that the
/// composed discrete kernel has variance exactly `tau` (sample units).
std::vector<double> discrete_time_constants(const KernelParams& p);

/// Fourier transform of the limit kernel,
///   prod_k 1/(1 + i c^{-k} sqrt(c^2-1) sqrt(tau) omega).
/// With layers <= 0 the product is truncated adaptively once the next factor
/// differs from 1 by less than `tol` (the factors approach 1 geometrically).
/// With layers > 0 exactly that many factors are used, which the closed-form
/// analyses rely on. |Psi^(0)| = 1 in either mode.
std::complex<double> limit_kernel_fourier(double omega, const KernelParams& p,
                                          double tol = 1e-14, int layers = 0);

/// Delay estimates for the limit kernel, both proportional to sqrt(tau).
struct DelayEstimates {
  double mean_delay;     ///< temporal mean m = sqrt((c+1)/(c-1)) sqrt(tau)
  double max_pos_delay;  ///< scale-time estimate of the temporal maximum
};

/// mean_delay is exact; max_pos_delay is a closed-form estimate of the
/// position of the temporal maximum (a slight overestimate; the exact
/// maximum has no closed form).
DelayEstimates delay_estimates(const KernelParams& p);

}  // namespace tcgabor
