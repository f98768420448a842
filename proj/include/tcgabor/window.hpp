#pragma once

#include <vector>

namespace tcgabor {

/// Symmetric FIR window, values[half + n] for n in [-half, half].
/// Both constructors below produce unit-mass windows truncated at the tails
/// for a relative mass loss below tail_eps; the dropped tail is not folded
/// back in, so the retained sum is 1 - O(tail_eps).
struct Window {
  std::vector<double> values;
  int half = 0;

  double at(int n) const { return values[static_cast<std::size_t>(half + n)]; }
  int size() const { return 2 * half + 1; }
};

/// e^{-s} I_n(s) for n = 0..n_max, computed with a backward (Miller)
/// recurrence on scaled values. Stable for s up to at least 1e7; the n = 0..
/// family sums (with both signs of n) to exactly 1.
std::vector<double> scaled_bessel_i(double s, int n_max);

/// Discrete analogue of the Gaussian, T(n; s) = e^{-s} I_n(s). Variance s,
/// exact semigroup over s on the integers.
Window discrete_gaussian_window(double s, double tail_eps = 1e-8);

/// Sampled Gaussian exp(-n^2/(2 sigma^2)) / sqrt(2 pi sigma^2).
Window sampled_gaussian_window(double sigma, double tail_eps = 1e-8);

}  // namespace tcgabor
