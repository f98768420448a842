#include "tcgabor/window.hpp"

#include <cmath>
#include <stdexcept>

namespace tcgabor {

std::vector<double> scaled_bessel_i(double s, int n_max) {
  if (s < 0.0) throw std::invalid_argument("scaled_bessel_i: s must be >= 0");
  if (n_max < 0) throw std::invalid_argument("scaled_bessel_i: n_max must be >= 0");
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  if (s == 0.0) {
    out[0] = 1.0;
    return out;
  }
  // Start far enough above n_max that the seed contamination has decayed by
  // ~1e-18: the dominant/minimal solution ratio grows like exp((M^2-n^2)/s)
  // in the Gaussian regime, so M^2 >= n_max^2 + 42 s suffices.
  const int start =
      static_cast<int>(std::ceil(std::sqrt(double(n_max) * double(n_max) + 42.0 * s))) + 60;
  std::vector<double> work(static_cast<std::size_t>(start) + 2, 0.0);
  double upper = 0.0;
  double current = 1e-280;
  work[static_cast<std::size_t>(start)] = current;
  for (int n = start; n >= 1; --n) {
    double lower = upper + (2.0 * n / s) * current;
    upper = current;
    current = lower;
    if (current > 1e260) {  // rescale to dodge overflow; ratios are what matter
      const double f = 1e-260;
      current *= f;
      upper *= f;
      for (int m = n; m <= start; ++m) work[static_cast<std::size_t>(m)] *= f;
    }
    work[static_cast<std::size_t>(n - 1)] = current;
  }
  // Normalize with I_0(s) + 2 sum_{n>=1} I_n(s) = e^s, i.e. the scaled family
  // sums to 1 over all integer orders.
  double norm = work[0];
  for (int n = 1; n <= start; ++n) norm += 2.0 * work[static_cast<std::size_t>(n)];
  for (int n = 0; n <= n_max; ++n) out[static_cast<std::size_t>(n)] = work[static_cast<std::size_t>(n)] / norm;
  return out;
}

Window discrete_gaussian_window(double s, double tail_eps) {
  if (!(tail_eps > 0.0)) throw std::invalid_argument("discrete_gaussian_window: tail_eps must be > 0");
  const int n_max = static_cast<int>(std::ceil(6.5 * std::sqrt(std::max(s, 1.0)))) + 40;
  const std::vector<double> t = scaled_bessel_i(s, n_max);
  int half = n_max;
  double mass = t[0];
  for (int n = 1; n <= n_max; ++n) {
    mass += 2.0 * t[static_cast<std::size_t>(n)];
    if (1.0 - mass < tail_eps) {
      half = n;
      break;
    }
  }
  Window w;
  w.half = half;
  w.values.resize(static_cast<std::size_t>(2 * half + 1));
  for (int n = -half; n <= half; ++n) {
    w.values[static_cast<std::size_t>(half + n)] = t[static_cast<std::size_t>(std::abs(n))];
  }
  return w;
}

Window sampled_gaussian_window(double sigma, double tail_eps) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sampled_gaussian_window: sigma must be > 0");
  if (!(tail_eps > 0.0)) throw std::invalid_argument("sampled_gaussian_window: tail_eps must be > 0");
  // Continuous tail mass outside [-U, U] is erfc(U / (sigma sqrt(2))).
  int half = 1;
  while (std::erfc(half / (sigma * std::sqrt(2.0))) >= tail_eps) ++half;
  Window w;
  w.half = half;
  w.values.resize(static_cast<std::size_t>(2 * half + 1));
  const double norm = 1.0 / (std::sqrt(2.0 * M_PI) * sigma);
  for (int n = -half; n <= half; ++n) {
    w.values[static_cast<std::size_t>(half + n)] = norm * std::exp(-0.5 * n * n / (sigma * sigma));
  }
  return w;
}

}  // namespace tcgabor
