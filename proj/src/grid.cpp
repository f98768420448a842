#include "tcgabor/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tcgabor {

FrequencyGrid FrequencyGrid::make(double f_min, double f_max, int per_octave, double N,
                                  ThresholdMode mode) {
  if (!(f_min > 0.0) || !(f_max > f_min)) {
    throw std::invalid_argument("FrequencyGrid: need 0 < f_min < f_max");
  }
  if (per_octave < 1) throw std::invalid_argument("FrequencyGrid: per_octave must be >= 1");
  if (!(N >= 1.0)) throw std::invalid_argument("FrequencyGrid: wavelength factor must be >= 1");
  FrequencyGrid g;
  g.per_octave = per_octave;
  g.f_min = f_min;
  g.f_max = f_max;
  g.wavelength_factor = N;
  g.threshold_mode = mode;
  g.sigma_min_s = 0.000125 * N;
  g.sigma_max_s = 0.005 * N;
  g.sigma0_s = 1e-3;
  g.sigma_inf_s = 40e-3;
  g.soft_p = 2.0;
  const int count = static_cast<int>(std::floor(per_octave * std::log2(f_max / f_min) + 1e-9)) + 1;
  g.freqs_hz.resize(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    g.freqs_hz[static_cast<std::size_t>(i)] = f_min * std::exp2(double(i) / per_octave);
  }
  return g;
}

double FrequencyGrid::sigma_seconds(double freq_hz) const {
  return std::clamp(wavelength_factor / freq_hz, sigma_min_s, sigma_max_s);
}

double FrequencyGrid::tau_ref_samples(double freq_hz, double sample_rate) const {
  const double r2 = sample_rate * sample_rate;
  if (threshold_mode == ThresholdMode::hard) {
    const double sigma = sigma_seconds(freq_hz);
    return r2 * sigma * sigma;
  }
  const double lam = wavelength_factor / freq_hz;  // 2 pi N / omega
  const double tau_ref = r2 * (sigma0_s * sigma0_s + lam * lam);
  const double tau_inf = r2 * sigma_inf_s * sigma_inf_s;
  return tau_ref / std::pow(1.0 + std::pow(tau_ref / tau_inf, soft_p), 1.0 / soft_p);
}

}  // namespace tcgabor
