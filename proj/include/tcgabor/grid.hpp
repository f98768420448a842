#pragma once

#include <cstddef>
#include <vector>

namespace tcgabor {

/// How per-frequency temporal scales are kept inside a usable range.
enum class ThresholdMode {
  hard,  ///< clamp sigma(omega) to [sigma_min, sigma_max]
  soft,  ///< smooth lower bound sigma0 and smooth upper bound sigma_inf
};

/// Logarithmically uniform analysis frequencies plus the rule that assigns a
/// temporal scale to each of them: sigma(omega) = 2 pi N / omega = N / f, so
/// the window duration is proportional to the analyzed wavelength. The
/// thresholds keep integration times bounded at the band edges.
struct FrequencyGrid {
  std::vector<double> freqs_hz;
  int per_octave = 48;
  double f_min = 20.0;
  double f_max = 16000.0;
  double wavelength_factor = 8.0;  ///< N
  ThresholdMode threshold_mode = ThresholdMode::hard;
  double sigma_min_s = 1e-3;  ///< hard-mode bounds, seconds
  double sigma_max_s = 40e-3;
  double sigma0_s = 1e-3;  ///< soft-mode parameters
  double sigma_inf_s = 40e-3;
  double soft_p = 2.0;

  /// Builds the grid and picks sigma bounds scaled to N (N = 4 gives
  /// [0.5 ms, 20 ms], N = 8 gives [1 ms, 40 ms]).
  static FrequencyGrid make(double f_min, double f_max, int per_octave, double N,
                            ThresholdMode mode = ThresholdMode::hard);

  /// Hard-mode window scale in seconds for one frequency.
  double sigma_seconds(double freq_hz) const;

  /// Per-frequency temporal variance in sample units (tau = (r sigma)^2 with
  /// the configured thresholding applied).
  double tau_ref_samples(double freq_hz, double sample_rate) const;

  std::size_t size() const { return freqs_hz.size(); }
};

}  // namespace tcgabor
