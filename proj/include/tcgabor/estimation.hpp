#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tcgabor/analysis.hpp"

namespace tcgabor {

/// One local frequency estimate: the grid bin of the column argmax plus a
/// parabolic refinement over log frequency through its two neighbours.
struct FrequencyEstimate {
  std::int64_t time_index = 0;
  double f_disc_hz = 0.0;  ///< grid frequency of the argmax bin
  double f_hat_hz = 0.0;   ///< interpolated frequency (== f_disc at edges)
  bool interpolated = false;
};

/// Argmax over the column (ties broken toward the lowest frequency) followed
/// by parabolic interpolation in log f. Returns nothing for an all-zero
/// column; a boundary-bin argmax comes back uninterpolated.
std::optional<FrequencyEstimate> peak_frequency(std::span<const double> column,
                                                std::span<const double> freqs_hz,
                                                std::int64_t time_index = 0);

/// Multiplicative bias and spread of a pool of estimates against a reference:
/// b = exp(mean log(f^/f_ref)), s = exp(sdev log(f^/f_ref)).
struct BiasSpread {
  double b = 1.0;
  double s = 1.0;
};
BiasSpread bias_spread(std::span<const double> estimates_hz, double f_ref);

struct BenchVariant {
  TransformKind kind = TransformKind::time_causal;
  double N = 8.0;
  double c = 2.0;  ///< unused for the gabor kind
  std::string label() const;
};

struct BenchConfig {
  std::vector<std::pair<double, double>> intervals_hz;
  int freqs_per_interval = 3;
  double duration_s = 0.5;
  double sample_rate = 44100.0;
  std::vector<double> noise_levels;  ///< white-noise standard deviations
  std::vector<BenchVariant> variants;
  std::uint64_t seed = 42;
  double f_min = 20.0;
  double f_max = 16000.0;
  int per_octave = 48;
  /// Columns actually fed to the estimator (every n-th sample). The causal
  /// transforms are cheap per column, the explicit-convolution ones are not.
  int causal_stride = 16;
  int gabor_stride = 256;
  /// Fraction discarded at each end before pooling estimates.
  double edge_discard = 0.10;

  /// Quick configuration: 2 intervals x 3 frequencies, 0.5 s signals.
  static BenchConfig desk(std::uint64_t seed = 42);
  /// The long-form setup: 5 intervals x 10 frequencies, 3 s signals.
  static BenchConfig full(std::uint64_t seed = 42);
};

struct BenchCell {
  double b = 1.0;
  double s = 1.0;
  std::size_t count = 0;  ///< pooled estimates behind the cell
};

struct BenchReport {
  BenchConfig config;
  std::vector<std::vector<BenchCell>> cells;  ///< [variant][noise level]
  /// Rows per variant, one "b */ s" entry per noise level.
  std::string text_table() const;
};

/// Runs sine-plus-noise signals through every configured transform variant,
/// estimates the frequency per recorded column, and pools the interior
/// log-ratios per (variant, noise level). Deterministic for a fixed seed.
BenchReport noise_benchmark(const BenchConfig& config);

}  // namespace tcgabor
