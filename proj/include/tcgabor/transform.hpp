#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tcgabor/grid.hpp"

namespace tcgabor {

enum class WindowKind {
  time_causal_limit,       ///< recursive limit-kernel cascade (streaming)
  gabor_sampled,           ///< sampled Gaussian window, explicit convolution
  gabor_discrete,          ///< discrete Gaussian analogue e^{-s} I_n(s)
  gabor_truncated_shifted  ///< time-shifted Gaussian with the future cut off
};

struct TransformConfig {
  WindowKind window_kind = WindowKind::time_causal_limit;
  double c = 2.0;  ///< scale ratio of the limit kernel (also sets the shift
                   ///< of the truncated Gabor variant)
  int layers = 8;
  FrequencyGrid grid;
  double sample_rate = 44100.0;
  int column_stride = 1;      ///< record every column_stride-th sample
  bool store_channels = true; ///< keep quadrature channels, not just magnitude
  double gabor_tail_eps = 1e-8;
  /// Delay of the truncated-shifted Gabor variant, in units of the
  /// per-frequency sigma; negative picks the temporal-maximum estimate
  /// derived from c (the default behaviour).
  double trunc_delay_factor = -1.0;

  /// Set when sample_rate <= 2 f_max; callers decide where to print it.
  std::optional<std::string> nyquist_warning() const;
};

/// Time x frequency array of quadrature pairs. The channels hold the
/// transform components obtained by modulating with e^{-i omega u} before
/// filtering, so their phase differs from the complex filter output by a
/// unimodular factor that cancels in magnitude; magnitude is the supported
/// downstream product.
struct Spectrogram {
  std::vector<std::int64_t> times;  ///< absolute sample indices of the columns
  std::vector<double> freqs_hz;
  std::vector<double> cos_part;   ///< [t * n_freqs + j], empty if not stored
  std::vector<double> sin_part;
  std::vector<double> magnitude;  ///< [t * n_freqs + j]
  double sample_rate = 0.0;
  TransformConfig config;

  std::size_t n_times() const { return times.size(); }
  std::size_t n_freqs() const { return freqs_hz.size(); }
  double mag(std::size_t t, std::size_t j) const { return magnitude[t * n_freqs() + j]; }
  std::span<const double> column(std::size_t t) const {
    return {magnitude.data() + t * n_freqs(), n_freqs()};
  }
};

/// Quadrature modulation of a raw signal with exact per-sample trigonometry:
///   cos_channel[n] = f[n] cos(omega n dt),  sin_channel[n] = -f[n] sin(omega n dt).
void modulate(std::span<const double> signal, double omega, double dt,
              std::vector<double>& cos_channel, std::vector<double>& sin_channel);

/// Streaming engine for the time-causal transform: one recursive-filter
/// cascade per frequency and quadrature part, advanced strictly per sample.
/// Feeding the signal in chunks of any size yields bitwise the same
/// spectrogram as one-shot processing; distinct banks never share state.
class CausalFilterBank {
 public:
  explicit CausalFilterBank(const TransformConfig& config);

  /// Empty spectrogram wired to this bank's grid and config.
  Spectrogram make_spectrogram() const;

  /// Consume samples, appending any due columns to `out`.
  void process(std::span<const double> samples, Spectrogram& out);

  void reset();
  std::int64_t samples_seen() const { return n_; }

  /// Discrete time constants of frequency bin j (layer 1..K).
  std::vector<double> mu_for(std::size_t j) const;

 private:
  void record_column(Spectrogram& out);

  TransformConfig cfg_;
  std::size_t bins_ = 0;
  int layers_ = 0;
  std::vector<double> omega_;               // rad/s per bin
  std::vector<double> alpha_;               // [k * 2J + ch]
  std::vector<double> levels_;              // same layout as alpha_
  std::vector<double> osc_cos_, osc_sin_;   // oscillator state, J entries
  std::vector<double> step_cos_, step_sin_; // per-sample rotation, J entries
  std::vector<double> input_;               // 2J modulated inputs
  std::vector<double> column_;              // J magnitudes scratch
  std::int64_t n_ = 0;
};

Spectrogram causal_transform(std::span<const double> signal, const TransformConfig& config);
Spectrogram gabor_transform(std::span<const double> signal, const TransformConfig& config);
Spectrogram truncated_shifted_gabor(std::span<const double> signal,
                                    const TransformConfig& config);

/// 20 log10(|S| / max |S|) floored at clip_db (clip_db < 0); an all-zero
/// spectrogram maps to clip_db everywhere.
std::vector<double> to_db(const Spectrogram& spec, double clip_db);

/// MIDI note numbers nu = 69 + (12 / log 2) log(f / 440).
std::vector<double> midi_axis(std::span<const double> freqs_hz);

}  // namespace tcgabor
