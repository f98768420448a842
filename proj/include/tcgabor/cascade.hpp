#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tcgabor {

/// How layer states are seeded before the first sample.
enum class InitPolicy {
  zero,          ///< all layers start at 0 (canonical)
  first_sample,  ///< layers start at signal[0], suppressing the onset transient
};

/// State of one cascade of first-order recursive filters, updated strictly
/// per sample:
///
///   f_out(t) - f_out(t-1) = (f_in(t) - f_out(t-1)) / (1 + mu_k)
///
/// Layer 1 consumes the input; layer k consumes layer k-1's current-step
/// output. The evaluation order within a time step is pinned to k = 1..K,
/// which matters for bit-exactness.
class CascadeState {
 public:
  explicit CascadeState(std::vector<double> mu);

  /// Advance one sample; returns the top layer's new value.
  double step(double input);

  void reset(double value = 0.0);

  std::span<const double> levels() const { return level_; }
  std::span<const double> mu() const { return mu_; }
  std::size_t layer_count() const { return mu_.size(); }

 private:
  std::vector<double> mu_;
  std::vector<double> alpha_;  // 1/(1+mu), the feedback factor in (0,1]
  std::vector<double> level_;
};

/// Runs the whole signal through a cascade; identical output, bit for bit,
/// to repeated step() calls.
std::vector<double> run_batch(const std::vector<double>& mu, std::span<const double> signal,
                              InitPolicy init = InitPolicy::zero);

/// Number of strict sign alternations in the signal, ignoring zeros. The
/// filters here are variation-diminishing: this count never grows under
/// filtering, which the property tests rely on.
int sign_changes(std::span<const double> signal);

}  // namespace tcgabor
