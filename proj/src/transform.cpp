#include "tcgabor/transform.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

#include "tcgabor/kernel.hpp"
#include "tcgabor/kernels.hpp"
#include "tcgabor/window.hpp"

namespace tcgabor {

namespace {

// Oscillators run on a rotation recurrence and are re-seeded from exact
// trigonometry every kOscRefresh samples (at absolute indices, so chunked and
// one-shot processing stay bitwise identical). The drift between refreshes
// stays near 1e-14 relative.
constexpr int kOscRefresh = 64;

double tmax_factor(double c) {
  return (c + 1.0) * (c + 1.0) / (2.0 * std::sqrt(2.0) * std::sqrt((c - 1.0) * c * c * c));
}

// Modulated quadrature channels of a whole signal for one frequency, using
// the refreshed-oscillator scheme (same values the streaming engine sees).
void fill_modulated(std::span<const double> signal, double omega, double dt,
                    std::vector<double>& cos_ch, std::vector<double>& sin_ch) {
  const std::size_t n = signal.size();
  cos_ch.resize(n);
  sin_ch.resize(n);
  const double dc = std::cos(omega * dt);
  const double ds = std::sin(omega * dt);
  double oc = 1.0, os = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % kOscRefresh == 0) {
      const double phase = omega * double(i) * dt;
      oc = std::cos(phase);
      os = std::sin(phase);
    } else {
      const double c = oc, s = os;
      oc = c * dc - s * ds;
      os = s * dc + c * ds;
    }
    cos_ch[i] = signal[i] * oc;
    sin_ch[i] = -signal[i] * os;
  }
}

void warn_if_aliased(const TransformConfig& cfg) {
  if (auto w = cfg.nyquist_warning()) std::cerr << "tcgabor: warning: " << *w << "\n";
}

}  // namespace

std::optional<std::string> TransformConfig::nyquist_warning() const {
  if (sample_rate > 2.0 * grid.f_max) return std::nullopt;
  return "sample rate " + std::to_string(sample_rate) + " Hz does not exceed twice f_max " +
         std::to_string(grid.f_max) + " Hz; top bins alias";
}

void modulate(std::span<const double> signal, double omega, double dt,
              std::vector<double>& cos_channel, std::vector<double>& sin_channel) {
  cos_channel.resize(signal.size());
  sin_channel.resize(signal.size());
  for (std::size_t n = 0; n < signal.size(); ++n) {
    const double phase = omega * double(n) * dt;
    cos_channel[n] = signal[n] * std::cos(phase);
    sin_channel[n] = -signal[n] * std::sin(phase);
  }
}

CausalFilterBank::CausalFilterBank(const TransformConfig& config) : cfg_(config) {
  if (cfg_.grid.freqs_hz.empty()) throw std::invalid_argument("CausalFilterBank: empty grid");
  if (cfg_.layers < 1) throw std::invalid_argument("CausalFilterBank: layers must be >= 1");
  if (cfg_.column_stride < 1) throw std::invalid_argument("CausalFilterBank: stride must be >= 1");
  bins_ = cfg_.grid.size();
  layers_ = cfg_.layers;
  const std::size_t width = 2 * bins_;
  const double dt = 1.0 / cfg_.sample_rate;

  omega_.resize(bins_);
  step_cos_.resize(bins_);
  step_sin_.resize(bins_);
  alpha_.assign(static_cast<std::size_t>(layers_) * width, 0.0);
  levels_.assign(static_cast<std::size_t>(layers_) * width, 0.0);
  osc_cos_.assign(bins_, 1.0);
  osc_sin_.assign(bins_, 0.0);
  input_.assign(width, 0.0);
  column_.assign(bins_, 0.0);

  for (std::size_t j = 0; j < bins_; ++j) {
    const double f = cfg_.grid.freqs_hz[j];
    omega_[j] = 2.0 * std::numbers::pi * f;
    step_cos_[j] = std::cos(omega_[j] * dt);
    step_sin_[j] = std::sin(omega_[j] * dt);
    KernelParams p{cfg_.grid.tau_ref_samples(f, cfg_.sample_rate), cfg_.c, layers_};
    const std::vector<double> mu = discrete_time_constants(p);
    for (int k = 0; k < layers_; ++k) {
      const double a = 1.0 / (1.0 + mu[static_cast<std::size_t>(k)]);
      alpha_[static_cast<std::size_t>(k) * width + j] = a;
      alpha_[static_cast<std::size_t>(k) * width + bins_ + j] = a;
    }
  }
}

Spectrogram CausalFilterBank::make_spectrogram() const {
  Spectrogram s;
  s.freqs_hz = cfg_.grid.freqs_hz;
  s.sample_rate = cfg_.sample_rate;
  s.config = cfg_;
  return s;
}

void CausalFilterBank::reset() {
  std::fill(levels_.begin(), levels_.end(), 0.0);
  std::fill(osc_cos_.begin(), osc_cos_.end(), 1.0);
  std::fill(osc_sin_.begin(), osc_sin_.end(), 0.0);
  n_ = 0;
}

std::vector<double> CausalFilterBank::mu_for(std::size_t j) const {
  KernelParams p{cfg_.grid.tau_ref_samples(cfg_.grid.freqs_hz[j], cfg_.sample_rate), cfg_.c,
                 layers_};
  return discrete_time_constants(p);
}

void CausalFilterBank::record_column(Spectrogram& out) {
  const std::size_t width = 2 * bins_;
  const double* top = levels_.data() + static_cast<std::size_t>(layers_ - 1) * width;
  const auto& k = simd::active_kernels();
  k.magnitude(column_.data(), top, top + bins_, bins_);
  out.times.push_back(n_);
  out.magnitude.insert(out.magnitude.end(), column_.begin(), column_.end());
  if (cfg_.store_channels) {
    out.cos_part.insert(out.cos_part.end(), top, top + bins_);
    out.sin_part.insert(out.sin_part.end(), top + bins_, top + width);
  }
}

void CausalFilterBank::process(std::span<const double> samples, Spectrogram& out) {
  const auto& k = simd::active_kernels();
  const std::size_t width = 2 * bins_;
  const double dt = 1.0 / cfg_.sample_rate;
  for (double x : samples) {
    if (n_ % kOscRefresh == 0) {
      const double t = double(n_) * dt;
      for (std::size_t j = 0; j < bins_; ++j) {
        osc_cos_[j] = std::cos(omega_[j] * t);
        osc_sin_[j] = std::sin(omega_[j] * t);
      }
    } else {
      k.oscillator_rotate(osc_cos_.data(), osc_sin_.data(), step_cos_.data(), step_sin_.data(),
                          bins_);
    }
    k.modulate_sample(input_.data(), input_.data() + bins_, x, osc_cos_.data(), osc_sin_.data(),
                      bins_);
    const double* in = input_.data();
    for (int layer = 0; layer < layers_; ++layer) {
      double* row = levels_.data() + static_cast<std::size_t>(layer) * width;
      k.filter_layer(row, in, alpha_.data() + static_cast<std::size_t>(layer) * width, width);
      in = row;
    }
    if (n_ % cfg_.column_stride == 0) record_column(out);
    ++n_;
  }
}

Spectrogram causal_transform(std::span<const double> signal, const TransformConfig& config) {
  if (signal.empty()) throw std::invalid_argument("causal_transform: empty signal");
  if (config.window_kind != WindowKind::time_causal_limit) {
    throw std::invalid_argument("causal_transform: config.window_kind mismatch");
  }
  warn_if_aliased(config);
  CausalFilterBank bank(config);
  Spectrogram out = bank.make_spectrogram();
  bank.process(signal, out);
  return out;
}

namespace {

Spectrogram windowed_transform(std::span<const double> signal, const TransformConfig& cfg,
                               bool truncated_shifted) {
  if (signal.empty()) throw std::invalid_argument("gabor_transform: empty signal");
  warn_if_aliased(cfg);
  const auto& kern = simd::active_kernels();
  const std::size_t bins = cfg.grid.size();
  const std::size_t len = signal.size();
  const double dt = 1.0 / cfg.sample_rate;

  Spectrogram out;
  out.freqs_hz = cfg.grid.freqs_hz;
  out.sample_rate = cfg.sample_rate;
  out.config = cfg;
  for (std::int64_t t = 0; t < std::int64_t(len); t += cfg.column_stride) {
    out.times.push_back(t);
  }
  const std::size_t cols = out.times.size();
  out.magnitude.assign(cols * bins, 0.0);
  if (cfg.store_channels) {
    out.cos_part.assign(cols * bins, 0.0);
    out.sin_part.assign(cols * bins, 0.0);
  }

  std::vector<double> cos_ch, sin_ch;
  for (std::size_t j = 0; j < bins; ++j) {
    const double f = cfg.grid.freqs_hz[j];
    const double omega = 2.0 * std::numbers::pi * f;
    const double tau_samples = cfg.grid.tau_ref_samples(f, cfg.sample_rate);
    const double sigma_samples = std::sqrt(tau_samples);
    const Window w = (cfg.window_kind == WindowKind::gabor_discrete)
                         ? discrete_gaussian_window(tau_samples, cfg.gabor_tail_eps)
                         : sampled_gaussian_window(sigma_samples, cfg.gabor_tail_eps);
    const double delay_factor =
        cfg.trunc_delay_factor >= 0.0 ? cfg.trunc_delay_factor : tmax_factor(cfg.c);
    const std::int64_t shift = truncated_shifted ? llround(delay_factor * sigma_samples) : 0;

    fill_modulated(signal, omega, dt, cos_ch, sin_ch);
    for (std::size_t col = 0; col < cols; ++col) {
      const std::int64_t t = out.times[col];
      const std::int64_t center = t - shift;
      std::int64_t lo = center - w.half;
      std::int64_t hi = center + w.half;
      if (truncated_shifted && hi > t) hi = t;  // no access to the future
      if (lo < 0) lo = 0;
      if (hi > std::int64_t(len) - 1) hi = std::int64_t(len) - 1;
      double cval = 0.0, sval = 0.0;
      if (hi >= lo) {
        const double* wp = w.values.data() + (lo - (center - w.half));
        const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
        cval = kern.dot(wp, cos_ch.data() + lo, n);
        sval = kern.dot(wp, sin_ch.data() + lo, n);
      }
      const std::size_t idx = col * bins + j;
      out.magnitude[idx] = std::sqrt(cval * cval + sval * sval);
      if (cfg.store_channels) {
        out.cos_part[idx] = cval;
        out.sin_part[idx] = sval;
      }
    }
  }
  return out;
}

}  // namespace

Spectrogram gabor_transform(std::span<const double> signal, const TransformConfig& config) {
  if (config.window_kind != WindowKind::gabor_sampled &&
      config.window_kind != WindowKind::gabor_discrete) {
    throw std::invalid_argument("gabor_transform: config.window_kind mismatch");
  }
  return windowed_transform(signal, config, false);
}

Spectrogram truncated_shifted_gabor(std::span<const double> signal,
                                    const TransformConfig& config) {
  if (config.window_kind != WindowKind::gabor_truncated_shifted) {
    throw std::invalid_argument("truncated_shifted_gabor: config.window_kind mismatch");
  }
  TransformConfig cfg = config;
  cfg.window_kind = WindowKind::gabor_truncated_shifted;
  return windowed_transform(signal, cfg, true);
}

std::vector<double> to_db(const Spectrogram& spec, double clip_db) {
  if (!(clip_db < 0.0)) throw std::invalid_argument("to_db: clip_db must be < 0");
  double peak = 0.0;
  for (double m : spec.magnitude) peak = std::max(peak, m);
  std::vector<double> db(spec.magnitude.size(), clip_db);
  if (peak <= 0.0) return db;
  for (std::size_t i = 0; i < db.size(); ++i) {
    const double m = spec.magnitude[i];
    db[i] = m > 0.0 ? std::max(clip_db, 20.0 * std::log10(m / peak)) : clip_db;
  }
  return db;
}

std::vector<double> midi_axis(std::span<const double> freqs_hz) {
  std::vector<double> midi(freqs_hz.size());
  for (std::size_t i = 0; i < freqs_hz.size(); ++i) {
    if (!(freqs_hz[i] > 0.0)) throw std::invalid_argument("midi_axis: frequencies must be > 0");
    midi[i] = 69.0 + 12.0 / std::log(2.0) * std::log(freqs_hz[i] / 440.0);
  }
  return midi;
}

}  // namespace tcgabor
