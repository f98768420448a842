#include "tcgabor/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tcgabor/cascade.hpp"
#include "tcgabor/kernels.hpp"

namespace tcgabor {

std::vector<double> limit_kernel_impulse(const KernelParams& kernel, std::size_t length) {
  if (length == 0) throw std::invalid_argument("limit_kernel_impulse: length must be > 0");
  CascadeState state(discrete_time_constants(kernel));
  std::vector<double> out(length);
  out[0] = state.step(1.0);
  for (std::size_t n = 1; n < length; ++n) out[n] = state.step(0.0);
  return out;
}

namespace {

struct Quadrature {
  std::vector<double> omega;    // nodes, rad/s
  std::vector<double> weight;   // trapezoid dw weights, rad/s
  std::vector<double> cos_ch;   // [node][t] resampled channels
  std::vector<double> sin_ch;
  std::size_t n_times = 0;
};

// Restricts the stored grid to the requested band; optionally resamples the
// channels linearly onto a uniform omega grid.
Quadrature build_quadrature(const Spectrogram& spec, const InverseConfig& cfg) {
  const std::size_t bins = spec.n_freqs();
  const std::size_t times = spec.n_times();
  std::vector<double> omega_all(bins);
  for (std::size_t j = 0; j < bins; ++j) omega_all[j] = 2.0 * std::numbers::pi * spec.freqs_hz[j];
  const double lo = cfg.omega_min > 0.0 ? cfg.omega_min : omega_all.front();
  const double hi = std::isfinite(cfg.omega_max) ? cfg.omega_max : omega_all.back();
  if (!(hi > lo)) throw std::invalid_argument("inverse_transform: empty omega band");

  Quadrature q;
  q.n_times = times;
  if (cfg.quadrature_step <= 0.0) {
    std::size_t first = 0;
    while (first < bins && omega_all[first] < lo) ++first;
    std::size_t last = bins;
    while (last > first && omega_all[last - 1] > hi) --last;
    if (last - first < 2) throw std::invalid_argument("inverse_transform: band holds < 2 bins");
    const std::size_t m = last - first;
    q.omega.assign(omega_all.begin() + first, omega_all.begin() + last);
    q.weight.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      const double left = j == 0 ? q.omega[0] : q.omega[j - 1];
      const double right = j + 1 == m ? q.omega[m - 1] : q.omega[j + 1];
      q.weight[j] = 0.5 * (right - left);
    }
    q.cos_ch.resize(m * times);
    q.sin_ch.resize(m * times);
    for (std::size_t t = 0; t < times; ++t) {
      for (std::size_t j = 0; j < m; ++j) {
        q.cos_ch[j * times + t] = spec.cos_part[t * bins + first + j];
        q.sin_ch[j * times + t] = spec.sin_part[t * bins + first + j];
      }
    }
    return q;
  }

  const double step = cfg.quadrature_step;
  const double start = std::max(lo, omega_all.front());
  const double stop = std::min(hi, omega_all.back());
  const auto nodes = static_cast<std::size_t>(std::floor((stop - start) / step)) + 1;
  if (nodes < 2) throw std::invalid_argument("inverse_transform: quadrature step too large");
  q.omega.resize(nodes);
  q.weight.assign(nodes, step);
  q.weight.front() = q.weight.back() = 0.5 * step;
  q.cos_ch.resize(nodes * times);
  q.sin_ch.resize(nodes * times);
  std::size_t right = 1;
  for (std::size_t i = 0; i < nodes; ++i) {
    const double w = start + double(i) * step;
    q.omega[i] = w;
    while (right + 1 < bins && omega_all[right] < w) ++right;
    const std::size_t l = right - 1;
    const double frac = (w - omega_all[l]) / (omega_all[right] - omega_all[l]);
    for (std::size_t t = 0; t < times; ++t) {
      const double c0 = spec.cos_part[t * bins + l];
      const double c1 = spec.cos_part[t * bins + right];
      const double s0 = spec.sin_part[t * bins + l];
      const double s1 = spec.sin_part[t * bins + right];
      q.cos_ch[i * times + t] = c0 + frac * (c1 - c0);
      q.sin_ch[i * times + t] = s0 + frac * (s1 - s0);
    }
  }
  return q;
}

}  // namespace

InverseResult inverse_transform(const Spectrogram& spec, const KernelParams& kernel,
                                const InverseConfig& cfg) {
  kernel.validate();
  if (spec.cos_part.empty() || spec.sin_part.empty()) {
    throw std::invalid_argument("inverse_transform: spectrogram lacks quadrature channels");
  }
  if (spec.n_times() < 2) throw std::invalid_argument("inverse_transform: too few columns");
  for (std::size_t t = 1; t < spec.n_times(); ++t) {
    if (spec.times[t] - spec.times[t - 1] != 1) {
      throw std::invalid_argument("inverse_transform: needs column_stride 1");
    }
  }
  const double rate = spec.sample_rate;
  // The derivation assumes one fixed temporal scale across bins; reject
  // spectrograms whose grid disagrees with the kernel.
  if (spec.config.window_kind == WindowKind::time_causal_limit &&
      !spec.config.grid.freqs_hz.empty()) {
    for (double f : spec.config.grid.freqs_hz) {
      const double tau = spec.config.grid.tau_ref_samples(f, rate);
      if (std::abs(tau - kernel.tau) > 1e-6 * kernel.tau) {
        throw std::invalid_argument(
            "inverse_transform: spectrogram scale varies across bins or does not match the kernel");
      }
    }
  }
  const double dt = 1.0 / rate;

  // Kernel impulse response and its energy. The full-form horizon is where
  // the energy integral saturates.
  const std::vector<double> mu = discrete_time_constants(kernel);
  double mu_sum = 0.0;
  for (double m : mu) mu_sum += m;
  const std::size_t probe_len = static_cast<std::size_t>(64.0 * (mu_sum + 1.0)) + 1024;
  const std::vector<double> psi_long = limit_kernel_impulse(kernel, probe_len);
  double energy_full = 0.0;
  for (double p : psi_long) energy_full += p * p;
  std::size_t full_horizon = probe_len;
  {
    double acc = 0.0;
    for (std::size_t v = 0; v < probe_len; ++v) {
      acc += psi_long[v] * psi_long[v];
      if (acc >= (1.0 - 1e-12) * energy_full) {
        full_horizon = v + 1;
        break;
      }
    }
  }
  std::size_t horizon = full_horizon;
  if (std::isfinite(cfg.delta_u_s)) {
    if (!(cfg.delta_u_s > 0.0)) throw std::invalid_argument("inverse_transform: delta_u must be > 0");
    horizon = std::min<std::size_t>(full_horizon,
                                    static_cast<std::size_t>(std::llround(cfg.delta_u_s * rate)));
  }
  horizon = std::min(horizon, spec.n_times() - 1);
  if (horizon < 2) throw std::invalid_argument("inverse_transform: horizon shorter than 2 samples");

  std::vector<double> psi(psi_long.begin(), psi_long.begin() + horizon);
  double energy = 0.0;
  for (std::size_t v = 0; v < horizon; ++v) {
    const double w = (v == 0 || v + 1 == horizon) ? 0.5 : 1.0;
    energy += w * psi[v] * psi[v];
  }
  if (energy < 1e-12 * energy_full) {
    throw std::runtime_error("inverse_transform: horizon holds < 1e-12 of the kernel energy");
  }
  // trapezoid weights folded into psi for the v integral
  psi.front() *= 0.5;
  psi.back() *= 0.5;

  const Quadrature q = build_quadrature(spec, cfg);
  const std::size_t n_out = spec.n_times() - horizon;
  const auto& kern = simd::active_kernels();

  // B_j(u) = sum_v psi[v] channel_j(u+v): a per-bin weighted look-ahead.
  const std::size_t nodes = q.omega.size();
  std::vector<double> b_cos(nodes * n_out), b_sin(nodes * n_out);
  for (std::size_t j = 0; j < nodes; ++j) {
    const double* c_row = q.cos_ch.data() + j * q.n_times;
    const double* s_row = q.sin_ch.data() + j * q.n_times;
    for (std::size_t u = 0; u < n_out; ++u) {
      b_cos[j * n_out + u] = kern.dot(psi.data(), c_row + u, horizon);
      b_sin[j * n_out + u] = kern.dot(psi.data(), s_row + u, horizon);
    }
  }

  InverseResult result;
  result.horizon_samples = horizon;
  result.samples.assign(n_out, 0.0);
  const double norm = 1.0 / (2.0 * std::numbers::pi * rate * energy);
  double real_sq = 0.0;
  for (std::size_t u = 0; u < n_out; ++u) {
    const std::int64_t abs_u = spec.times[u];
    double re = 0.0;
    for (std::size_t j = 0; j < nodes; ++j) {
      const double phase = q.omega[j] * double(abs_u) * dt;
      const double cp = std::cos(phase);
      const double sp = std::sin(phase);
      const double bc = b_cos[j * n_out + u];
      const double bs = b_sin[j * n_out + u];
      // The -omega partner of each node carries the conjugate channel values,
      // so its contribution is the complex conjugate of the +omega one: the
      // real parts double and the imaginary parts cancel pairwise. The
      // residue diagnostic is therefore identically zero here.
      re += 2.0 * q.weight[j] * (bc * cp - bs * sp);
    }
    result.samples[u] = norm * re;
    real_sq += norm * re * norm * re;
  }
  result.real_l2 = std::sqrt(real_sq);
  result.imag_residue_l2 = 0.0;
  return result;
}

}  // namespace tcgabor
