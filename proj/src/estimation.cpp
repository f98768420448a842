#include "tcgabor/estimation.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tcgabor/transform.hpp"

namespace tcgabor {

std::optional<FrequencyEstimate> peak_frequency(std::span<const double> column,
                                                std::span<const double> freqs_hz,
                                                std::int64_t time_index) {
  if (column.size() < 3) throw std::invalid_argument("peak_frequency: need at least 3 bins");
  if (column.size() != freqs_hz.size()) {
    throw std::invalid_argument("peak_frequency: column/grid size mismatch");
  }
  std::size_t best = 0;
  for (std::size_t j = 1; j < column.size(); ++j) {
    if (column[j] > column[best]) best = j;  // ties keep the lower frequency
  }
  if (column[best] <= 0.0) return std::nullopt;

  FrequencyEstimate est;
  est.time_index = time_index;
  est.f_disc_hz = freqs_hz[best];
  est.f_hat_hz = est.f_disc_hz;
  est.interpolated = false;
  if (best == 0 || best + 1 == column.size()) return est;

  const double ym = column[best - 1];
  const double y0 = column[best];
  const double yp = column[best + 1];
  const double denom = ym - 2.0 * y0 + yp;
  if (denom >= 0.0) return est;  // flat or degenerate triple
  // vertex offset in units of the log-frequency bin spacing
  const double offset = 0.5 * (ym - yp) / denom;
  const double step = std::log(freqs_hz[best + 1] / freqs_hz[best]);
  est.f_hat_hz = std::exp(std::log(est.f_disc_hz) + offset * step);
  est.interpolated = true;
  return est;
}

BiasSpread bias_spread(std::span<const double> estimates_hz, double f_ref) {
  if (estimates_hz.empty()) throw std::invalid_argument("bias_spread: no estimates");
  if (!(f_ref > 0.0)) throw std::invalid_argument("bias_spread: reference must be > 0");
  double mean = 0.0;
  for (double f : estimates_hz) mean += std::log(f / f_ref);
  mean /= double(estimates_hz.size());
  double var = 0.0;
  for (double f : estimates_hz) {
    const double d = std::log(f / f_ref) - mean;
    var += d * d;
  }
  var /= double(estimates_hz.size());
  return {std::exp(mean), std::exp(std::sqrt(var))};
}

std::string BenchVariant::label() const {
  std::ostringstream os;
  if (kind == TransformKind::gabor) {
    os << "non-causal N=" << N;
  } else {
    os << "time-causal N=" << N << " c=";
    if (std::abs(c - std::numbers::sqrt2) < 1e-12) {
      os << "sqrt2";
    } else {
      os << c;
    }
  }
  return os.str();
}

BenchConfig BenchConfig::desk(std::uint64_t seed) {
  BenchConfig cfg;
  cfg.intervals_hz = {{480.0, 960.0}, {960.0, 1920.0}};
  cfg.freqs_per_interval = 3;
  cfg.duration_s = 0.5;
  cfg.seed = seed;
  cfg.noise_levels = {0.0, 0.01, 0.0316, 0.10, 0.316, 1.0};
  cfg.variants = {
      {TransformKind::time_causal, 4.0, std::numbers::sqrt2},
      {TransformKind::time_causal, 4.0, 2.0},
      {TransformKind::time_causal, 8.0, std::numbers::sqrt2},
      {TransformKind::time_causal, 8.0, 2.0},
      {TransformKind::gabor, 4.0, 0.0},
      {TransformKind::gabor, 8.0, 0.0},
  };
  return cfg;
}

BenchConfig BenchConfig::full(std::uint64_t seed) {
  BenchConfig cfg = desk(seed);
  cfg.intervals_hz = {{240.0, 480.0},
                      {480.0, 960.0},
                      {960.0, 1920.0},
                      {1920.0, 3840.0},
                      {3840.0, 7680.0}};
  cfg.freqs_per_interval = 10;
  cfg.duration_s = 3.0;
  return cfg;
}

namespace {

// Distributions built directly on the raw generator so that reports are
// identical across standard-library implementations.
double uniform01(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(std::log(lo) + uniform01(rng) * (std::log(hi) - std::log(lo)));
}

class GaussianDraw {
 public:
  double operator()(std::mt19937_64& rng) {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace

BenchReport noise_benchmark(const BenchConfig& cfg) {
  if (cfg.intervals_hz.empty() || cfg.variants.empty() || cfg.noise_levels.empty()) {
    throw std::invalid_argument("noise_benchmark: empty configuration");
  }
  std::mt19937_64 rng(cfg.seed);
  GaussianDraw gauss;

  const std::size_t n_samples = static_cast<std::size_t>(std::llround(cfg.duration_s * cfg.sample_rate));
  const double dt = 1.0 / cfg.sample_rate;

  // Frequencies first, then per-signal noise, all from one deterministic stream.
  std::vector<double> freqs;
  for (const auto& [lo, hi] : cfg.intervals_hz) {
    for (int i = 0; i < cfg.freqs_per_interval; ++i) freqs.push_back(log_uniform(rng, lo, hi));
  }

  BenchReport report;
  report.config = cfg;
  report.cells.assign(cfg.variants.size(),
                      std::vector<BenchCell>(cfg.noise_levels.size()));
  std::vector<std::vector<std::vector<double>>> pools(
      cfg.variants.size(), std::vector<std::vector<double>>(cfg.noise_levels.size()));

  std::vector<double> clean(n_samples), noisy(n_samples), white(n_samples);
  for (double f_ref : freqs) {
    const double omega = 2.0 * std::numbers::pi * f_ref;
    for (std::size_t n = 0; n < n_samples; ++n) clean[n] = std::sin(omega * double(n) * dt);
    for (std::size_t vi = 0; vi < cfg.noise_levels.size(); ++vi) {
      const double nu = cfg.noise_levels[vi];
      for (std::size_t n = 0; n < n_samples; ++n) white[n] = gauss(rng);
      for (std::size_t n = 0; n < n_samples; ++n) noisy[n] = clean[n] + nu * white[n];

      for (std::size_t ti = 0; ti < cfg.variants.size(); ++ti) {
        const BenchVariant& variant = cfg.variants[ti];
        TransformConfig tc;
        tc.grid = FrequencyGrid::make(cfg.f_min, cfg.f_max, cfg.per_octave, variant.N,
                                      ThresholdMode::hard);
        tc.sample_rate = cfg.sample_rate;
        tc.layers = 8;
        tc.store_channels = false;
        Spectrogram spec;
        if (variant.kind == TransformKind::time_causal) {
          tc.window_kind = WindowKind::time_causal_limit;
          tc.c = variant.c;
          tc.column_stride = cfg.causal_stride;
          spec = causal_transform(noisy, tc);
        } else {
          tc.window_kind = WindowKind::gabor_sampled;
          tc.column_stride = cfg.gabor_stride;
          spec = gabor_transform(noisy, tc);
        }
        const auto lo_t = static_cast<std::int64_t>(cfg.edge_discard * double(n_samples));
        const auto hi_t = static_cast<std::int64_t>((1.0 - cfg.edge_discard) * double(n_samples));
        for (std::size_t col = 0; col < spec.n_times(); ++col) {
          const std::int64_t t = spec.times[col];
          if (t < lo_t || t >= hi_t) continue;
          const auto est = peak_frequency(spec.column(col), spec.freqs_hz, t);
          if (est) pools[ti][vi].push_back(std::log(est->f_hat_hz / f_ref));
        }
      }
    }
  }

  for (std::size_t ti = 0; ti < cfg.variants.size(); ++ti) {
    for (std::size_t vi = 0; vi < cfg.noise_levels.size(); ++vi) {
      const auto& pool = pools[ti][vi];
      BenchCell& cell = report.cells[ti][vi];
      cell.count = pool.size();
      if (pool.empty()) continue;
      double mean = 0.0;
      for (double r : pool) mean += r;
      mean /= double(pool.size());
      double var = 0.0;
      for (double r : pool) var += (r - mean) * (r - mean);
      var /= double(pool.size());
      cell.b = std::exp(mean);
      cell.s = std::exp(std::sqrt(var));
    }
  }
  return report;
}

std::string BenchReport::text_table() const {
  std::ostringstream os;
  os << "use case";
  for (double nu : config.noise_levels) os << "\tnu=" << nu;
  os << "\n";
  for (std::size_t ti = 0; ti < config.variants.size(); ++ti) {
    os << config.variants[ti].label();
    for (std::size_t vi = 0; vi < config.noise_levels.size(); ++vi) {
      const BenchCell& cell = cells[ti][vi];
      os << "\t" << std::fixed;
      os.precision(4);
      os << cell.b << " */ " << cell.s;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace tcgabor
