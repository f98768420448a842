#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "tcgabor/estimation.hpp"
#include "tcgabor/transform.hpp"

using namespace tcgabor;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> sine(double freq_hz, double rate, std::size_t n) {
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = std::sin(2.0 * kPi * freq_hz * double(i) / rate);
  return s;
}

std::vector<double> interior_estimates(const Spectrogram& spec) {
  std::vector<double> out;
  const auto len = spec.times.back() + 1;
  for (std::size_t col = 0; col < spec.n_times(); ++col) {
    const auto t = spec.times[col];
    if (t < len / 10 || t >= len - len / 10) continue;
    const auto est = peak_frequency(spec.column(col), spec.freqs_hz, t);
    if (est) out.push_back(est->f_hat_hz);
  }
  return out;
}

}  // namespace

TEST_CASE("peak_frequency") {
  const std::vector<double> freqs{100.0, 110.0, 121.0, 133.1, 146.41};

  SUBCASE("symmetric triple lands on the center bin") {
    const std::vector<double> col{0.1, 0.5, 1.0, 0.5, 0.1};
    const auto est = peak_frequency(col, freqs);
    REQUIRE(est.has_value());
    CHECK(est->f_disc_hz == 121.0);
    CHECK(est->f_hat_hz == doctest::Approx(121.0).epsilon(1e-14));
    CHECK(est->interpolated);
  }

  SUBCASE("recovers a parabola vertex midway between bins") {
    // values of a parabola in log f with vertex half a bin above bin 2
    const double h = std::log(1.1);
    const double vertex = std::log(121.0) + 0.5 * h;
    std::vector<double> col(5);
    for (std::size_t j = 0; j < 5; ++j) {
      const double x = std::log(freqs[j]) - vertex;
      col[j] = 2.0 - 3.0 * x * x;
    }
    const auto est = peak_frequency(col, freqs);
    REQUIRE(est.has_value());
    CHECK(std::log(est->f_hat_hz) == doctest::Approx(vertex).epsilon(1e-12));
  }

  SUBCASE("all-zero column yields no estimate") {
    const std::vector<double> col(5, 0.0);
    CHECK_FALSE(peak_frequency(col, freqs).has_value());
  }

  SUBCASE("boundary argmax comes back uninterpolated") {
    const std::vector<double> col{1.0, 0.5, 0.2, 0.1, 0.05};
    const auto est = peak_frequency(col, freqs);
    REQUIRE(est.has_value());
    CHECK(est->f_hat_hz == 100.0);
    CHECK_FALSE(est->interpolated);
  }

  SUBCASE("ties break toward the lowest frequency") {
    const std::vector<double> col{0.2, 1.0, 1.0, 0.2, 0.1};
    const auto est = peak_frequency(col, freqs);
    REQUIRE(est.has_value());
    CHECK(est->f_disc_hz == 110.0);
  }

  CHECK_THROWS(peak_frequency(std::vector<double>{1.0, 2.0}, std::vector<double>{1.0, 2.0}));
}

TEST_CASE("bias_spread") {
  SUBCASE("all estimates equal the reference") {
    const std::vector<double> est(10, 440.0);
    const BiasSpread bs = bias_spread(est, 440.0);
    CHECK(bs.b == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bs.s == doctest::Approx(1.0).epsilon(1e-15));
  }

  SUBCASE("log-symmetric estimates are unbiased") {
    const std::vector<double> est{880.0, 220.0};
    const BiasSpread bs = bias_spread(est, 440.0);
    CHECK(bs.b == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(bs.s >= 1.0);
  }

  CHECK_THROWS(bias_spread(std::span<const double>{}, 440.0));
}

TEST_CASE("noiseless estimates sit far inside the quantization ceiling") {
  TransformConfig cfg;
  cfg.window_kind = WindowKind::time_causal_limit;
  cfg.grid = FrequencyGrid::make(220.0, 880.0, 48, 8.0);
  cfg.sample_rate = 8000.0;
  cfg.c = 2.0;
  cfg.column_stride = 8;
  cfg.store_channels = false;
  const double f0 = 441.3;  // deliberately off-grid
  const Spectrogram spec = causal_transform(sine(f0, cfg.sample_rate, 8000), cfg);
  const auto est = interior_estimates(spec);
  REQUIRE(!est.empty());
  const double ceiling = 0.2 * (std::exp2(1.0 / 48.0) - 1.0);
  for (double f : est) CHECK(std::abs(f / f0 - 1.0) < ceiling);
}

TEST_CASE("estimates are invariant under amplitude rescaling") {
  TransformConfig cfg;
  cfg.window_kind = WindowKind::time_causal_limit;
  cfg.grid = FrequencyGrid::make(220.0, 880.0, 48, 4.0);
  cfg.sample_rate = 8000.0;
  cfg.c = 2.0;
  cfg.column_stride = 16;
  cfg.store_channels = false;
  auto f = sine(440.0, cfg.sample_rate, 6000);
  const Spectrogram unit = causal_transform(f, cfg);
  for (double& v : f) v *= 0.37;
  const Spectrogram scaled = causal_transform(f, cfg);
  const auto a = interior_estimates(unit);
  const auto b = interior_estimates(scaled);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(std::abs(std::log(a[i] / b[i])) < 1e-12);
  }
  const BiasSpread bs_a = bias_spread(a, 440.0);
  const BiasSpread bs_b = bias_spread(b, 440.0);
  CHECK(bs_a.b == doctest::Approx(bs_b.b).epsilon(1e-12));
  CHECK(bs_a.s == doctest::Approx(bs_b.s).epsilon(1e-12));
}

TEST_CASE("frequency-shift covariance of estimate errors") {
  // two on-grid frequencies one octave apart, both inside the proportional
  // band, must show matching mean log-ratio errors
  TransformConfig cfg;
  cfg.window_kind = WindowKind::time_causal_limit;
  cfg.grid = FrequencyGrid::make(200.0, 1800.0, 48, 8.0);
  cfg.sample_rate = 8000.0;
  cfg.c = 2.0;
  cfg.column_stride = 16;
  cfg.store_channels = false;
  const double f_lo = cfg.grid.freqs_hz[24];
  const double f_hi = cfg.grid.freqs_hz[24 + 48];
  REQUIRE(f_hi == doctest::Approx(2.0 * f_lo).epsilon(1e-12));

  double means[2];
  int idx = 0;
  for (double f0 : {f_lo, f_hi}) {
    const Spectrogram spec = causal_transform(sine(f0, cfg.sample_rate, 8000), cfg);
    const auto est = interior_estimates(spec);
    REQUIRE(!est.empty());
    double mean = 0.0;
    for (double f : est) mean += std::log(f / f0);
    means[idx++] = mean / double(est.size());
  }
  CHECK(std::abs(means[0] - means[1]) < 2e-4);
}

TEST_CASE("noise benchmark determinism and structure") {
  BenchConfig cfg = BenchConfig::desk(123);
  // trimmed for test runtime; the acceptance suite runs the full desk scale
  cfg.intervals_hz = {{480.0, 960.0}};
  cfg.freqs_per_interval = 2;
  cfg.duration_s = 0.25;
  cfg.noise_levels = {0.0, 0.1};
  cfg.variants = {{TransformKind::time_causal, 4.0, 2.0}, {TransformKind::gabor, 4.0, 0.0}};

  const BenchReport a = noise_benchmark(cfg);
  const BenchReport b = noise_benchmark(cfg);
  REQUIRE(a.cells.size() == 2);
  REQUIRE(a.cells[0].size() == 2);
  for (std::size_t ti = 0; ti < a.cells.size(); ++ti) {
    for (std::size_t vi = 0; vi < a.cells[ti].size(); ++vi) {
      CHECK(a.cells[ti][vi].b == b.cells[ti][vi].b);
      CHECK(a.cells[ti][vi].s == b.cells[ti][vi].s);
      CHECK(a.cells[ti][vi].count > 0);
      CHECK(a.cells[ti][vi].s >= 1.0);
      CHECK(a.cells[ti][vi].b > 0.9);
      CHECK(a.cells[ti][vi].b < 1.1);
    }
  }
  CHECK(a.text_table() == b.text_table());
  CHECK(a.text_table().find("*/") != std::string::npos);

  // a different seed moves the sampled frequencies
  BenchConfig other = cfg;
  other.seed = 321;
  const BenchReport c = noise_benchmark(other);
  CHECK(c.cells[0][1].s != a.cells[0][1].s);
}
