#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "tcgabor/inverse.hpp"
#include "tcgabor/transform.hpp"

using namespace tcgabor;

namespace {

constexpr double kPi = std::numbers::pi;

// constant-scale configuration: one fixed sigma across all bins, which the
// inverse derivation requires
TransformConfig fixed_scale_config(double rate, double sigma_s) {
  TransformConfig cfg;
  cfg.window_kind = WindowKind::time_causal_limit;
  cfg.grid = FrequencyGrid::make(330.0, 590.0, 96, 4.0);
  cfg.grid.sigma_min_s = sigma_s;
  cfg.grid.sigma_max_s = sigma_s;
  cfg.sample_rate = rate;
  cfg.c = 2.0;
  cfg.layers = 8;
  return cfg;
}

double rel_l2(std::span<const double> got, std::span<const double> want, std::size_t lo,
              std::size_t hi) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = lo; i < hi; ++i) {
    num += (got[i] - want[i]) * (got[i] - want[i]);
    den += want[i] * want[i];
  }
  return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("limit kernel impulse response") {
  SUBCASE("single layer mu = 1 is geometric") {
    const KernelParams p{2.0, 2.0, 1};  // delta tau = 2 -> discrete mu = 1
    const auto psi = limit_kernel_impulse(p, 10);
    double expected = 0.5;
    for (double v : psi) {
      CHECK(v == doctest::Approx(expected).epsilon(1e-15));
      expected /= 2.0;
    }
  }

  SUBCASE("unit DC gain and first moment near the summed time constants") {
    const KernelParams p{400.0, 2.0, 8};
    const auto mu = discrete_time_constants(p);
    double mu_sum = 0.0;
    for (double m : mu) mu_sum += m;
    const auto len = static_cast<std::size_t>(50.0 * mu_sum) + 64;
    const auto psi = limit_kernel_impulse(p, len);
    double sum = 0.0, moment = 0.0;
    for (std::size_t n = 0; n < len; ++n) {
      sum += psi[n];
      moment += double(n) * psi[n];
    }
    CHECK(sum >= 1.0 - 1e-6);
    CHECK(moment == doctest::Approx(mu_sum).epsilon(1e-3));
  }
}

TEST_CASE("inverse transform") {
  const double rate = 4000.0;
  const double sigma_s = 0.015;  // 60 samples
  TransformConfig cfg = fixed_scale_config(rate, sigma_s);
  const double tau = cfg.grid.tau_ref_samples(440.0, rate);
  const KernelParams kernel{tau, cfg.c, cfg.layers};
  const double root_tau = std::sqrt(tau);

  const std::size_t len = 2400;
  std::vector<double> signal(len);
  for (std::size_t n = 0; n < len; ++n) signal[n] = std::sin(2.0 * kPi * 440.0 * double(n) / rate);
  const Spectrogram spec = causal_transform(signal, cfg);

  SUBCASE("zero spectrogram reconstructs to zero") {
    const std::vector<double> zeros(len, 0.0);
    const Spectrogram zspec = causal_transform(zeros, cfg);
    InverseConfig icfg;
    icfg.delta_u_s = 4.0 * root_tau / rate;
    const InverseResult r = inverse_transform(zspec, kernel, icfg);
    for (double v : r.samples) CHECK(v == 0.0);
    CHECK(r.imag_residue_l2 <= 1e-6 * std::max(r.real_l2, 1.0));
  }

  SUBCASE("round-trip error shrinks as the horizon doubles") {
    // fixed interior scoring window so the sweep compares like with like
    const std::size_t lo = 400;
    const std::size_t hi = len - static_cast<std::size_t>(8.0 * root_tau) - 1;
    double prev = 1e9;
    for (double factor : {2.0, 4.0, 8.0}) {
      InverseConfig icfg;
      icfg.delta_u_s = factor * root_tau / rate;
      const InverseResult r = inverse_transform(spec, kernel, icfg);
      REQUIRE(r.samples.size() >= hi);
      const double err = rel_l2(r.samples, signal, lo, hi);
      INFO("delta_u = ", factor, " sqrt(tau): rel L2 err = ", err);
      CHECK(err <= prev + 1e-12);
      prev = err;
      if (factor == 8.0) {
        // regression bound calibrated from the noiseless run
        CHECK(err < 0.05);
        CHECK(r.imag_residue_l2 <= 1e-6 * r.real_l2);
      }
    }
  }

  SUBCASE("linearity in the spectrogram channels") {
    std::vector<double> other(len);
    for (std::size_t n = 0; n < len; ++n) {
      other[n] = 0.7 * std::sin(2.0 * kPi * 505.0 * double(n) / rate + 0.3);
    }
    const Spectrogram spec_b = causal_transform(other, cfg);
    Spectrogram mix = spec;
    for (std::size_t i = 0; i < mix.cos_part.size(); ++i) {
      mix.cos_part[i] = 2.0 * spec.cos_part[i] - 0.5 * spec_b.cos_part[i];
      mix.sin_part[i] = 2.0 * spec.sin_part[i] - 0.5 * spec_b.sin_part[i];
    }
    InverseConfig icfg;
    icfg.delta_u_s = 4.0 * root_tau / rate;
    const InverseResult ra = inverse_transform(spec, kernel, icfg);
    const InverseResult rb = inverse_transform(spec_b, kernel, icfg);
    const InverseResult rm = inverse_transform(mix, kernel, icfg);
    double scale = 0.0;
    for (double v : rm.samples) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < rm.samples.size(); ++i) {
      CHECK(rm.samples[i] ==
            doctest::Approx(2.0 * ra.samples[i] - 0.5 * rb.samples[i]).epsilon(1e-10).scale(scale));
    }
  }

  SUBCASE("reconstruction never reads rows before the output time") {
    InverseConfig icfg;
    icfg.delta_u_s = 3.0 * root_tau / rate;
    const InverseResult full = inverse_transform(spec, kernel, icfg);
    Spectrogram hidden = spec;
    const std::size_t cut = 700;
    for (std::size_t t = 0; t < cut; ++t) {
      for (std::size_t j = 0; j < hidden.n_freqs(); ++j) {
        hidden.cos_part[t * hidden.n_freqs() + j] = 0.0;
        hidden.sin_part[t * hidden.n_freqs() + j] = 0.0;
      }
    }
    const InverseResult censored = inverse_transform(hidden, kernel, icfg);
    for (std::size_t u = cut; u < full.samples.size(); ++u) {
      CHECK(censored.samples[u] == full.samples[u]);
    }
  }

  SUBCASE("too small a horizon is rejected") {
    InverseConfig icfg;
    icfg.delta_u_s = 1.0 / rate;  // below the two-sample minimum
    CHECK_THROWS_AS(inverse_transform(spec, kernel, icfg), std::invalid_argument);

    // a big kernel starts so close to zero that a few samples hold less than
    // 1e-12 of its energy
    TransformConfig big = fixed_scale_config(rate, 0.125);
    const double big_tau = big.grid.tau_ref_samples(440.0, rate);
    const KernelParams big_kernel{big_tau, big.c, big.layers};
    const std::vector<double> short_signal(signal.begin(), signal.begin() + 900);
    const Spectrogram small_spec = causal_transform(short_signal, big);
    InverseConfig tiny;
    tiny.delta_u_s = 3.0 / rate;
    CHECK_THROWS_AS(inverse_transform(small_spec, big_kernel, tiny), std::runtime_error);
  }

  SUBCASE("magnitude-only spectrograms are rejected") {
    Spectrogram bare = spec;
    bare.cos_part.clear();
    bare.sin_part.clear();
    InverseConfig icfg;
    CHECK_THROWS(inverse_transform(bare, kernel, icfg));
  }
}
