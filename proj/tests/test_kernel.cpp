#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "tcgabor/kernel.hpp"

using namespace tcgabor;

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;
}

TEST_CASE("scale ladder") {
  CHECK(scale_ladder({1.0, 2.0, 1}) == std::vector<double>{1.0});

  const auto ladder = scale_ladder({256.0, 2.0, 8});
  CHECK(ladder.front() == doctest::Approx(0.015625).epsilon(1e-15));
  CHECK(ladder.back() == 256.0);  // tau_K = tau exactly

  const auto two = scale_ladder({1.0, kSqrt2, 2});
  CHECK(two[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(two[1] == 1.0);

  for (std::size_t k = 1; k < ladder.size(); ++k) CHECK(ladder[k] > ladder[k - 1]);

  CHECK_THROWS_AS(scale_ladder({1.0, 1.0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(scale_ladder({-1.0, 2.0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(scale_ladder({1.0, 2.0, 0}), std::invalid_argument);
}

TEST_CASE("continuous time constants") {
  CHECK(continuous_time_constants({1.0, 2.0, 1}) == std::vector<double>{1.0});

  const auto mu = continuous_time_constants({1.0, 2.0, 2});
  CHECK(mu[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(mu[1] == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  CHECK(mu[0] * mu[0] + mu[1] * mu[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("telescoping sum of squared time constants") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> tau_dist(0.1, 100.0);
  std::uniform_real_distribution<double> c_dist(1.1, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const KernelParams p{tau_dist(rng), c_dist(rng), 1 + int(rng() % 12)};
    const auto mu = continuous_time_constants(p);
    double sum = 0.0;
    for (double m : mu) sum += m * m;
    CHECK(sum == doctest::Approx(p.tau).epsilon(1e-12));
  }
  const auto mu = continuous_time_constants({5.3, kSqrt2, 8});
  double sum = 0.0;
  for (double m : mu) sum += m * m;
  CHECK(sum == doctest::Approx(5.3).epsilon(1e-12));
}

TEST_CASE("discrete time constants") {
  CHECK(discrete_mu(0.0) == 0.0);
  CHECK(discrete_mu(2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(discrete_mu(6.0) == doctest::Approx(2.0).epsilon(1e-15));

  // composed discrete variance matches tau exactly
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> tau_dist(1.0, 1e6);
  std::uniform_real_distribution<double> c_dist(1.1, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const KernelParams p{tau_dist(rng), c_dist(rng), 1 + int(rng() % 12)};
    const auto mu = discrete_time_constants(p);
    double total = 0.0;
    for (double m : mu) total += m * m + m;
    CHECK(total == doctest::Approx(p.tau).epsilon(1e-12));
  }
}

TEST_CASE("fourier transform of the limit kernel") {
  const KernelParams p{1.0, 2.0, 8};
  CHECK(limit_kernel_fourier(0.0, p) == std::complex<double>(1.0, 0.0));

  SUBCASE("scale covariance of the product") {
    const double mag_a = std::abs(limit_kernel_fourier(3.7 / 2.0, {4.0, 2.0, 8}));
    const double mag_b = std::abs(limit_kernel_fourier(3.7, {1.0, 2.0, 8}));
    CHECK(mag_a == doctest::Approx(mag_b).epsilon(1e-10));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> omega_dist(0.01, 50.0);
    std::uniform_real_distribution<double> tau_dist(0.1, 20.0);
    for (int trial = 0; trial < 40; ++trial) {
      const double omega = omega_dist(rng);
      const double tau = tau_dist(rng);
      const double c = (trial % 2 == 0) ? 2.0 : kSqrt2;
      const double lhs = std::abs(limit_kernel_fourier(omega / c, {c * c * tau, c, 8}));
      const double rhs = std::abs(limit_kernel_fourier(omega, {tau, c, 8}));
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }

  SUBCASE("low-pass: magnitude non-increasing in |omega|") {
    double prev = 1.0;
    for (int i = 1; i <= 200; ++i) {
      const double mag = std::abs(limit_kernel_fourier(0.1 * i, p));
      CHECK(mag <= prev + 1e-15);
      prev = mag;
    }
  }

  SUBCASE("perturbation-table anchor") {
    // R at omega = 2 omega0 equals |Psi^| at argument omega0 with the scale
    // tied to 2 omega0; the table lists -51.7 dB for N = 4, c = 2.
    const double omega0 = 1.0;
    const double n_factor = 4.0;
    const double root_tau = 2.0 * std::numbers::pi * n_factor / (2.0 * omega0);
    const double mag = std::abs(limit_kernel_fourier(omega0, {root_tau * root_tau, 2.0, 8}, 1e-14));
    CHECK(20.0 * std::log10(mag) == doctest::Approx(-51.7).epsilon(0.002));
  }
}

TEST_CASE("delay estimates") {
  const DelayEstimates a = delay_estimates({1.0, kSqrt2, 8});
  CHECK(a.mean_delay == doctest::Approx(2.414).epsilon(5e-4));
  CHECK(a.max_pos_delay == doctest::Approx(1.904).epsilon(5e-4));

  const DelayEstimates b = delay_estimates({1.0, 2.0, 8});
  CHECK(b.mean_delay == doctest::Approx(1.732).epsilon(5e-4));
  CHECK(b.max_pos_delay == doctest::Approx(1.125).epsilon(5e-4));

  CHECK(a.max_pos_delay / b.max_pos_delay == doctest::Approx(1.692).epsilon(1e-3));
  CHECK(a.max_pos_delay < a.mean_delay);
  CHECK(b.max_pos_delay < b.mean_delay);

  // proportional to sqrt(tau)
  const DelayEstimates scaled = delay_estimates({9.0, 2.0, 8});
  CHECK(scaled.mean_delay == doctest::Approx(3.0 * b.mean_delay).epsilon(1e-12));
}
