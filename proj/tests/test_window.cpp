#include <doctest.h>

#include <cmath>
#include <vector>

#include "tcgabor/window.hpp"

using namespace tcgabor;

TEST_CASE("scaled bessel against the standard library for small arguments") {
  for (double s : {0.5, 2.0, 10.0, 50.0}) {
    const auto t = scaled_bessel_i(s, 15);
    for (int n = 0; n <= 15; ++n) {
      const double ref = std::exp(-s) * std::cyl_bessel_i(double(n), s);
      if (ref < 1e-280) continue;
      CHECK(t[std::size_t(n)] == doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("discrete gaussian window") {
  SUBCASE("sums to 1 within the truncation budget") {
    for (double s : {0.5, 4.0, 100.0, 1e4}) {
      const Window w = discrete_gaussian_window(s, 1e-8);
      double sum = 0.0;
      for (double v : w.values) sum += v;
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-8));
      CHECK(sum <= 1.0 + 1e-15);
    }
  }

  SUBCASE("variance equals s") {
    for (double s : {2.0, 25.0, 400.0}) {
      const Window w = discrete_gaussian_window(s, 1e-12);
      double sum = 0.0, m2 = 0.0;
      for (int n = -w.half; n <= w.half; ++n) {
        sum += w.at(n);
        m2 += double(n) * double(n) * w.at(n);
      }
      CHECK(m2 / sum == doctest::Approx(s).epsilon(1e-8));
    }
  }

  SUBCASE("semigroup: T(.;2) * T(.;2) = T(.;4)") {
    const Window a = discrete_gaussian_window(2.0, 1e-12);
    const Window b = discrete_gaussian_window(4.0, 1e-12);
    double worst = 0.0;
    for (int n = -b.half; n <= b.half; ++n) {
      double conv = 0.0;
      for (int k = -a.half; k <= a.half; ++k) {
        const int m = n - k;
        if (m >= -a.half && m <= a.half) conv += a.at(k) * a.at(m);
      }
      worst = std::max(worst, std::abs(conv - b.at(n)));
    }
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("sampled gaussian window") {
  const Window w = sampled_gaussian_window(25.0, 1e-8);
  CHECK(w.at(1) == w.at(-1));
  CHECK(w.at(0) == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI * 625.0)).epsilon(1e-15));
  double sum = 0.0;
  for (double v : w.values) sum += v;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
  // truncation point honors the tail budget
  CHECK(std::erfc(w.half / (25.0 * std::sqrt(2.0))) < 1e-8);
  CHECK(std::erfc((w.half - 1) / (25.0 * std::sqrt(2.0))) >= 1e-8);
}
