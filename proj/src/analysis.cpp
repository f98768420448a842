#include "tcgabor/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tcgabor {

namespace {

constexpr int kMaxFactors = 4096;

// Per-factor coefficient of the squared product argument:
// q_k = 4 pi^2 N^2 (c^2 - 1) c^{-2k}.
double q_factor(double N, double c, int k) {
  return 4.0 * std::numbers::pi * std::numbers::pi * N * N * (c * c - 1.0) *
         std::pow(c, -2.0 * k);
}

// (1 - e^{-gamma})^2 without cancellation near gamma = 0.
double u_of_gamma(double gamma) {
  const double w = -std::expm1(-gamma);
  return w * w;
}

// sum_k log(1 + q_k u), truncated after `layers` factors or adaptively.
double log_product_sum(double u, double N, double c, int layers, double tol) {
  double sum = 0.0;
  if (layers > 0) {
    for (int k = 1; k <= layers; ++k) sum += std::log1p(q_factor(N, c, k) * u);
    return sum;
  }
  for (int k = 1; k <= kMaxFactors; ++k) {
    const double x = q_factor(N, c, k) * u;
    if (x < tol) break;
    sum += std::log1p(x);
  }
  return sum;
}

}  // namespace

double selectivity_db_gabor(double gamma, double N) {
  return -40.0 * std::numbers::pi * std::numbers::pi * N * N / std::log(10.0) *
         u_of_gamma(gamma);
}

double selectivity_db_causal(double gamma, double N, double c, int layers, double tol) {
  if (!(c > 1.0)) throw std::invalid_argument("selectivity_db_causal: c must be > 1");
  return -10.0 / std::log(10.0) * log_product_sum(u_of_gamma(gamma), N, c, layers, tol);
}

SelectivityCurve selectivity_gabor(std::span<const double> gamma_grid, double N) {
  if (!(N >= 1.0)) throw std::invalid_argument("selectivity_gabor: N must be >= 1");
  SelectivityCurve curve;
  curve.kind = TransformKind::gabor;
  curve.N = N;
  curve.omega_ratio.reserve(gamma_grid.size());
  curve.values_db.reserve(gamma_grid.size());
  for (double g : gamma_grid) {
    curve.omega_ratio.push_back(std::exp(g));
    curve.values_db.push_back(selectivity_db_gabor(g, N));
  }
  return curve;
}

SelectivityCurve selectivity_causal(std::span<const double> gamma_grid, double N, double c,
                                    double tol) {
  SelectivityCurve curve;
  curve.kind = TransformKind::time_causal;
  curve.N = N;
  curve.c = c;
  curve.omega_ratio.reserve(gamma_grid.size());
  curve.values_db.reserve(gamma_grid.size());
  for (double g : gamma_grid) {
    curve.omega_ratio.push_back(std::exp(g));
    curve.values_db.push_back(selectivity_db_causal(g, N, c, 0, tol));
  }
  return curve;
}

namespace {

BandWidthReport report_from(double gm, double gp) {
  return {gm, gp, gp - gm, std::exp(gm), std::exp(gp)};
}

// Bisection for sum log(1 + q_k u(gamma)) = 2 ln 2 on one side of the peak.
double solve_half_height(double N, double c, int k_factors, double lo, double hi) {
  const double target = 2.0 * std::log(2.0);
  auto f = [&](double g) { return log_product_sum(u_of_gamma(g), N, c, k_factors, 0.0) - target; };
  double fa = f(lo);
  if (fa * f(hi) > 0.0) {
    throw std::runtime_error("band_width: no bracket for the half-height point in [-1, 1]");
  }
  // the attenuation must grow monotonically away from the peak for the root
  // to be meaningful; sample the side to confirm
  const int probes = 32;
  double prev = f(lo < 0 ? hi : lo);
  for (int i = 1; i <= probes; ++i) {
    const double g = (lo < 0) ? hi + (lo - hi) * double(i) / probes
                              : lo + (hi - lo) * double(i) / probes;
    const double v = f(g);
    if (v < prev - 1e-12) {
      throw std::runtime_error("band_width: selectivity not monotone on the probed side");
    }
    prev = v;
  }
  double a = lo, b = hi;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fa * fm <= 0.0) {
      b = mid;
    } else {
      a = mid;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

BandWidthReport band_width(TransformKind kind, double N, double c, int k_factors) {
  if (kind == TransformKind::gabor) {
    // exp(-2 pi^2 N^2 u) = 1/2  =>  1 - e^{-gamma} = +- sqrt(ln 2 / (2 pi^2 N^2))
    const double s = std::sqrt(std::log(2.0) / (2.0 * std::numbers::pi * std::numbers::pi * N * N));
    if (!(s < 1.0)) throw std::runtime_error("band_width: no finite upper band edge");
    return report_from(-std::log1p(s), -std::log1p(-s));
  }
  if (!(c > 1.0)) throw std::invalid_argument("band_width: c must be > 1");
  const double gm = solve_half_height(N, c, k_factors, -1.0, -1e-12);
  const double gp = solve_half_height(N, c, k_factors, 1e-12, 1.0);
  return report_from(gm, gp);
}

PerturbationMeasures perturbation_measures(TransformKind kind, double N, double c,
                                           int k_factors) {
  const double gamma = std::log(2.0);  // omega = 2 omega0
  const double eps_db = (kind == TransformKind::gabor)
                            ? selectivity_db_gabor(gamma, N)
                            : selectivity_db_causal(gamma, N, c, k_factors, 0.0);
  return {eps_db, 2.0 * eps_db};
}

namespace {

struct ValueAndLogDeriv {
  double value;      // the product magnitude
  double log_deriv;  // d/dgamma of its logarithm
};

// |Psi^| along the band for the difference argument (omega - omega0):
// factors (1 + q_k (1 - e^{-gamma})^2)^{-1/2}.
ValueAndLogDeriv band_R(double N, double c, int layers, double gamma) {
  const double e = std::exp(-gamma);
  const double w = -std::expm1(-gamma);  // 1 - e^{-gamma}
  const double u = w * w;
  const double du = 2.0 * w * e;
  double sum = 0.0, deriv = 0.0;
  for (int k = 1; k <= layers; ++k) {
    const double q = q_factor(N, c, k);
    sum += std::log1p(q * u);
    deriv += q * du / (1.0 + q * u);
  }
  return {std::exp(-0.5 * sum), -0.5 * deriv};
}

// Same for the sum argument (omega + omega0): factors with (1 + e^{-gamma})^2.
ValueAndLogDeriv band_T(double N, double c, int layers, double gamma) {
  const double e = std::exp(-gamma);
  const double v = (1.0 + e) * (1.0 + e);
  const double dv = -2.0 * (1.0 + e) * e;
  double sum = 0.0, deriv = 0.0;
  for (int k = 1; k <= layers; ++k) {
    const double q = q_factor(N, c, k);
    sum += std::log1p(q * v);
    deriv += q * dv / (1.0 + q * v);
  }
  return {std::exp(-0.5 * sum), -0.5 * deriv};
}

}  // namespace

double frequency_offset_bound(double N, double c, int k_factors) {
  if (!(c > 1.0)) throw std::invalid_argument("frequency_offset_bound: c must be > 1");
  // d/dgamma of R^2 + T^2 - 2 C R T, with R' = R Lr and T' = T Lt:
  //   2 (R^2 Lr + T^2 Lt - C R T (Lr + Lt))
  auto objective_deriv = [&](double C, double gamma) {
    const ValueAndLogDeriv r = band_R(N, c, k_factors, gamma);
    const ValueAndLogDeriv t = band_T(N, c, k_factors, gamma);
    return r.value * r.value * r.log_deriv + t.value * t.value * t.log_deriv -
           C * r.value * t.value * (r.log_deriv + t.log_deriv);
  };
  double worst = 0.0;
  for (double C : {-1.0, 1.0}) {
    double a = -1e-3, b = 1e-3;
    double fa = objective_deriv(C, a);
    if (fa * objective_deriv(C, b) > 0.0) {
      throw std::runtime_error("frequency_offset_bound: stationary point not bracketed");
    }
    for (int i = 0; i < 300; ++i) {
      const double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      const double fm = objective_deriv(C, mid);
      if (fa * fm <= 0.0) {
        b = mid;
      } else {
        a = mid;
        fa = fm;
      }
    }
    worst = std::max(worst, std::abs(0.5 * (a + b)));
  }
  return worst;
}

SineModelTerms sine_model_terms(double omega, double omega0, double N, double c, double tol) {
  if (!(omega > 0.0) || !(omega0 > 0.0)) {
    throw std::invalid_argument("sine_model_terms: frequencies must be > 0");
  }
  // tau(omega) = (2 pi N / omega)^2; d_k = c^{-k} sqrt(c^2-1) sqrt(tau)
  const double root_tau = 2.0 * std::numbers::pi * N / omega;
  const double spread = std::sqrt(c * c - 1.0) * root_tau;
  const double nu_minus = omega - omega0;
  const double nu_plus = omega + omega0;
  double log_r = 0.0, log_t = 0.0, arg_r = 0.0, arg_t = 0.0;
  double scale = 1.0 / c;
  for (int k = 1; k <= kMaxFactors; ++k) {
    const double dm = scale * spread * nu_minus;
    const double dp = scale * spread * nu_plus;
    if (std::abs(dm) < tol && std::abs(dp) < tol) break;
    log_r += std::log1p(dm * dm);
    log_t += std::log1p(dp * dp);
    arg_r -= std::atan(dm);
    arg_t -= std::atan(dp);
    scale /= c;
  }
  return {std::exp(-0.5 * log_r), std::exp(-0.5 * log_t), arg_t - arg_r};
}

double sine_spectrogram_model(double t, double omega, double omega0, double N, double c,
                              double tol) {
  const SineModelTerms m = sine_model_terms(omega, omega0, N, c, tol);
  const double osc = std::cos(2.0 * omega0 * t + m.delta_arg);
  const double sq = m.R * m.R + m.T * m.T - 2.0 * m.R * m.T * osc;
  return 0.5 * std::sqrt(std::max(sq, 0.0));
}

}  // namespace tcgabor
