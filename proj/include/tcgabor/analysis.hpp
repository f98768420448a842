#pragma once

#include <span>
#include <vector>

namespace tcgabor {

enum class TransformKind { gabor, time_causal };

/// All closed forms below parameterize the analysis frequency as
/// omega = omega0 e^gamma and tie the window scale to the wavelength,
/// sigma(omega) = 2 pi N / omega, so they depend only on gamma, N and (for
/// the time-causal kind) the scale ratio c.

/// Selectivity R_dB of the non-causal transform:
/// -(40 pi^2 N^2 / ln 10) (1 - e^{-gamma})^2.
double selectivity_db_gabor(double gamma, double N);

/// Selectivity R_dB of the time-causal transform. layers > 0 truncates the
/// product after that many factors (the tabulated analyses use 8); layers <= 0
/// truncates adaptively at `tol`.
double selectivity_db_causal(double gamma, double N, double c, int layers = 0,
                             double tol = 1e-14);

struct SelectivityCurve {
  std::vector<double> omega_ratio;  ///< omega / omega0 = e^gamma
  std::vector<double> values_db;    ///< 0 dB at the peak, non-positive
  TransformKind kind;
  double N = 0.0;
  double c = 0.0;  ///< time-causal only
};

SelectivityCurve selectivity_gabor(std::span<const double> gamma_grid, double N);
SelectivityCurve selectivity_causal(std::span<const double> gamma_grid, double N, double c,
                                    double tol = 1e-14);

/// Half-height points of the selectivity curve in log-frequency units.
struct BandWidthReport {
  double gamma_minus;
  double gamma_plus;
  double delta_gamma;       ///< gamma_plus - gamma_minus
  double omega_ratio_minus; ///< e^{gamma_minus}
  double omega_ratio_plus;  ///< e^{gamma_plus}
};

/// Solves R = 1/2 on each side of the peak; bisection over gamma in [-1, 1]
/// for the time-causal kind (monotonicity is verified first), closed-form
/// exponential equation for the Gabor kind. Throws on a missing bracket.
BandWidthReport band_width(TransformKind kind, double N, double c, int k_factors = 8);

/// Relative size of the oscillatory spectrogram term at the band center,
/// read off the selectivity curve at omega = 2 omega0, plus the squared
/// measure for the non-oscillatory remainder (b_dB = 2 epsilon_dB).
struct PerturbationMeasures {
  double epsilon_db;
  double b_db;
};
PerturbationMeasures perturbation_measures(TransformKind kind, double N, double c,
                                           int k_factors = 8);

/// Largest magnitude of the stationary point gamma^ of the closed-form
/// squared spectrogram of an ideal sine, maximized over gamma separately for
/// the two extremes C = -1 and C = +1 of its time factor. The objective is
/// flat below double precision near the peak, so the maximizer runs as
/// bisection on the analytic gamma-derivative, giving full relative accuracy
/// even for offsets near 1e-14.
double frequency_offset_bound(double N, double c, int k_factors = 8);

/// Magnitude and relative phase pieces of the ideal-sine spectrogram model.
struct SineModelTerms {
  double R;          ///< |Psi^(omega - omega0; tau(omega))|
  double T;          ///< |Psi^(omega + omega0; tau(omega))|
  double delta_arg;  ///< arg Psi^(omega + omega0) - arg Psi^(omega - omega0)
};
SineModelTerms sine_model_terms(double omega, double omega0, double N, double c,
                                double tol = 1e-14);

/// Closed-form spectrogram magnitude of sin(omega0 t):
///   (1/2) sqrt(R^2 + T^2 - 2 R T cos(2 omega0 t + delta_arg)).
double sine_spectrogram_model(double t, double omega, double omega0, double N, double c,
                              double tol = 1e-14);

}  // namespace tcgabor
