#include "tcgabor/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace tcgabor {

void KernelParams::validate() const {
  if (!(tau > 0.0)) throw std::invalid_argument("KernelParams: tau must be > 0");
  if (!(c > 1.0)) throw std::invalid_argument("KernelParams: c must be > 1");
  if (layers < 1) throw std::invalid_argument("KernelParams: layers must be >= 1");
}

std::vector<double> scale_ladder(const KernelParams& p) {
  p.validate();
  std::vector<double> tau(p.layers);
  for (int k = 1; k <= p.layers; ++k) {
    tau[k - 1] = std::pow(p.c, 2.0 * (k - p.layers)) * p.tau;
  }
  return tau;
}

std::vector<double> continuous_time_constants(const KernelParams& p) {
  p.validate();
  const double root_tau = std::sqrt(p.tau);
  std::vector<double> mu(p.layers);
  mu[0] = std::pow(p.c, 1.0 - p.layers) * root_tau;
  const double spread = std::sqrt(p.c * p.c - 1.0);
  for (int k = 2; k <= p.layers; ++k) {
    mu[k - 1] = std::pow(p.c, double(k - p.layers - 1)) * spread * root_tau;
  }
  return mu;
}

double discrete_mu(double delta_tau) {
  if (delta_tau < 0.0) throw std::invalid_argument("discrete_mu: negative scale increment");
  return (std::sqrt(1.0 + 4.0 * delta_tau) - 1.0) / 2.0;
}

std::vector<double> discrete_time_constants(const KernelParams& p) {
  const std::vector<double> ladder = scale_ladder(p);
  std::vector<double> mu(ladder.size());
  double prev = 0.0;
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    mu[k] = discrete_mu(ladder[k] - prev);
    prev = ladder[k];
  }
  return mu;
}

std::complex<double> limit_kernel_fourier(double omega, const KernelParams& p,
                                          double tol, int layers) {
  p.validate();
  const double spread = std::sqrt(p.c * p.c - 1.0) * std::sqrt(p.tau);
  std::complex<double> product(1.0, 0.0);
  double scale = 1.0 / p.c;
  if (layers > 0) {
    for (int k = 1; k <= layers; ++k) {
      product /= std::complex<double>(1.0, scale * spread * omega);
      scale /= p.c;
    }
    return product;
  }
  if (!(tol > 0.0)) throw std::invalid_argument("limit_kernel_fourier: tol must be > 0");
  // |factor - 1| ~ c^{-k} spread |omega|; stop once the remaining factors
  // cannot move the product by more than tol.
  for (int k = 1; k <= 4096; ++k) {
    const double x = scale * spread * omega;
    if (std::abs(x) < tol) break;
    product /= std::complex<double>(1.0, x);
    scale /= p.c;
  }
  return product;
}

DelayEstimates delay_estimates(const KernelParams& p) {
  p.validate();
  const double root_tau = std::sqrt(p.tau);
  const double c = p.c;
  DelayEstimates d;
  d.mean_delay = std::sqrt((c + 1.0) / (c - 1.0)) * root_tau;
  d.max_pos_delay =
      (c + 1.0) * (c + 1.0) * root_tau / (2.0 * std::sqrt(2.0) * std::sqrt((c - 1.0) * c * c * c));
  return d;
}

}  // namespace tcgabor
