#include "tcgabor/cascade.hpp"

#include <stdexcept>

namespace tcgabor {

CascadeState::CascadeState(std::vector<double> mu) : mu_(std::move(mu)) {
  if (mu_.empty()) throw std::invalid_argument("CascadeState: needs at least one layer");
  alpha_.reserve(mu_.size());
  for (double m : mu_) {
    if (m < 0.0) throw std::invalid_argument("CascadeState: mu must be >= 0");
    alpha_.push_back(1.0 / (1.0 + m));
  }
  level_.assign(mu_.size(), 0.0);
}

double CascadeState::step(double input) {
  double in = input;
  for (std::size_t k = 0; k < level_.size(); ++k) {
    level_[k] = level_[k] + (in - level_[k]) * alpha_[k];
    in = level_[k];
  }
  return in;
}

void CascadeState::reset(double value) { level_.assign(level_.size(), value); }

std::vector<double> run_batch(const std::vector<double>& mu, std::span<const double> signal,
                              InitPolicy init) {
  if (signal.empty()) throw std::invalid_argument("run_batch: empty signal");
  CascadeState state(mu);
  if (init == InitPolicy::first_sample) state.reset(signal[0]);
  std::vector<double> out(signal.size());
  for (std::size_t n = 0; n < signal.size(); ++n) out[n] = state.step(signal[n]);
  return out;
}

int sign_changes(std::span<const double> signal) {
  int count = 0;
  int last = 0;
  for (double v : signal) {
    const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace tcgabor
