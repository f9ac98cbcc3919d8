#include "ails/adapt.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace ails {

void record_and_adjust(HeuristicStats& stats, double observed, double d_ref,
                       int gamma, int n) {
  stats.distance_sum += observed;
  if (++stats.uses < gamma) return;
  double mean = stats.distance_sum / gamma;
  if (mean <= 0.0) mean = 1.0;
  stats.omega =
      std::min(static_cast<double>(n), std::max(1.0, stats.omega * d_ref / mean));
  stats.distance_sum = 0.0;
  stats.uses = 0;
}

int applied_omega(const HeuristicStats& stats, int n) {
  int w = static_cast<int>(std::lround(stats.omega));
  return std::clamp(w, 1, n);
}

AcceptState::AcceptState(int lambda) : lambda_(lambda), window_(lambda) {
  assert(lambda >= 1);
}

void AcceptState::update(double f) {
  ++it_;
  if (it_ <= lambda_) {
    avg_ = (avg_ * static_cast<double>(it_ - 1) + f) / static_cast<double>(it_);
  } else {
    const double inv = 1.0 / static_cast<double>(lambda_);
    avg_ = avg_ * (1.0 - inv) + f * inv;
  }
  window_[head_] = f;
  head_ = (head_ + 1) % lambda_;
  filled_ = std::min(filled_ + 1, lambda_);
}

double AcceptState::low() const {
  assert(filled_ > 0);
  return *std::min_element(window_.begin(), window_.begin() + filled_);
}

double AcceptState::threshold(double eta) const {
  const double lo = low();
  return (1.0 - eta) * lo + eta * avg_;
}

}  // namespace ails
