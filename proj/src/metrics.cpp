#include "sptucker/metrics.hpp"

namespace sptucker {

double frobenius_error(const DenseTensor& x_true, const DenseTensor& x_hat) {
  if (!x_true.same_shape(x_hat)) throw std::invalid_argument("shape mismatch");
  return (x_true - x_hat).frobenius_norm();
}

SupportScores support_scores(const SupportSet& omega_true, const SupportSet& omega_hat) {
  std::size_t intersection = 0;
  for (std::size_t j : omega_hat.linear()) {
    if (omega_true.contains(j)) ++intersection;
  }

  SupportScores s;
  s.precision = omega_hat.empty()
                    ? 1.0
                    : static_cast<double>(intersection) / static_cast<double>(omega_hat.size());
  s.recall = omega_true.empty()
                 ? 1.0
                 : static_cast<double>(intersection) / static_cast<double>(omega_true.size());
  const double sum = s.precision + s.recall;
  s.f1 = sum > 0.0 ? 2.0 * s.precision * s.recall / sum : 0.0;
  return s;
}

}  // namespace sptucker
