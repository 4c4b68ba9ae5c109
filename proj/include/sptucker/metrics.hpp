#pragma once

#include "sptucker/tensor.hpp"

namespace sptucker {

double frobenius_error(const DenseTensor& x_true, const DenseTensor& x_hat);

struct SupportScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// precision = |intersection| / |omega_hat|, recall = |intersection| / |omega_true|,
/// f1 their harmonic mean. Empty-set conventions: precision = 1 for empty
/// omega_hat, recall = 1 for empty omega_true; f1 follows the resulting pair.
SupportScores support_scores(const SupportSet& omega_true, const SupportSet& omega_hat);

}  // namespace sptucker
