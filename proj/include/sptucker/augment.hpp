#pragma once

#include <utility>

#include "sptucker/config.hpp"
#include "sptucker/tensor.hpp"

namespace sptucker {

/// Stage II cluster detection: indices j with a < |X(j)| < b that have a
/// distinct band-valued neighbor k with Euclidean index distance ||j-k|| < gamma.
/// Isolated band-valued indices are excluded.
SupportSet detect_ambiguous_cluster(const DenseTensor& x, double band_low,
                                    double band_high, double gamma);

/// Union of closed Euclidean balls of radius r around each index, clipped to
/// the index grid of `shape`.
SupportSet dilate_support(const SupportSet& lambda, double r, const Shape& shape);

struct AugmentResult {
  DenseTensor estimate;  // X^Aug
  SupportSet support;    // Omega^Aug
};

/// Stage II augmentation: X^Aug(j) = alpha on lambda_tilde \ omega, X(j)
/// elsewhere; Omega^Aug = omega U lambda_tilde. alpha follows cfg.alpha_policy.
AugmentResult augment_estimate(const DenseTensor& x, const SupportSet& omega,
                               const SupportSet& lambda_tilde, const RecoveryConfig& cfg);

/// Runs detection, dilation, and augmentation in sequence.
AugmentResult augment_support(const DenseTensor& x, const SupportSet& omega,
                              const RecoveryConfig& cfg);

}  // namespace sptucker
