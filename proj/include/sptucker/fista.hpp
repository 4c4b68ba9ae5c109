#pragma once

#include <functional>

#include "sptucker/config.hpp"
#include "sptucker/tensor.hpp"

namespace sptucker {

/// Elementwise sign(u) * max(|u| - alpha, 0), the l1 proximal operator.
DenseTensor soft_threshold(const DenseTensor& u, double alpha);

/// ||U||_1 + (lambda/2) * ||Y - forward(U)||_F^2.
double objective(const DenseTensor& u, const DenseTensor& y, const FactorSet& f,
                 double lambda);

/// Indices j with |X(j)| > tol (strict).
SupportSet effective_support(const DenseTensor& x, double tol);

/// Stage I: N-mode FISTA on the l1-regularized least-squares objective.
/// Initializes X_0 = Z_1 = adjoint(Y); per step computes the gradient through
/// the factor operator, soft-thresholds at 1/(lambda*L), and applies the
/// d_t momentum extrapolation. Stops at max_iters or once
/// ||X_t - X_{t-1}||_F < change_tol_rel * ||Y||_F.
RecoveryResult fista_recover(const DenseTensor& y, const FactorSet& f,
                             const RecoveryConfig& cfg);

/// Called after each iteration with (t, X_t); used for iterate-level checks.
using IterateCallback = std::function<void(std::size_t, const DenseTensor&)>;

RecoveryResult fista_recover(const DenseTensor& y, const FactorSet& f,
                             const RecoveryConfig& cfg, const IterateCallback& observer);

}  // namespace sptucker
