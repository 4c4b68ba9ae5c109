#pragma once

#include "sptucker/config.hpp"
#include "sptucker/tensor.hpp"

namespace sptucker {

/// Stage IV: momentum-accelerated least squares restricted to `omega`,
/// seeded at x0 (projected onto omega on entry). No soft thresholding; each
/// iterate is re-projected onto omega. On exit, entries with magnitude <= tol
/// are zeroed per the output rule.
DenseTensor iterative_postprocess(const DenseTensor& y, const FactorSet& f,
                                  const DenseTensor& x0, const SupportSet& omega,
                                  const RecoveryConfig& cfg);

/// As above but also reports the iteration count and skips nothing.
DenseTensor iterative_postprocess(const DenseTensor& y, const FactorSet& f,
                                  const DenseTensor& x0, const SupportSet& omega,
                                  const RecoveryConfig& cfg, std::size_t& iterations);

/// Matrix-vector baseline: dense least squares on the columns of P^T selected
/// by omega, scattered back onto omega. Guarded by the Kronecker size budget.
DenseTensor kronecker_least_squares(const DenseTensor& y, const FactorSet& f,
                                    const SupportSet& omega,
                                    std::size_t max_entries = kDefaultKroneckerGuard);

}  // namespace sptucker
