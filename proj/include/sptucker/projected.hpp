#pragma once

#include <optional>

#include "sptucker/config.hpp"
#include "sptucker/fista.hpp"
#include "sptucker/tensor.hpp"

namespace sptucker {

/// Stage III: FISTA with per-iteration support bookkeeping. The working
/// support starts at omega0, each iteration unions in the effective support of
/// the unprojected iterate, drops indices that stayed below tol for
/// cfg.prune_window consecutive iterations, and zeroes the complement before
/// the momentum update. cfg.warm_start_from_augmented seeds Z_1 with
/// `warm_start` instead of adjoint(Y).
RecoveryResult fista_with_projection(const DenseTensor& y, const FactorSet& f,
                                     const SupportSet& omega0, const RecoveryConfig& cfg,
                                     const DenseTensor* warm_start = nullptr);

}  // namespace sptucker
