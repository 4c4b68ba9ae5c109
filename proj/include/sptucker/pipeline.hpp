#pragma once

#include <string>

#include "sptucker/config.hpp"
#include "sptucker/tensor.hpp"

namespace sptucker {

enum class Method {
  kFista,      // Stage I only
  kFistaPp,    // Stage I + iterative postprocessing on its effective support
  kFistaMvpp,  // Stage I + Kronecker matrix-vector least squares
  kFourStage,  // Stages I-IV
};

Method parse_method(const std::string& name);
std::string method_name(Method m);

/// Runs Stage I FISTA, Stage II support augmentation, Stage III projected
/// FISTA seeded with the augmented support, and Stage IV iterative
/// postprocessing on Stage III's final support.
RecoveryResult four_stage_recover(const DenseTensor& y, const FactorSet& f,
                                  const RecoveryConfig& cfg);

/// Dispatches one of the four benchmark configurations.
RecoveryResult recover(const DenseTensor& y, const FactorSet& f, const RecoveryConfig& cfg,
                       Method method);

}  // namespace sptucker
