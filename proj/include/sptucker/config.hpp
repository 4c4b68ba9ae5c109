#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sptucker/tensor.hpp"

namespace sptucker {

/// Sentinel for the pruning window: never prune.
inline constexpr std::size_t kNoPruning = std::numeric_limits<std::size_t>::max();

enum class AlphaPolicy {
  kFixed,            // use alpha_fixed for augmented entries
  kMedianOfSupport,  // median of |X| over the current support, (a+b)/2 fallback
};

/// Scalar parameters for the four-stage recovery. Defaults follow the
/// synthetic benchmark regime: lambda=500, tol=0.05, a=0.05, b=0.5, R=20, L=1.
struct RecoveryConfig {
  double lambda = 500.0;
  double step_constant = 1.0;  // L; valid at 1 since the operator has unit norm
  double tol = 0.05;           // effective-support threshold

  std::size_t max_iters = 500;
  double change_tol_rel = 1e-6;  // stop when ||X_t - X_{t-1}||_F < rel * ||Y||_F

  // Stage II
  double band_low = 0.05;        // a
  double band_high = 0.5;        // b
  double cluster_radius = 2.0;   // gamma
  double dilation_radius = 1.5;  // r
  AlphaPolicy alpha_policy = AlphaPolicy::kMedianOfSupport;
  double alpha_fixed = 0.275;  // (a+b)/2

  // Stage III
  std::size_t prune_window = 20;  // R; kNoPruning disables pruning
  bool warm_start_from_augmented = false;

  // Stage IV. The printed step lambda/L diverges for lambda=500; the default
  // uses a unit step, which is valid for an operator of unit spectral norm.
  // Setting postprocess_lambda recovers the printed lambda/L step.
  std::optional<double> postprocess_lambda;
  std::size_t postprocess_max_iters = 1000;
  double postprocess_change_tol_rel = 1e-10;

  bool record_objective = false;

  double postprocess_step() const {
    return postprocess_lambda ? *postprocess_lambda / step_constant : 1.0;
  }

  void validate() const;
};

struct StageStats {
  std::string name;
  std::size_t iterations = 0;
  double seconds = 0.0;
};

struct RecoveryResult {
  DenseTensor estimate;
  SupportSet support;
  std::vector<StageStats> stages;
  std::vector<double> objective_trace;
  double total_seconds = 0.0;
};

}  // namespace sptucker
