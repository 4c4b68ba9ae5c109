#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "sptucker/config.hpp"
#include "sptucker/metrics.hpp"
#include "sptucker/pipeline.hpp"
#include "sptucker/rng.hpp"
#include "sptucker/tensor.hpp"

namespace sptucker {

/// Synthetic instance description. The benchmark protocol draws support
/// values from N(1, 0.1) and observation noise from N(0, 0.005). Both
/// Gaussian parameters are read as standard deviations by default: under the
/// variance reading the noise norm (~10.5 at J=40, I=28) swamps the signal
/// norm (~3.2 for ten unit spikes) and every recovery method fails, which
/// contradicts the reported benchmark behavior. gaussian_spread_to_std
/// converts from the variance reading when requested.
struct ExperimentSpec {
  Shape core_dims;                                  // J_n
  Shape observed_dims;                              // I_n
  std::size_t support_size = 10;                    // |Omega|
  double support_value_mean = 1.0;
  double support_value_std = 0.1;
  double noise_std = 0.005;
  std::uint64_t seed = 0;
  std::size_t replicates = 20;

  void validate() const;
};

/// Applies the variance-vs-stddev reading of the protocol's N(0, v) figures.
double gaussian_spread_to_std(double value, bool is_variance);

/// Orthonormalization of a standard Gaussian draw (Householder QR with the
/// triangular factor's diagonal forced non-negative, for determinism).
Eigen::MatrixXd random_orthonormal_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// k support indices sampled uniformly without replacement; values
/// mean + std * N(0,1) on the support, zero elsewhere.
std::pair<DenseTensor, SupportSet> random_sparse_core(const Shape& shape, std::size_t k,
                                                      double mean, double stddev, Rng& rng);

/// forward(X) plus i.i.d. Gaussian noise.
DenseTensor observe(const DenseTensor& x, const FactorSet& f, double noise_std, Rng& rng);

struct Instance {
  DenseTensor core;
  SupportSet support;
  FactorSet factors;
  DenseTensor observation;
};

/// Deterministic instance for one replicate: depends only on (spec.seed,
/// replicate). Streams are split as replicate*kStreamsPerReplicate + component
/// (factors=0, support=1, noise=2).
Instance make_instance(const ExperimentSpec& spec, std::size_t replicate);

struct RunMetrics {
  Method method;
  std::size_t replicate = 0;
  double frob_error = 0.0;
  SupportScores scores;
  double wall_time_s = 0.0;
  std::vector<StageStats> stages;
};

/// Runs every requested method on the same per-replicate instance.
std::vector<RunMetrics> run_experiment(const ExperimentSpec& spec,
                                       const std::vector<Method>& methods,
                                       const RecoveryConfig& cfg);

RunMetrics evaluate(const Instance& instance, Method method, const RecoveryConfig& cfg,
                    std::size_t replicate);

}  // namespace sptucker
