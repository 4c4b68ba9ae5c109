#include "sptucker/synthetic.hpp"

#include <algorithm>

namespace sptucker {

namespace {
constexpr std::uint64_t kStreamsPerReplicate = 16;
constexpr std::uint64_t kFactorStream = 0;
constexpr std::uint64_t kSupportStream = 1;
constexpr std::uint64_t kNoiseStream = 2;
}  // namespace

void ExperimentSpec::validate() const {
  if (core_dims.empty() || core_dims.size() != observed_dims.size()) {
    throw std::invalid_argument("core and observed dimension lists must match in length");
  }
  for (std::size_t n = 0; n < core_dims.size(); ++n) {
    if (core_dims[n] == 0 || observed_dims[n] == 0) {
      throw std::invalid_argument("dimensions must be positive");
    }
    if (observed_dims[n] > core_dims[n]) {
      throw std::invalid_argument("I exceeds J at mode " + std::to_string(n + 1));
    }
  }
  if (support_size > shape_size(core_dims)) {
    throw std::invalid_argument("support size exceeds tensor size");
  }
  if (support_value_std < 0.0 || noise_std < 0.0) {
    throw std::invalid_argument("standard deviations must be non-negative");
  }
}

double gaussian_spread_to_std(double value, bool is_variance) {
  if (value < 0.0) throw std::invalid_argument("spread must be non-negative");
  return is_variance ? std::sqrt(value) : value;
}

Eigen::MatrixXd random_orthonormal_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  if (cols > rows) throw std::invalid_argument("I exceeds J");
  Eigen::MatrixXd g(rows, cols);
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      g(i, j) = rng.gaussian();
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(g.rows(), g.cols());
  const Eigen::MatrixXd r = qr.matrixQR().topRows(g.cols());
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

std::pair<DenseTensor, SupportSet> random_sparse_core(const Shape& shape, std::size_t k,
                                                      double mean, double stddev,
                                                      Rng& rng) {
  const std::size_t total = shape_size(shape);
  if (k > total) throw std::invalid_argument("support size exceeds tensor size");

  // Floyd's sampling: k distinct indices, draw order independent of k..total gap
  SupportSet support(shape);
  for (std::size_t i = total - k; i < total; ++i) {
    const std::size_t candidate = rng.below(i + 1);
    if (support.contains(candidate)) {
      support.insert(i);
    } else {
      support.insert(candidate);
    }
  }

  DenseTensor core(shape);
  for (std::size_t j : support.linear()) {
    core[j] = rng.gaussian(mean, stddev);
  }
  return {std::move(core), std::move(support)};
}

DenseTensor observe(const DenseTensor& x, const FactorSet& f, double noise_std, Rng& rng) {
  DenseTensor y = f.forward(x);
  if (noise_std > 0.0) {
    for (double& v : y.data()) v += rng.gaussian(0.0, noise_std);
  }
  return y;
}

Instance make_instance(const ExperimentSpec& spec, std::size_t replicate) {
  spec.validate();
  const std::uint64_t base = replicate * kStreamsPerReplicate;

  Rng factor_rng(spec.seed, base + kFactorStream);
  std::vector<Eigen::MatrixXd> factors;
  factors.reserve(spec.core_dims.size());
  for (std::size_t n = 0; n < spec.core_dims.size(); ++n) {
    factors.push_back(
        random_orthonormal_matrix(spec.core_dims[n], spec.observed_dims[n], factor_rng));
  }
  FactorSet factor_set(std::move(factors));

  Rng support_rng(spec.seed, base + kSupportStream);
  auto [core, support] =
      random_sparse_core(spec.core_dims, spec.support_size, spec.support_value_mean,
                         spec.support_value_std, support_rng);

  Rng noise_rng(spec.seed, base + kNoiseStream);
  DenseTensor observation = observe(core, factor_set, spec.noise_std, noise_rng);

  return {std::move(core), std::move(support), std::move(factor_set),
          std::move(observation)};
}

RunMetrics evaluate(const Instance& instance, Method method, const RecoveryConfig& cfg,
                    std::size_t replicate) {
  const RecoveryResult result =
      recover(instance.observation, instance.factors, cfg, method);
  RunMetrics m;
  m.method = method;
  m.replicate = replicate;
  m.frob_error = frobenius_error(instance.core, result.estimate);
  m.scores = support_scores(instance.support, result.support);
  m.wall_time_s = result.total_seconds;
  m.stages = result.stages;
  return m;
}

std::vector<RunMetrics> run_experiment(const ExperimentSpec& spec,
                                       const std::vector<Method>& methods,
                                       const RecoveryConfig& cfg) {
  spec.validate();
  std::vector<RunMetrics> rows;
  rows.reserve(spec.replicates * methods.size());
  for (std::size_t rep = 0; rep < spec.replicates; ++rep) {
    const Instance instance = make_instance(spec, rep);
    for (Method method : methods) {
      rows.push_back(evaluate(instance, method, cfg, rep));
    }
  }
  return rows;
}

}  // namespace sptucker
