#include "sptucker/fista.hpp"

#include <chrono>
#include <cmath>

namespace sptucker {

void RecoveryConfig::validate() const {
  if (lambda <= 0.0) throw std::invalid_argument("lambda must be positive");
  if (step_constant <= 0.0) throw std::invalid_argument("L must be positive");
  if (tol < 0.0) throw std::invalid_argument("tol must be non-negative");
  if (max_iters == 0) throw std::invalid_argument("max_iters must be positive");
  if (change_tol_rel < 0.0) throw std::invalid_argument("change_tol must be non-negative");
  if (band_low < 0.0 || band_low >= band_high) {
    throw std::invalid_argument("band bounds must satisfy 0 <= a < b");
  }
  if (cluster_radius <= 0.0) throw std::invalid_argument("gamma must be positive");
  if (dilation_radius <= 0.0) throw std::invalid_argument("r must be positive");
  if (prune_window == 0) throw std::invalid_argument("R must be positive");
  if (postprocess_lambda && *postprocess_lambda <= 0.0) {
    throw std::invalid_argument("postprocess lambda must be positive");
  }
}

DenseTensor soft_threshold(const DenseTensor& u, double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("soft threshold requires alpha >= 0");
  DenseTensor out = u;
  for (double& v : out.data()) {
    const double mag = std::abs(v) - alpha;
    v = mag > 0.0 ? std::copysign(mag, v) : 0.0;
  }
  return out;
}

double objective(const DenseTensor& u, const DenseTensor& y, const FactorSet& f,
                 double lambda) {
  const DenseTensor residual = y - f.forward(u);
  const double r = residual.frobenius_norm();
  return u.l1_norm() + 0.5 * lambda * r * r;
}

SupportSet effective_support(const DenseTensor& x, double tol) {
  if (tol < 0.0) throw std::invalid_argument("tol must be non-negative");
  SupportSet s(x.shape());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i]) > tol) s.insert(i);
  }
  return s;
}

RecoveryResult fista_recover(const DenseTensor& y, const FactorSet& f,
                             const RecoveryConfig& cfg) {
  return fista_recover(y, f, cfg, nullptr);
}

RecoveryResult fista_recover(const DenseTensor& y, const FactorSet& f,
                             const RecoveryConfig& cfg, const IterateCallback& observer) {
  cfg.validate();
  if (y.shape() != f.col_dims()) {
    throw std::invalid_argument("observation shape does not match factor column dimensions");
  }
  const auto start = std::chrono::steady_clock::now();

  const double inv_l = 1.0 / cfg.step_constant;
  const double prox_alpha = 1.0 / (cfg.lambda * cfg.step_constant);
  const double change_tol = cfg.change_tol_rel * y.frobenius_norm();

  DenseTensor x_prev = f.adjoint(y);
  DenseTensor z = x_prev;
  double d = 1.0;

  RecoveryResult result;
  std::size_t t = 0;
  while (t < cfg.max_iters) {
    ++t;
    const DenseTensor y_t = f.forward(z);
    DenseTensor x = soft_threshold(z - inv_l * f.adjoint(y_t - y), prox_alpha);
    if (!x.all_finite()) {
      throw NumericalError("non-finite FISTA iterate; step configuration diverges");
    }
    const double d_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * d * d));
    z = x + ((d - 1.0) / d_next) * (x - x_prev);
    d = d_next;

    const double change = (x - x_prev).frobenius_norm();
    x_prev = std::move(x);
    if (observer) observer(t, x_prev);
    if (cfg.record_objective) {
      result.objective_trace.push_back(objective(x_prev, y, f, cfg.lambda));
    }
    if (change <= change_tol) break;
  }

  result.estimate = std::move(x_prev);
  result.support = effective_support(result.estimate, cfg.tol);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.stages.push_back({"fista", t, secs});
  result.total_seconds = secs;
  return result;
}

}  // namespace sptucker
