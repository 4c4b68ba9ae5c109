#include "sptucker/projected.hpp"

#include <chrono>
#include <cmath>
#include <unordered_map>

namespace sptucker {

RecoveryResult fista_with_projection(const DenseTensor& y, const FactorSet& f,
                                     const SupportSet& omega0, const RecoveryConfig& cfg,
                                     const DenseTensor* warm_start) {
  cfg.validate();
  if (y.shape() != f.col_dims()) {
    throw std::invalid_argument("observation shape does not match factor column dimensions");
  }
  const auto start = std::chrono::steady_clock::now();

  const double inv_l = 1.0 / cfg.step_constant;
  const double prox_alpha = 1.0 / (cfg.lambda * cfg.step_constant);
  const double change_tol = cfg.change_tol_rel * y.frobenius_norm();

  DenseTensor x_prev = f.adjoint(y);
  if (cfg.warm_start_from_augmented && warm_start != nullptr) {
    if (warm_start->shape() != f.row_dims()) {
      throw std::invalid_argument("warm start shape does not match core dimensions");
    }
    x_prev = *warm_start;
  }
  DenseTensor z = x_prev;
  double d = 1.0;

  SupportSet omega = omega0;
  // consecutive below-tol iterations per tracked index; kept only for omega
  std::unordered_map<std::size_t, std::size_t> below_count;

  RecoveryResult result;
  std::size_t t = 0;
  while (t < cfg.max_iters) {
    ++t;
    const DenseTensor y_t = f.forward(z);
    DenseTensor x = soft_threshold(z - inv_l * f.adjoint(y_t - y), prox_alpha);
    if (!x.all_finite()) {
      throw NumericalError("non-finite iterate in projected FISTA");
    }

    omega.unite(effective_support(x, cfg.tol));

    if (cfg.prune_window != kNoPruning) {
      std::vector<std::size_t> pruned;
      for (std::size_t j : omega.linear()) {
        if (std::abs(x[j]) < cfg.tol) {
          const std::size_t count = ++below_count[j];
          if (count >= cfg.prune_window) pruned.push_back(j);
        } else {
          below_count.erase(j);
        }
      }
      for (std::size_t j : pruned) {
        omega.erase(j);
        below_count.erase(j);
      }
    }

    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!omega.contains(j)) x[j] = 0.0;
    }

    const double d_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * d * d));
    z = x + ((d - 1.0) / d_next) * (x - x_prev);
    d = d_next;

    const double change = (x - x_prev).frobenius_norm();
    x_prev = std::move(x);
    if (cfg.record_objective) {
      result.objective_trace.push_back(objective(x_prev, y, f, cfg.lambda));
    }
    if (change <= change_tol) break;
  }

  result.estimate = std::move(x_prev);
  result.support = std::move(omega);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.stages.push_back({"fista_projected", t, secs});
  result.total_seconds = secs;
  return result;
}

}  // namespace sptucker
