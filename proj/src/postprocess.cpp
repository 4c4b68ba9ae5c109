#include "sptucker/postprocess.hpp"

#include <cmath>

namespace sptucker {

DenseTensor iterative_postprocess(const DenseTensor& y, const FactorSet& f,
                                  const DenseTensor& x0, const SupportSet& omega,
                                  const RecoveryConfig& cfg) {
  std::size_t iterations = 0;
  return iterative_postprocess(y, f, x0, omega, cfg, iterations);
}

DenseTensor iterative_postprocess(const DenseTensor& y, const FactorSet& f,
                                  const DenseTensor& x0, const SupportSet& omega,
                                  const RecoveryConfig& cfg, std::size_t& iterations) {
  cfg.validate();
  if (y.shape() != f.col_dims() || x0.shape() != f.row_dims()) {
    throw std::invalid_argument("dimension mismatch in postprocessing inputs");
  }

  const double step = cfg.postprocess_step();
  const double change_tol = cfg.postprocess_change_tol_rel * y.frobenius_norm();

  auto project = [&omega](DenseTensor& t) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (!omega.contains(j)) t[j] = 0.0;
    }
  };

  DenseTensor x_prev = x0;
  project(x_prev);
  DenseTensor z = x_prev;
  double d = 1.0;

  iterations = 0;
  while (iterations < cfg.postprocess_max_iters) {
    ++iterations;
    const DenseTensor y_t = f.forward(z);
    DenseTensor x = z - step * f.adjoint(y_t - y);
    project(x);
    if (!x.all_finite()) {
      throw NumericalError("non-finite postprocessing iterate; step lambda/L too large");
    }

    double d_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * d * d));
    // adaptive restart: drop momentum when it points against the progress
    // direction, restoring a linear rate on the strongly convex restriction
    if ((z.vec() - x.vec()).dot(x.vec() - x_prev.vec()) > 0.0) {
      d = 1.0;
      d_next = 1.0;
    }
    z = x + ((d - 1.0) / d_next) * (x - x_prev);
    d = d_next;

    const double change = (x - x_prev).frobenius_norm();
    x_prev = std::move(x);
    if (change <= change_tol) break;
  }

  // printed output rule: keep only entries strictly above tol
  for (double& v : x_prev.data()) {
    if (std::abs(v) <= cfg.tol) v = 0.0;
  }
  return x_prev;
}

DenseTensor kronecker_least_squares(const DenseTensor& y, const FactorSet& f,
                                    const SupportSet& omega, std::size_t max_entries) {
  if (y.shape() != f.col_dims()) {
    throw std::invalid_argument("observation shape does not match factor column dimensions");
  }
  DenseTensor out(f.row_dims());
  if (omega.empty()) return out;

  const Eigen::MatrixXd p = kronecker_operator(f, max_entries);

  // sensing matrix applied to vec(X) is P^T; extract its omega columns
  Eigen::MatrixXd p_omega(p.cols(), static_cast<Eigen::Index>(omega.size()));
  Eigen::Index col = 0;
  for (std::size_t j : omega.linear()) {
    p_omega.col(col++) = p.row(static_cast<Eigen::Index>(j)).transpose();
  }

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(p_omega);
  const Eigen::VectorXd solution = cod.solve(y.vec());

  col = 0;
  for (std::size_t j : omega.linear()) {
    out[j] = solution(col++);
  }
  return out;
}

}  // namespace sptucker
