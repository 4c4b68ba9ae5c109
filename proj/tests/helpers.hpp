#pragma once

#include <vector>

#include "sptucker/rng.hpp"
#include "sptucker/tensor.hpp"

namespace sptucker::testing {

inline DenseTensor random_tensor(const Shape& shape, Rng& rng, double scale = 1.0) {
  DenseTensor t(shape);
  for (double& v : t.data()) v = scale * rng.gaussian();
  return t;
}

/// Independent mode-n product oracle: plain triple loop over the definition,
/// no unfold/fold machinery.
inline DenseTensor naive_mode_n_product(const DenseTensor& x, const Eigen::MatrixXd& m,
                                        std::size_t mode) {
  Shape out_shape = x.shape();
  out_shape[mode] = static_cast<std::size_t>(m.rows());
  DenseTensor out(out_shape);
  for (std::size_t lin = 0; lin < out.size(); ++lin) {
    auto coords = linear_to_coords(out_shape, lin);
    double acc = 0.0;
    for (std::size_t b = 0; b < x.dim(mode); ++b) {
      auto src = coords;
      src[mode] = b;
      acc += m(static_cast<Eigen::Index>(coords[mode]), static_cast<Eigen::Index>(b)) *
             x.at(src);
    }
    out[lin] = acc;
  }
  return out;
}

/// Vectorized FISTA twin on the matrix-vector reformulation, iteration-for-
/// iteration identical in structure to the tensor path. The sensing matrix is
/// P^T; returns the iterate after each step.
inline std::vector<Eigen::VectorXd> vectorized_fista_iterates(
    const Eigen::MatrixXd& p, const Eigen::VectorXd& y_vec, double lambda, double l,
    std::size_t iters) {
  const Eigen::MatrixXd sense = p.transpose();
  const double prox_alpha = 1.0 / (lambda * l);
  Eigen::VectorXd x_prev = p * y_vec;  // adjoint init
  Eigen::VectorXd z = x_prev;
  double d = 1.0;

  std::vector<Eigen::VectorXd> out;
  out.reserve(iters);
  for (std::size_t t = 0; t < iters; ++t) {
    const Eigen::VectorXd grad = p * (sense * z - y_vec);
    Eigen::VectorXd x = z - (1.0 / l) * grad;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double mag = std::abs(x(i)) - prox_alpha;
      x(i) = mag > 0.0 ? std::copysign(mag, x(i)) : 0.0;
    }
    const double d_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * d * d));
    z = x + ((d - 1.0) / d_next) * (x - x_prev);
    d = d_next;
    x_prev = x;
    out.push_back(x);
  }
  return out;
}

inline FactorSet random_factor_set(const Shape& j_dims, const Shape& i_dims, Rng& rng);

}  // namespace sptucker::testing

#include "sptucker/synthetic.hpp"

namespace sptucker::testing {

inline FactorSet random_factor_set(const Shape& j_dims, const Shape& i_dims, Rng& rng) {
  std::vector<Eigen::MatrixXd> factors;
  for (std::size_t n = 0; n < j_dims.size(); ++n) {
    factors.push_back(random_orthonormal_matrix(j_dims[n], i_dims[n], rng));
  }
  return FactorSet(std::move(factors));
}

}  // namespace sptucker::testing
