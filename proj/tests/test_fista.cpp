#include <doctest.h>

#include "helpers.hpp"
#include "sptucker/fista.hpp"

using namespace sptucker;
using sptucker::testing::random_factor_set;
using sptucker::testing::random_tensor;

TEST_CASE("soft threshold examples") {
  DenseTensor u({2}, {1.2, -1.2});
  DenseTensor s = soft_threshold(u, 0.5);
  CHECK(s[0] == doctest::Approx(0.7));
  CHECK(s[1] == doctest::Approx(-0.7));

  CHECK((soft_threshold(u, 0.0) - u).frobenius_norm() == 0.0);

  DenseTensor small({3}, {0.3, -0.2, 0.1});
  CHECK(soft_threshold(small, 0.3).frobenius_norm() == 0.0);

  CHECK_THROWS_AS(soft_threshold(u, -0.1), std::invalid_argument);
}

TEST_CASE("soft threshold is the l1 prox (subgradient check)") {
  Rng rng(30);
  for (int rep = 0; rep < 200; ++rep) {
    DenseTensor u = random_tensor({4, 3}, rng);
    const double alpha = 0.1 + rng.uniform();
    DenseTensor v = soft_threshold(u, alpha);
    // 0 must lie in alpha*sign(v_i) + (v_i - u_i) elementwise
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (v[i] != 0.0) {
        CHECK(std::abs(alpha * (v[i] > 0 ? 1.0 : -1.0) + v[i] - u[i]) <= 1e-12);
      } else {
        CHECK(std::abs(u[i]) <= alpha + 1e-12);
      }
    }
  }
}

TEST_CASE("prox is nonexpansive") {
  Rng rng(31);
  for (int rep = 0; rep < 200; ++rep) {
    DenseTensor u = random_tensor({5, 5}, rng);
    DenseTensor v = random_tensor({5, 5}, rng);
    const double alpha = rng.uniform();
    CHECK((soft_threshold(u, alpha) - soft_threshold(v, alpha)).frobenius_norm() <=
          (u - v).frobenius_norm() + 1e-12);
  }
}

TEST_CASE("objective examples") {
  Rng rng(32);
  FactorSet f = random_factor_set({4, 4, 4}, {3, 3, 3}, rng);
  DenseTensor y = random_tensor({3, 3, 3}, rng);
  const double lambda = 7.0;

  DenseTensor zero({4, 4, 4});
  const double yn = y.frobenius_norm();
  CHECK(objective(zero, y, f, lambda) == doctest::Approx(0.5 * lambda * yn * yn));

  DenseTensor u = random_tensor({4, 4, 4}, rng);
  CHECK(objective(u, f.forward(u), f, lambda) == doctest::Approx(u.l1_norm()));

  // Kronecker oracle comparison
  Eigen::MatrixXd p = kronecker_operator(f);
  Eigen::VectorXd resid = y.vec() - p.transpose() * u.vec();
  const double want = u.vec().lpNorm<1>() + 0.5 * lambda * resid.squaredNorm();
  CHECK(objective(u, y, f, lambda) == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("effective support") {
  DenseTensor zero({3, 3});
  CHECK(effective_support(zero, 0.1).empty());

  DenseTensor dense({2, 2}, {1.0, -2.0, 0.5, 3.0});
  CHECK(effective_support(dense, 0.0).size() == 4);

  DenseTensor boundary({2}, {0.04, 0.06});
  SupportSet s = effective_support(boundary, 0.05);
  CHECK(s.size() == 1);
  CHECK(s.contains(1));
}

TEST_CASE("fista on zero observations returns zero in one pass") {
  Rng rng(33);
  FactorSet f = random_factor_set({4, 4}, {3, 3}, rng);
  RecoveryConfig cfg;
  RecoveryResult r = fista_recover(DenseTensor({3, 3}), f, cfg);
  CHECK(r.estimate.frobenius_norm() == 0.0);
  CHECK(r.support.empty());
  CHECK(r.stages.front().iterations == 1);
}

TEST_CASE("square orthonormal case matches the closed-form prox") {
  Rng rng(34);
  FactorSet f = random_factor_set({5, 5, 5}, {5, 5, 5}, rng);
  DenseTensor x_true({5, 5, 5});
  x_true[3] = 1.0;
  x_true[40] = -0.8;
  DenseTensor y = f.forward(x_true);

  RecoveryConfig cfg;
  cfg.lambda = 100.0;
  cfg.max_iters = 200;
  RecoveryResult r = fista_recover(y, f, cfg);
  // with square orthonormal factors the solution is prox of adjoint(y)
  DenseTensor want = soft_threshold(f.adjoint(y), 1.0 / cfg.lambda);
  CHECK((r.estimate - want).frobenius_norm() <= 1e-8);
  const double bias = 1.0 / (cfg.lambda * cfg.step_constant);
  for (std::size_t i = 0; i < x_true.size(); ++i) {
    CHECK(std::abs(r.estimate[i] - x_true[i]) <= bias + 1e-8);
  }
}

TEST_CASE("tensor-path iterates match the vectorized FISTA twin") {
  Rng rng(35);
  FactorSet f = random_factor_set({4, 4, 4}, {3, 3, 3}, rng);
  DenseTensor x_true({4, 4, 4});
  x_true[5] = 1.1;
  x_true[20] = 0.9;
  x_true[37] = -1.0;
  DenseTensor y = f.forward(x_true);
  for (double& v : y.data()) v += 0.005 * rng.gaussian();

  RecoveryConfig cfg;
  cfg.max_iters = 60;
  cfg.change_tol_rel = 0.0;

  Eigen::MatrixXd p = kronecker_operator(f);
  const auto twin = sptucker::testing::vectorized_fista_iterates(
      p, y.vec(), cfg.lambda, cfg.step_constant, cfg.max_iters);

  std::size_t compared = 0;
  RecoveryResult r = fista_recover(y, f, cfg, [&](std::size_t t, const DenseTensor& x) {
    REQUIRE(t <= twin.size());
    const Eigen::VectorXd& want = twin[t - 1];
    CHECK((x.vec() - want).norm() <= 1e-8 * (1.0 + want.norm()));
    ++compared;
  });
  CHECK(compared == cfg.max_iters);

  // final objective agrees with the twin's
  Eigen::VectorXd resid = y.vec() - p.transpose() * twin.back();
  const double twin_obj = twin.back().lpNorm<1>() + 0.5 * cfg.lambda * resid.squaredNorm();
  CHECK(objective(r.estimate, y, f, cfg.lambda) ==
        doctest::Approx(twin_obj).epsilon(1e-6));
}

TEST_CASE("fixed point property at exact stop") {
  Rng rng(36);
  FactorSet f = random_factor_set({4, 4}, {3, 3}, rng);
  DenseTensor x_true({4, 4});
  x_true[2] = 1.0;
  DenseTensor y = f.forward(x_true);

  RecoveryConfig cfg;
  cfg.max_iters = 5000;
  cfg.change_tol_rel = 0.0;
  RecoveryResult r = fista_recover(y, f, cfg);
  DenseTensor fp = soft_threshold(
      r.estimate - (1.0 / cfg.step_constant) * f.adjoint(f.forward(r.estimate) - y),
      1.0 / (cfg.lambda * cfg.step_constant));
  CHECK((fp - r.estimate).frobenius_norm() <= 1e-8);
}

TEST_CASE("config validation") {
  RecoveryConfig cfg;
  cfg.lambda = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.band_low = 0.6;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  CHECK_NOTHROW(cfg.validate());
}
