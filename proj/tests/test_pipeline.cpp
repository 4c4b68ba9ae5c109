#include <doctest.h>

#include "helpers.hpp"
#include "sptucker/fista.hpp"
#include "sptucker/io.hpp"
#include "sptucker/pipeline.hpp"
#include "sptucker/postprocess.hpp"

#ifndef SPTUCKER_TEST_DATA_DIR
#error "SPTUCKER_TEST_DATA_DIR must be defined"
#endif

using namespace sptucker;
using sptucker::testing::random_factor_set;

TEST_CASE("method parsing") {
  CHECK(parse_method("fista") == Method::kFista);
  CHECK(parse_method("four_stage") == Method::kFourStage);
  CHECK(method_name(Method::kFistaMvpp) == "fista_mvpp");
  CHECK_THROWS_AS(parse_method("lasso"), std::invalid_argument);
}

TEST_CASE("zero observation gives zero estimate and empty support") {
  Rng rng(90);
  FactorSet f = random_factor_set({5, 5, 5}, {4, 4, 4}, rng);
  RecoveryConfig cfg;
  RecoveryResult r = four_stage_recover(DenseTensor({4, 4, 4}), f, cfg);
  CHECK(r.estimate.frobenius_norm() == 0.0);
  CHECK(r.support.empty());
}

TEST_CASE("dispatch identities") {
  ExperimentSpec spec;
  spec.core_dims = {6, 6, 6};
  spec.observed_dims = {4, 4, 4};
  spec.support_size = 4;
  spec.seed = 3;
  Instance inst = make_instance(spec, 0);
  RecoveryConfig cfg;

  SUBCASE("fista == fista_recover") {
    RecoveryResult a = recover(inst.observation, inst.factors, cfg, Method::kFista);
    RecoveryResult b = fista_recover(inst.observation, inst.factors, cfg);
    CHECK((a.estimate - b.estimate).frobenius_norm() == 0.0);
    CHECK(a.support == b.support);
  }

  SUBCASE("fista_pp == fista then postprocess on its support") {
    RecoveryResult a = recover(inst.observation, inst.factors, cfg, Method::kFistaPp);
    RecoveryResult stage1 = fista_recover(inst.observation, inst.factors, cfg);
    DenseTensor want = iterative_postprocess(inst.observation, inst.factors,
                                             stage1.estimate, stage1.support, cfg);
    CHECK((a.estimate - want).frobenius_norm() == 0.0);
  }

  SUBCASE("fista_mvpp matches fista_pp at the shared optimum") {
    RecoveryResult a = recover(inst.observation, inst.factors, cfg, Method::kFistaPp);
    RecoveryResult b = recover(inst.observation, inst.factors, cfg, Method::kFistaMvpp);
    CHECK((a.estimate - b.estimate).frobenius_norm() <= 1e-6);
  }
}

TEST_CASE("stage timings sum to the reported total") {
  ExperimentSpec spec;
  spec.core_dims = {5, 5, 5};
  spec.observed_dims = {4, 4, 4};
  spec.support_size = 3;
  spec.seed = 13;
  Instance inst = make_instance(spec, 0);

  RecoveryConfig cfg;
  cfg.max_iters = 50;
  RecoveryResult r = four_stage_recover(inst.observation, inst.factors, cfg);
  CHECK(r.stages.size() == 4);
  double sum = 0.0;
  for (const auto& s : r.stages) sum += s.seconds;
  CHECK(r.total_seconds == doctest::Approx(sum));
}

TEST_CASE("determinism of the full pipeline") {
  ExperimentSpec spec;
  spec.core_dims = {6, 6, 6};
  spec.observed_dims = {4, 4, 4};
  spec.support_size = 4;
  spec.seed = 17;
  Instance inst = make_instance(spec, 0);
  RecoveryConfig cfg;

  RecoveryResult a = four_stage_recover(inst.observation, inst.factors, cfg);
  RecoveryResult b = four_stage_recover(inst.observation, inst.factors, cfg);
  for (std::size_t i = 0; i < a.estimate.size(); ++i) {
    CHECK(a.estimate[i] == b.estimate[i]);
  }
}

TEST_CASE("shipped failure fixture: four_stage rescues the missed support") {
  LoadedInstance loaded =
      read_instance(std::filesystem::path(SPTUCKER_TEST_DATA_DIR) / "fig_failure");
  RecoveryConfig cfg;

  RecoveryResult plain =
      recover(loaded.instance.observation, loaded.instance.factors, cfg, Method::kFista);
  RecoveryResult staged = recover(loaded.instance.observation, loaded.instance.factors,
                                  cfg, Method::kFourStage);

  const auto plain_scores = support_scores(loaded.instance.support, plain.support);
  const auto staged_scores = support_scores(loaded.instance.support, staged.support);

  CHECK(plain_scores.recall < 1.0);  // stage I misses true nodes
  CHECK(plain_scores.f1 < 1.0);
  CHECK(staged_scores.f1 == 1.0);
  CHECK(frobenius_error(loaded.instance.core, staged.estimate) <
        frobenius_error(loaded.instance.core, plain.estimate));
}
