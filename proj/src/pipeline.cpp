#include "sptucker/pipeline.hpp"

#include <chrono>
#include <cmath>

#include "sptucker/augment.hpp"
#include "sptucker/fista.hpp"
#include "sptucker/postprocess.hpp"
#include "sptucker/projected.hpp"

namespace sptucker {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

RecoveryResult postprocess_result(RecoveryResult base, const DenseTensor& y,
                                  const FactorSet& f, const RecoveryConfig& cfg,
                                  bool matrix_vector) {
  const auto start = Clock::now();
  std::size_t iters = 0;
  DenseTensor polished =
      matrix_vector ? kronecker_least_squares(y, f, base.support)
                    : iterative_postprocess(y, f, base.estimate, base.support, cfg, iters);
  if (matrix_vector) {
    // same output rule as the iterative path
    for (double& v : polished.data()) {
      if (std::abs(v) <= cfg.tol) v = 0.0;
    }
  }
  const double secs = seconds_since(start);
  base.estimate = std::move(polished);
  base.support = effective_support(base.estimate, cfg.tol);
  base.stages.push_back({matrix_vector ? "mv_postprocess" : "postprocess", iters, secs});
  base.total_seconds += secs;
  return base;
}

}  // namespace

Method parse_method(const std::string& name) {
  if (name == "fista") return Method::kFista;
  if (name == "fista_pp") return Method::kFistaPp;
  if (name == "fista_mvpp") return Method::kFistaMvpp;
  if (name == "four_stage") return Method::kFourStage;
  throw std::invalid_argument("unknown method: " + name);
}

std::string method_name(Method m) {
  switch (m) {
    case Method::kFista: return "fista";
    case Method::kFistaPp: return "fista_pp";
    case Method::kFistaMvpp: return "fista_mvpp";
    case Method::kFourStage: return "four_stage";
  }
  throw std::invalid_argument("invalid method value");
}

RecoveryResult four_stage_recover(const DenseTensor& y, const FactorSet& f,
                                  const RecoveryConfig& cfg) {
  RecoveryResult result = fista_recover(y, f, cfg);
  result.stages.front().name = "stage1_fista";

  auto start = Clock::now();
  const AugmentResult augmented = augment_support(result.estimate, result.support, cfg);
  result.stages.push_back({"stage2_augment", 1, seconds_since(start)});

  RecoveryResult projected = fista_with_projection(
      y, f, augmented.support, cfg,
      cfg.warm_start_from_augmented ? &augmented.estimate : nullptr);
  projected.stages.front().name = "stage3_projected_fista";
  result.stages.push_back(projected.stages.front());

  start = Clock::now();
  std::size_t pp_iters = 0;
  result.estimate = iterative_postprocess(y, f, projected.estimate, projected.support,
                                          cfg, pp_iters);
  result.stages.push_back({"stage4_postprocess", pp_iters, seconds_since(start)});

  result.support = effective_support(result.estimate, cfg.tol);
  result.total_seconds = 0.0;
  for (const auto& s : result.stages) result.total_seconds += s.seconds;
  if (cfg.record_objective) {
    result.objective_trace.insert(result.objective_trace.end(),
                                  projected.objective_trace.begin(),
                                  projected.objective_trace.end());
  }
  return result;
}

RecoveryResult recover(const DenseTensor& y, const FactorSet& f, const RecoveryConfig& cfg,
                       Method method) {
  switch (method) {
    case Method::kFista:
      return fista_recover(y, f, cfg);
    case Method::kFistaPp:
      return postprocess_result(fista_recover(y, f, cfg), y, f, cfg, false);
    case Method::kFistaMvpp:
      return postprocess_result(fista_recover(y, f, cfg), y, f, cfg, true);
    case Method::kFourStage:
      return four_stage_recover(y, f, cfg);
  }
  throw std::invalid_argument("invalid method value");
}

}  // namespace sptucker
