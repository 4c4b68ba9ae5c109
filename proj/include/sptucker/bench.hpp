#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sptucker/config.hpp"
#include "sptucker/pipeline.hpp"
#include "sptucker/synthetic.hpp"

namespace sptucker {

struct BenchSpec {
  std::vector<std::size_t> j_values;       // per sweep point, cubic shape J x J x J
  double ratio = 0.68;                     // I = round(ratio * J) unless overridden
  std::optional<std::size_t> explicit_i;   // fixed I for every sweep point
  std::size_t order = 3;
  std::size_t replicates = 20;
  std::size_t support_size = 10;
  double support_value_mean = 1.0;
  double support_value_std = 0.0;          // 0 means "use protocol default"
  double noise_std = 0.0;                  // 0 means "use protocol default"
  std::uint64_t seed = 0;
  std::vector<Method> methods = {Method::kFourStage};
  std::size_t threads = 1;
  bool deterministic = true;  // blanks timing columns for byte-stable output
};

struct BenchRow {
  std::size_t j = 0;
  std::size_t i = 0;
  Method method = Method::kFista;
  std::size_t replicates = 0;
  double frob_error_mean = 0.0;
  double frob_error_std = 0.0;
  double time_s_mean = 0.0;
  double time_s_std = 0.0;
  double support_f1_mean = 0.0;
};

std::size_t rounded_observed_dim(std::size_t j, double ratio);

/// Runs the sweep; rows are sorted by (J, method name) regardless of
/// execution order. Replicates may run on a worker pool.
std::vector<BenchRow> run_bench(const BenchSpec& spec, const RecoveryConfig& cfg);

inline constexpr const char* kBenchCsvSchema = "sptucker-bench-v1";

/// Stable CSV emission: fixed column order, shortest round-trip float
/// formatting, rows ordered by (J, method).
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace sptucker
