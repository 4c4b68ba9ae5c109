#pragma once

#include <filesystem>

#include "sptucker/synthetic.hpp"
#include "sptucker/tensor.hpp"

namespace sptucker {

/// DTF-1 binary tensor format: magic "DTF1", u32 order, order x u64 dims,
/// then prod(dims) doubles in mode-1-fastest order, all little-endian.
/// Matrices are stored as order-2 tensors.
void write_dtf(const std::filesystem::path& path, const DenseTensor& x);
DenseTensor read_dtf(const std::filesystem::path& path);

void write_dtf_matrix(const std::filesystem::path& path, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_dtf_matrix(const std::filesystem::path& path);

/// Writes core.dtf, factor_<n>.dtf, observation.dtf and instance.json (seed,
/// spec, true support as index tuples) into `dir`.
void write_instance(const std::filesystem::path& dir, const Instance& instance,
                    const ExperimentSpec& spec);

struct LoadedInstance {
  Instance instance;
  ExperimentSpec spec;
};

LoadedInstance read_instance(const std::filesystem::path& dir);

}  // namespace sptucker
