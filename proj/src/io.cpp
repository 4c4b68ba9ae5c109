#include "sptucker/io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include <json.hpp>

namespace sptucker {

static_assert(std::endian::native == std::endian::little,
              "DTF-1 writer assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'D', 'T', 'F', '1'};

template <typename T>
void write_raw(std::ofstream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T read_raw(std::ifstream& in) {
  T value;
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw std::runtime_error("truncated DTF-1 file");
  return value;
}

}  // namespace

void write_dtf(const std::filesystem::path& path, const DenseTensor& x) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(kMagic, sizeof(kMagic));
  write_raw(out, static_cast<std::uint32_t>(x.order()));
  for (std::size_t d : x.shape()) write_raw(out, static_cast<std::uint64_t>(d));
  out.write(reinterpret_cast<const char*>(x.data().data()),
            static_cast<std::streamsize>(x.size() * sizeof(double)));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

DenseTensor read_dtf(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  char magic[4];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw std::runtime_error(path.string() + " is not a DTF-1 file");
  }
  const auto order = read_raw<std::uint32_t>(in);
  if (order == 0) throw std::runtime_error("DTF-1 order must be >= 1");
  Shape shape(order);
  for (auto& d : shape) d = static_cast<std::size_t>(read_raw<std::uint64_t>(in));
  std::vector<double> data(shape_size(shape));
  in.read(reinterpret_cast<char*>(data.data()),
          static_cast<std::streamsize>(data.size() * sizeof(double)));
  if (!in) throw std::runtime_error("truncated DTF-1 file: " + path.string());
  return {std::move(shape), std::move(data)};
}

void write_dtf_matrix(const std::filesystem::path& path, const Eigen::MatrixXd& m) {
  std::vector<double> data(static_cast<std::size_t>(m.size()));
  Eigen::Map<Eigen::MatrixXd>(data.data(), m.rows(), m.cols()) = m;
  write_dtf(path, DenseTensor({static_cast<std::size_t>(m.rows()),
                               static_cast<std::size_t>(m.cols())},
                              std::move(data)));
}

Eigen::MatrixXd read_dtf_matrix(const std::filesystem::path& path) {
  const DenseTensor t = read_dtf(path);
  if (t.order() != 2) throw std::runtime_error(path.string() + " is not a matrix");
  return Eigen::Map<const Eigen::MatrixXd>(t.data().data(),
                                           static_cast<Eigen::Index>(t.dim(0)),
                                           static_cast<Eigen::Index>(t.dim(1)));
}

void write_instance(const std::filesystem::path& dir, const Instance& instance,
                    const ExperimentSpec& spec) {
  std::filesystem::create_directories(dir);
  write_dtf(dir / "core.dtf", instance.core);
  write_dtf(dir / "observation.dtf", instance.observation);
  for (std::size_t n = 0; n < instance.factors.order(); ++n) {
    write_dtf_matrix(dir / ("factor_" + std::to_string(n + 1) + ".dtf"),
                     instance.factors.factor(n));
  }

  nlohmann::json sidecar;
  sidecar["format"] = "sptucker-instance-v1";
  sidecar["seed"] = spec.seed;
  sidecar["J"] = spec.core_dims;
  sidecar["I"] = spec.observed_dims;
  sidecar["support_size"] = spec.support_size;
  sidecar["support_value_mean"] = spec.support_value_mean;
  sidecar["support_value_std"] = spec.support_value_std;
  sidecar["noise_std"] = spec.noise_std;
  sidecar["true_support"] = instance.support.tuples();

  std::ofstream out(dir / "instance.json");
  if (!out) throw std::runtime_error("cannot write instance.json");
  out << sidecar.dump(2) << '\n';
}

LoadedInstance read_instance(const std::filesystem::path& dir) {
  std::ifstream in(dir / "instance.json");
  if (!in) throw std::runtime_error("cannot read " + (dir / "instance.json").string());
  nlohmann::json sidecar = nlohmann::json::parse(in);

  ExperimentSpec spec;
  spec.seed = sidecar.at("seed").get<std::uint64_t>();
  spec.core_dims = sidecar.at("J").get<Shape>();
  spec.observed_dims = sidecar.at("I").get<Shape>();
  spec.support_size = sidecar.at("support_size").get<std::size_t>();
  spec.support_value_mean = sidecar.at("support_value_mean").get<double>();
  spec.support_value_std = sidecar.at("support_value_std").get<double>();
  spec.noise_std = sidecar.at("noise_std").get<double>();

  DenseTensor core = read_dtf(dir / "core.dtf");
  DenseTensor observation = read_dtf(dir / "observation.dtf");
  std::vector<Eigen::MatrixXd> factors;
  for (std::size_t n = 0; n < spec.core_dims.size(); ++n) {
    factors.push_back(read_dtf_matrix(dir / ("factor_" + std::to_string(n + 1) + ".dtf")));
  }

  SupportSet support(core.shape());
  for (const auto& tuple : sidecar.at("true_support")) {
    const auto coords = tuple.get<std::vector<std::size_t>>();
    support.insert_coords(coords);
  }

  return {{std::move(core), std::move(support), FactorSet(std::move(factors)),
           std::move(observation)},
          spec};
}

}  // namespace sptucker
