#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sptucker/fista.hpp"
#include "sptucker/io.hpp"
#include "sptucker/metrics.hpp"
#include "sptucker/pipeline.hpp"
#include "sptucker/postprocess.hpp"
#include "sptucker/synthetic.hpp"

namespace py = pybind11;
using namespace sptucker;

namespace {

using FArray = py::array_t<double, py::array::f_style | py::array::forcecast>;

DenseTensor to_tensor(const FArray& a) {
  Shape shape(a.ndim());
  for (py::ssize_t d = 0; d < a.ndim(); ++d) {
    shape[static_cast<std::size_t>(d)] = static_cast<std::size_t>(a.shape(d));
  }
  std::vector<double> data(a.data(), a.data() + a.size());
  return DenseTensor(std::move(shape), std::move(data));
}

py::array to_array(const DenseTensor& t) {
  std::vector<py::ssize_t> shape(t.shape().begin(), t.shape().end());
  std::vector<py::ssize_t> strides(shape.size());
  py::ssize_t stride = static_cast<py::ssize_t>(sizeof(double));
  for (std::size_t d = 0; d < shape.size(); ++d) {
    strides[d] = stride;
    stride *= shape[d];
  }
  return py::array(py::dtype::of<double>(), shape, strides, t.data().data());
}

SupportSet to_support(const Shape& shape,
                      const std::vector<std::vector<std::size_t>>& tuples) {
  SupportSet s(shape);
  for (const auto& c : tuples) s.insert_coords(c);
  return s;
}

py::dict result_to_dict(const RecoveryResult& r) {
  py::dict out;
  out["estimate"] = to_array(r.estimate);
  out["support"] = r.support.tuples();
  py::list stages;
  for (const auto& s : r.stages) {
    py::dict d;
    d["name"] = s.name;
    d["iterations"] = s.iterations;
    d["seconds"] = s.seconds;
    stages.append(d);
  }
  out["stages"] = stages;
  out["total_seconds"] = r.total_seconds;
  return out;
}

}  // namespace

PYBIND11_MODULE(_sptucker, m) {
  m.doc() = "Sparse Tucker tensor recovery (core bindings)";

  py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_RuntimeError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<RecoveryConfig>(m, "RecoveryConfig")
      .def(py::init<>())
      .def_readwrite("lam", &RecoveryConfig::lambda)
      .def_readwrite("step_constant", &RecoveryConfig::step_constant)
      .def_readwrite("tol", &RecoveryConfig::tol)
      .def_readwrite("max_iters", &RecoveryConfig::max_iters)
      .def_readwrite("change_tol_rel", &RecoveryConfig::change_tol_rel)
      .def_readwrite("band_low", &RecoveryConfig::band_low)
      .def_readwrite("band_high", &RecoveryConfig::band_high)
      .def_readwrite("cluster_radius", &RecoveryConfig::cluster_radius)
      .def_readwrite("dilation_radius", &RecoveryConfig::dilation_radius)
      .def_readwrite("alpha_fixed", &RecoveryConfig::alpha_fixed)
      .def_readwrite("prune_window", &RecoveryConfig::prune_window)
      .def_readwrite("warm_start_from_augmented",
                     &RecoveryConfig::warm_start_from_augmented)
      .def_readwrite("postprocess_lambda", &RecoveryConfig::postprocess_lambda)
      .def_readwrite("postprocess_max_iters", &RecoveryConfig::postprocess_max_iters)
      .def_readwrite("postprocess_change_tol_rel",
                     &RecoveryConfig::postprocess_change_tol_rel)
      .def("validate", &RecoveryConfig::validate);

  py::class_<FactorSet>(m, "FactorSet")
      .def(py::init<std::vector<Eigen::MatrixXd>>(), py::arg("factors"))
      .def_property_readonly("order", &FactorSet::order)
      .def("factor", &FactorSet::factor, py::arg("n"))
      .def("row_dims", &FactorSet::row_dims)
      .def("col_dims", &FactorSet::col_dims)
      .def("operator_storage", &FactorSet::operator_storage)
      .def("forward",
           [](const FactorSet& f, const FArray& x) { return to_array(f.forward(to_tensor(x))); },
           py::arg("x"))
      .def("adjoint",
           [](const FactorSet& f, const FArray& y) { return to_array(f.adjoint(to_tensor(y))); },
           py::arg("y"));

  m.def("kronecker_operator",
        [](const FactorSet& f, std::size_t max_entries) {
          return kronecker_operator(f, max_entries);
        },
        py::arg("factors"), py::arg("max_entries") = kDefaultKroneckerGuard);

  m.def("soft_threshold",
        [](const FArray& x, double threshold) {
          return to_array(soft_threshold(to_tensor(x), threshold));
        },
        py::arg("x"), py::arg("threshold"));

  m.def("mode_n_product",
        [](const FArray& x, const Eigen::MatrixXd& mat, std::size_t mode) {
          return to_array(mode_n_product(to_tensor(x), mat, mode));
        },
        py::arg("x"), py::arg("matrix"), py::arg("mode"));

  m.def("recover",
        [](const FArray& y, const FactorSet& f, const std::string& method,
           const RecoveryConfig& cfg) {
          return result_to_dict(recover(to_tensor(y), f, cfg, parse_method(method)));
        },
        py::arg("y"), py::arg("factors"), py::arg("method") = "four_stage",
        py::arg("config") = RecoveryConfig{});

  m.def("postprocess",
        [](const FArray& y, const FactorSet& f, const FArray& x0,
           const std::vector<std::vector<std::size_t>>& support,
           const RecoveryConfig& cfg) {
          DenseTensor x = to_tensor(x0);
          return to_array(
              iterative_postprocess(to_tensor(y), f, x, to_support(x.shape(), support), cfg));
        },
        py::arg("y"), py::arg("factors"), py::arg("x0"), py::arg("support"),
        py::arg("config") = RecoveryConfig{});

  m.def("make_instance",
        [](const Shape& core_dims, const Shape& observed_dims, std::size_t support_size,
           std::uint64_t seed, std::size_t replicate, double value_mean, double value_std,
           double noise_std) {
          ExperimentSpec spec;
          spec.core_dims = core_dims;
          spec.observed_dims = observed_dims;
          spec.support_size = support_size;
          spec.seed = seed;
          spec.support_value_mean = value_mean;
          spec.support_value_std = value_std;
          spec.noise_std = noise_std;
          const Instance inst = make_instance(spec, replicate);
          py::dict out;
          out["core"] = to_array(inst.core);
          out["observation"] = to_array(inst.observation);
          out["factors"] = inst.factors;
          out["support"] = inst.support.tuples();
          return out;
        },
        py::arg("core_dims"), py::arg("observed_dims"), py::arg("support_size") = 10,
        py::arg("seed") = 0, py::arg("replicate") = 0, py::arg("value_mean") = 1.0,
        py::arg("value_std") = 0.1, py::arg("noise_std") = 0.005);

  m.def("frobenius_error",
        [](const FArray& a, const FArray& b) {
          return frobenius_error(to_tensor(a), to_tensor(b));
        },
        py::arg("truth"), py::arg("estimate"));

  m.def("support_scores",
        [](const Shape& shape, const std::vector<std::vector<std::size_t>>& truth,
           const std::vector<std::vector<std::size_t>>& estimate) {
          const SupportScores s =
              support_scores(to_support(shape, truth), to_support(shape, estimate));
          py::dict out;
          out["precision"] = s.precision;
          out["recall"] = s.recall;
          out["f1"] = s.f1;
          return out;
        },
        py::arg("shape"), py::arg("truth"), py::arg("estimate"));

  m.def("read_dtf",
        [](const std::string& path) { return to_array(read_dtf(path)); },
        py::arg("path"));
  m.def("write_dtf",
        [](const std::string& path, const FArray& x) { write_dtf(path, to_tensor(x)); },
        py::arg("path"), py::arg("x"));
}
