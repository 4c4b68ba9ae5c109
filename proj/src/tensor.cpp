#include "sptucker/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sptucker {

std::size_t shape_size(const Shape& shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) n *= d;
  return n;
}

std::size_t coords_to_linear(const Shape& shape, std::span<const std::size_t> coords) {
  if (coords.size() != shape.size()) {
    throw std::invalid_argument("index tuple order does not match tensor order");
  }
  std::size_t linear = 0;
  std::size_t stride = 1;
  for (std::size_t n = 0; n < shape.size(); ++n) {
    if (coords[n] >= shape[n]) throw std::out_of_range("index out of bounds");
    linear += coords[n] * stride;
    stride *= shape[n];
  }
  return linear;
}

std::vector<std::size_t> linear_to_coords(const Shape& shape, std::size_t linear) {
  std::vector<std::size_t> coords(shape.size());
  for (std::size_t n = 0; n < shape.size(); ++n) {
    coords[n] = linear % shape[n];
    linear /= shape[n];
  }
  return coords;
}

DenseTensor::DenseTensor(Shape shape) : shape_(std::move(shape)) {
  if (shape_.empty()) throw std::invalid_argument("tensor order must be >= 1");
  for (std::size_t d : shape_) {
    if (d == 0) throw std::invalid_argument("tensor dimensions must be >= 1");
  }
  data_.assign(shape_size(shape_), 0.0);
}

DenseTensor::DenseTensor(Shape shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (shape_.empty()) throw std::invalid_argument("tensor order must be >= 1");
  for (std::size_t d : shape_) {
    if (d == 0) throw std::invalid_argument("tensor dimensions must be >= 1");
  }
  if (data_.size() != shape_size(shape_)) {
    throw std::invalid_argument("data length does not match shape");
  }
}

double DenseTensor::frobenius_norm() const {
  double acc = 0.0;
  for (double v : data_) acc += v * v;
  return std::sqrt(acc);
}

double DenseTensor::l1_norm() const {
  double acc = 0.0;
  for (double v : data_) acc += std::abs(v);
  return acc;
}

double DenseTensor::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool DenseTensor::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

DenseTensor& DenseTensor::operator+=(const DenseTensor& rhs) {
  if (!same_shape(rhs)) throw std::invalid_argument("shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

DenseTensor& DenseTensor::operator-=(const DenseTensor& rhs) {
  if (!same_shape(rhs)) throw std::invalid_argument("shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

DenseTensor& DenseTensor::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

Eigen::MatrixXd mode_n_unfold(const DenseTensor& x, std::size_t mode) {
  const Shape& shape = x.shape();
  if (mode >= shape.size()) throw std::invalid_argument("mode index out of range");
  const std::size_t rows = shape[mode];
  const std::size_t cols = x.size() / rows;

  std::size_t stride = 1;
  for (std::size_t n = 0; n < mode; ++n) stride *= shape[n];
  const std::size_t block = stride * rows;
  const std::size_t outer_count = x.size() / block;

  Eigen::MatrixXd m(rows, cols);
  const auto data = x.data();
  for (std::size_t outer = 0; outer < outer_count; ++outer) {
    for (std::size_t j = 0; j < rows; ++j) {
      const std::size_t src = outer * block + j * stride;
      const std::size_t dst_col = outer * stride;
      for (std::size_t inner = 0; inner < stride; ++inner) {
        m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(dst_col + inner)) =
            data[src + inner];
      }
    }
  }
  return m;
}

DenseTensor mode_n_fold(const Eigen::MatrixXd& m, std::size_t mode, const Shape& shape) {
  if (mode >= shape.size()) throw std::invalid_argument("mode index out of range");
  const std::size_t rows = shape[mode];
  const std::size_t total = shape_size(shape);
  if (static_cast<std::size_t>(m.rows()) != rows ||
      static_cast<std::size_t>(m.cols()) != total / rows) {
    throw std::invalid_argument("matrix dimensions inconsistent with shape and mode");
  }

  std::size_t stride = 1;
  for (std::size_t n = 0; n < mode; ++n) stride *= shape[n];
  const std::size_t block = stride * rows;
  const std::size_t outer_count = total / block;

  DenseTensor x(shape);
  auto data = x.data();
  for (std::size_t outer = 0; outer < outer_count; ++outer) {
    for (std::size_t j = 0; j < rows; ++j) {
      const std::size_t dst = outer * block + j * stride;
      const std::size_t src_col = outer * stride;
      for (std::size_t inner = 0; inner < stride; ++inner) {
        data[dst + inner] =
            m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(src_col + inner));
      }
    }
  }
  return x;
}

DenseTensor mode_n_product(const DenseTensor& x, const Eigen::MatrixXd& m, std::size_t mode) {
  if (mode >= x.order()) throw std::invalid_argument("mode index out of range");
  if (static_cast<std::size_t>(m.cols()) != x.dim(mode)) {
    throw std::invalid_argument("matrix column count does not match mode dimension");
  }
  Shape out_shape = x.shape();
  out_shape[mode] = static_cast<std::size_t>(m.rows());
  Eigen::MatrixXd product = m * mode_n_unfold(x, mode);
  return mode_n_fold(product, mode, out_shape);
}

void SupportSet::insert(std::size_t linear) {
  if (linear >= shape_size(shape_)) throw std::out_of_range("index out of bounds");
  indices_.insert(linear);
}

std::vector<std::vector<std::size_t>> SupportSet::tuples() const {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(indices_.size());
  for (std::size_t linear : indices_) out.push_back(linear_to_coords(shape_, linear));
  return out;
}

void SupportSet::unite(const SupportSet& other) {
  if (!other.empty() && other.shape_ != shape_) {
    throw std::invalid_argument("support sets have different shapes");
  }
  indices_.insert(other.indices_.begin(), other.indices_.end());
}

bool is_subset(const SupportSet& a, const SupportSet& b) {
  return std::includes(b.linear().begin(), b.linear().end(), a.linear().begin(),
                       a.linear().end());
}

SupportSet set_union(const SupportSet& a, const SupportSet& b) {
  SupportSet out = a;
  out.unite(b);
  return out;
}

SupportSet set_intersection(const SupportSet& a, const SupportSet& b) {
  SupportSet out(a.shape());
  for (std::size_t i : a.linear()) {
    if (b.contains(i)) out.insert(i);
  }
  return out;
}

SupportSet set_difference(const SupportSet& a, const SupportSet& b) {
  SupportSet out(a.shape());
  for (std::size_t i : a.linear()) {
    if (!b.contains(i)) out.insert(i);
  }
  return out;
}

namespace {
constexpr double kOrthonormalityTol = 1e-10;
}

FactorSet::FactorSet(std::vector<Eigen::MatrixXd> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("factor set must be non-empty");
  for (const auto& a : factors_) {
    if (a.rows() < a.cols()) {
      throw std::invalid_argument("factor matrix must have at least as many rows as columns");
    }
    const Eigen::MatrixXd gram = a.transpose() * a;
    const double err =
        (gram - Eigen::MatrixXd::Identity(a.cols(), a.cols())).norm();
    if (err > kOrthonormalityTol) {
      throw std::invalid_argument("factor matrix columns are not orthonormal");
    }
  }
}

Shape FactorSet::row_dims() const {
  Shape j(factors_.size());
  for (std::size_t n = 0; n < factors_.size(); ++n) {
    j[n] = static_cast<std::size_t>(factors_[n].rows());
  }
  return j;
}

Shape FactorSet::col_dims() const {
  Shape i(factors_.size());
  for (std::size_t n = 0; n < factors_.size(); ++n) {
    i[n] = static_cast<std::size_t>(factors_[n].cols());
  }
  return i;
}

DenseTensor FactorSet::forward(const DenseTensor& x) const {
  if (x.order() != factors_.size() || x.shape() != row_dims()) {
    throw std::invalid_argument("tensor shape does not match factor row dimensions");
  }
  DenseTensor out = x;
  for (std::size_t n = 0; n < factors_.size(); ++n) {
    out = mode_n_product(out, factors_[n].transpose(), n);
  }
  return out;
}

DenseTensor FactorSet::adjoint(const DenseTensor& y) const {
  if (y.order() != factors_.size() || y.shape() != col_dims()) {
    throw std::invalid_argument("tensor shape does not match factor column dimensions");
  }
  DenseTensor out = y;
  for (std::size_t n = 0; n < factors_.size(); ++n) {
    out = mode_n_product(out, factors_[n], n);
  }
  return out;
}

std::size_t FactorSet::operator_storage() const {
  std::size_t total = 0;
  for (const auto& a : factors_) {
    total += static_cast<std::size_t>(a.size());
  }
  return total;
}

Eigen::MatrixXd kronecker_product(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::MatrixXd kronecker_operator(const FactorSet& f, std::size_t max_entries) {
  std::size_t entries = 1;
  for (const auto& a : f.factors()) {
    entries *= static_cast<std::size_t>(a.size());
  }
  if (entries > max_entries) {
    throw SizeGuardError("kronecker operator would hold " + std::to_string(entries) +
                         " entries, exceeding the guard of " + std::to_string(max_entries));
  }
  Eigen::MatrixXd p = f.factor(f.order() - 1);
  for (std::size_t n = f.order() - 1; n-- > 0;) {
    p = kronecker_product(p, f.factor(n));
  }
  return p;
}

}  // namespace sptucker
