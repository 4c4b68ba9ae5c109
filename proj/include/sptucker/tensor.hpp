#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sptucker {

using Shape = std::vector<std::size_t>;

/// Thrown when the Kronecker operator would exceed the configured entry
/// budget; callers should fall back to the tensor path.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an iteration produces non-finite values.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t shape_size(const Shape& shape);

/// Linearization is mode-1 fastest (column-major generalization):
/// linear = j0 + d0*(j1 + d1*(j2 + ...)).
std::size_t coords_to_linear(const Shape& shape, std::span<const std::size_t> coords);
std::vector<std::size_t> linear_to_coords(const Shape& shape, std::size_t linear);

/// Dense rank-N array of doubles with mode-1-fastest storage.
class DenseTensor {
 public:
  DenseTensor() = default;
  explicit DenseTensor(Shape shape);
  DenseTensor(Shape shape, std::vector<double> data);

  static DenseTensor zeros(Shape shape) { return DenseTensor(std::move(shape)); }

  std::size_t order() const { return shape_.size(); }
  const Shape& shape() const { return shape_; }
  std::size_t dim(std::size_t mode) const { return shape_.at(mode); }
  std::size_t size() const { return data_.size(); }

  double operator[](std::size_t linear) const { return data_[linear]; }
  double& operator[](std::size_t linear) { return data_[linear]; }
  double at(std::span<const std::size_t> coords) const {
    return data_[coords_to_linear(shape_, coords)];
  }
  double& at(std::span<const std::size_t> coords) {
    return data_[coords_to_linear(shape_, coords)];
  }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  Eigen::Map<const Eigen::VectorXd> vec() const {
    return {data_.data(), static_cast<Eigen::Index>(data_.size())};
  }
  Eigen::Map<Eigen::VectorXd> vec() {
    return {data_.data(), static_cast<Eigen::Index>(data_.size())};
  }

  double frobenius_norm() const;
  double l1_norm() const;
  double max_abs() const;
  bool all_finite() const;

  bool same_shape(const DenseTensor& other) const { return shape_ == other.shape_; }

  DenseTensor& operator+=(const DenseTensor& rhs);
  DenseTensor& operator-=(const DenseTensor& rhs);
  DenseTensor& operator*=(double s);
  friend DenseTensor operator+(DenseTensor lhs, const DenseTensor& rhs) { return lhs += rhs; }
  friend DenseTensor operator-(DenseTensor lhs, const DenseTensor& rhs) { return lhs -= rhs; }
  friend DenseTensor operator*(double s, DenseTensor t) { return t *= s; }

 private:
  Shape shape_;
  std::vector<double> data_;
};

/// Mode-n matricization: row j holds all entries with mode-n coordinate j,
/// remaining modes linearized in ascending-mode order (lower modes fastest).
Eigen::MatrixXd mode_n_unfold(const DenseTensor& x, std::size_t mode);

/// Exact inverse of mode_n_unfold for the given shape and mode.
DenseTensor mode_n_fold(const Eigen::MatrixXd& m, std::size_t mode, const Shape& shape);

/// Mode-n product: the result's mode-n unfolding equals m * unfold(x, mode).
DenseTensor mode_n_product(const DenseTensor& x, const Eigen::MatrixXd& m, std::size_t mode);

/// Set of tensor indices over a fixed shape, stored as sorted linear indices.
class SupportSet {
 public:
  SupportSet() = default;
  explicit SupportSet(Shape shape) : shape_(std::move(shape)) {}

  const Shape& shape() const { return shape_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(std::size_t linear) const { return indices_.count(linear) != 0; }

  void insert(std::size_t linear);
  void insert_coords(std::span<const std::size_t> coords) {
    insert(coords_to_linear(shape_, coords));
  }
  void erase(std::size_t linear) { indices_.erase(linear); }
  void clear() { indices_.clear(); }

  const std::set<std::size_t>& linear() const { return indices_; }
  std::vector<std::vector<std::size_t>> tuples() const;

  void unite(const SupportSet& other);

  friend bool operator==(const SupportSet& a, const SupportSet& b) {
    return a.shape_ == b.shape_ && a.indices_ == b.indices_;
  }

 private:
  Shape shape_;
  std::set<std::size_t> indices_;
};

bool is_subset(const SupportSet& a, const SupportSet& b);
SupportSet set_union(const SupportSet& a, const SupportSet& b);
SupportSet set_intersection(const SupportSet& a, const SupportSet& b);
SupportSet set_difference(const SupportSet& a, const SupportSet& b);

/// Ordered factor matrices A_n (J_n x I_n, orthonormal columns) defining the
/// sensing operator. forward() compresses J -> I by applying A_n^T per mode;
/// adjoint() expands I -> J by applying A_n per mode.
class FactorSet {
 public:
  explicit FactorSet(std::vector<Eigen::MatrixXd> factors);

  std::size_t order() const { return factors_.size(); }
  const Eigen::MatrixXd& factor(std::size_t n) const { return factors_.at(n); }
  const std::vector<Eigen::MatrixXd>& factors() const { return factors_; }

  Shape row_dims() const;  // J_n, the core shape
  Shape col_dims() const;  // I_n, the observation shape

  DenseTensor forward(const DenseTensor& x) const;
  DenseTensor adjoint(const DenseTensor& y) const;

  /// Total element count of the stored factor matrices, sum of J_n * I_n.
  std::size_t operator_storage() const;

 private:
  std::vector<Eigen::MatrixXd> factors_;
};

Eigen::MatrixXd kronecker_product(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

inline constexpr std::size_t kDefaultKroneckerGuard = 100'000'000;

/// Full sensing matrix P = A_N (x) ... (x) A_1, size (prod J) x (prod I),
/// satisfying vec(forward(X)) = P^T vec(X) and vec(adjoint(Y)) = P vec(Y).
/// Throws SizeGuardError when the entry count exceeds max_entries.
Eigen::MatrixXd kronecker_operator(const FactorSet& f,
                                   std::size_t max_entries = kDefaultKroneckerGuard);

}  // namespace sptucker
