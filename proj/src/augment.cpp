#include "sptucker/augment.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace sptucker {

namespace {

double squared_distance(const std::vector<std::size_t>& a,
                        const std::vector<std::size_t>& b) {
  double acc = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    const double d = static_cast<double>(a[n]) - static_cast<double>(b[n]);
    acc += d * d;
  }
  return acc;
}

}  // namespace

SupportSet detect_ambiguous_cluster(const DenseTensor& x, double band_low,
                                    double band_high, double gamma) {
  if (band_low < 0.0 || band_low >= band_high) {
    throw std::invalid_argument("band bounds must satisfy 0 <= a < b");
  }
  if (gamma <= 0.0) throw std::invalid_argument("gamma must be positive");

  // Exhaustive pair scan over band-valued indices only; the band set is small.
  std::vector<std::size_t> band;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double mag = std::abs(x[i]);
    if (mag > band_low && mag < band_high) band.push_back(i);
  }

  std::vector<std::vector<std::size_t>> coords;
  coords.reserve(band.size());
  for (std::size_t i : band) coords.push_back(linear_to_coords(x.shape(), i));

  const double gamma_sq = gamma * gamma;
  SupportSet lambda(x.shape());
  for (std::size_t p = 0; p < band.size(); ++p) {
    for (std::size_t q = p + 1; q < band.size(); ++q) {
      if (squared_distance(coords[p], coords[q]) < gamma_sq) {
        lambda.insert(band[p]);
        lambda.insert(band[q]);
      }
    }
  }
  return lambda;
}

SupportSet dilate_support(const SupportSet& lambda, double r, const Shape& shape) {
  if (r <= 0.0) throw std::invalid_argument("dilation radius must be positive");
  SupportSet out(shape);
  if (lambda.empty()) return out;

  const std::size_t order = shape.size();
  const auto reach = static_cast<std::size_t>(std::floor(r));
  const double r_sq = r * r;

  std::vector<std::size_t> probe(order);
  for (const auto& center : lambda.tuples()) {
    // walk the axis-aligned bounding box of the ball, clipped to the grid
    std::vector<std::size_t> lo(order), hi(order);
    for (std::size_t n = 0; n < order; ++n) {
      lo[n] = center[n] > reach ? center[n] - reach : 0;
      hi[n] = std::min(center[n] + reach, shape[n] - 1);
    }
    probe = lo;
    while (true) {
      if (squared_distance(probe, center) <= r_sq) out.insert_coords(probe);
      std::size_t n = 0;
      while (n < order && probe[n] == hi[n]) {
        probe[n] = lo[n];
        ++n;
      }
      if (n == order) break;
      ++probe[n];
    }
  }
  return out;
}

AugmentResult augment_estimate(const DenseTensor& x, const SupportSet& omega,
                               const SupportSet& lambda_tilde,
                               const RecoveryConfig& cfg) {
  double alpha = cfg.alpha_fixed;
  if (cfg.alpha_policy == AlphaPolicy::kMedianOfSupport && !omega.empty()) {
    std::vector<double> mags;
    mags.reserve(omega.size());
    for (std::size_t i : omega.linear()) mags.push_back(std::abs(x[i]));
    const std::size_t mid = mags.size() / 2;
    std::nth_element(mags.begin(), mags.begin() + static_cast<std::ptrdiff_t>(mid),
                     mags.end());
    alpha = mags[mid];
  }

  AugmentResult result{x, set_union(omega, lambda_tilde)};
  for (std::size_t i : lambda_tilde.linear()) {
    if (!omega.contains(i)) result.estimate[i] = alpha;
  }
  return result;
}

AugmentResult augment_support(const DenseTensor& x, const SupportSet& omega,
                              const RecoveryConfig& cfg) {
  const SupportSet lambda =
      detect_ambiguous_cluster(x, cfg.band_low, cfg.band_high, cfg.cluster_radius);
  const SupportSet lambda_tilde = dilate_support(lambda, cfg.dilation_radius, x.shape());
  return augment_estimate(x, omega, lambda_tilde, cfg);
}

}  // namespace sptucker
