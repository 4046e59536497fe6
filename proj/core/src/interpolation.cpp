#include "magdiff/interpolation.hpp"

#include <algorithm>
#include <cmath>

#include "magdiff/error.hpp"

namespace magdiff {
namespace {

void check_nodes(const std::vector<double>& x, const std::vector<double>& y) {
  require(x.size() >= 2 && x.size() == y.size(),
          "interpolation needs at least two (x, y) pairs of equal length");
  for (std::size_t k = 1; k < x.size(); ++k) {
    require(x[k] > x[k - 1], "interpolation nodes must be strictly increasing");
  }
}

}  // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  check_nodes(x_, y_);
  const std::size_t n = x_.size();
  std::vector<double> slopes(n);
  // Three-point (non-uniform) estimate inside, one-sided at the ends.
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0) {
      slopes[k] = (y_[1] - y_[0]) / (x_[1] - x_[0]);
    } else if (k == n - 1) {
      slopes[k] = (y_[k] - y_[k - 1]) / (x_[k] - x_[k - 1]);
    } else {
      const double h0 = x_[k] - x_[k - 1];
      const double h1 = x_[k + 1] - x_[k];
      const double s0 = (y_[k] - y_[k - 1]) / h0;
      const double s1 = (y_[k + 1] - y_[k]) / h1;
      slopes[k] = (h1 * s0 + h0 * s1) / (h0 + h1);
    }
  }
  limit(slopes);
}

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y,
                             std::span<const double> slopes)
    : x_(std::move(x)), y_(std::move(y)) {
  check_nodes(x_, y_);
  require(slopes.size() == x_.size(), "one slope per node is required");
  limit(slopes);
}

void MonotoneCubic::limit(std::span<const double> slopes) {
  const std::size_t m = x_.size() - 1;
  d_lo_.resize(m);
  d_hi_.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double secant = (y_[k + 1] - y_[k]) / (x_[k + 1] - x_[k]);
    double lo = slopes[k];
    double hi = slopes[k + 1];
    if (secant == 0.0) {
      lo = hi = 0.0;
    } else {
      double alpha = lo / secant;
      double beta = hi / secant;
      if (alpha < 0.0) alpha = 0.0;
      if (beta < 0.0) beta = 0.0;
      const double radius = std::hypot(alpha, beta);
      if (radius > 3.0) {
        alpha *= 3.0 / radius;
        beta *= 3.0 / radius;
      }
      lo = alpha * secant;
      hi = beta * secant;
    }
    d_lo_[k] = lo;
    d_hi_[k] = hi;
  }
}

double MonotoneCubic::operator()(double x) const {
  if (x <= x_.front()) return y_.front();
  if (x >= x_.back()) return y_.back();
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const std::size_t k = static_cast<std::size_t>(it - x_.begin()) - 1;
  const double h = x_[k + 1] - x_[k];
  const double s = (x - x_[k]) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double h10 = s3 - 2.0 * s2 + s;
  const double h01 = -2.0 * s3 + 3.0 * s2;
  const double h11 = s3 - s2;
  return h00 * y_[k] + h10 * h * d_lo_[k] + h01 * y_[k + 1] + h11 * h * d_hi_[k];
}

}  // namespace magdiff
