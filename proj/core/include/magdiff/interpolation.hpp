#ifndef MAGDIFF_INTERPOLATION_HPP
#define MAGDIFF_INTERPOLATION_HPP

#include <span>
#include <vector>

namespace magdiff {

/// Piecewise-cubic Hermite interpolant with the Fritsch-Carlson limiter, so
/// monotone data give a monotone curve. Node slopes may be supplied (e.g.
/// exact derivatives); otherwise they are estimated from the data.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y);
  MonotoneCubic(std::vector<double> x, std::vector<double> y,
                std::span<const double> slopes);

  /// Clamps to the end values outside [front(), back()].
  double operator()(double x) const;

  double front() const { return x_.front(); }
  double back() const { return x_.back(); }
  bool empty() const { return x_.empty(); }

 private:
  void limit(std::span<const double> slopes);

  std::vector<double> x_;
  std::vector<double> y_;
  // Slopes at the left and right end of each interval after limiting.
  std::vector<double> d_lo_;
  std::vector<double> d_hi_;
};

}  // namespace magdiff

#endif  // MAGDIFF_INTERPOLATION_HPP
