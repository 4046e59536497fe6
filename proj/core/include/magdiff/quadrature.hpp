// Adaptive Gauss-Kronrod quadrature and the exponentially rescaled integral
// families used by the sharp-front solution:
//
//   I1~(a) = int_0^1 exp(a (1 - 1/t^2)) / t^2 dt
//   I2~(a) = int_0^1 exp(a (1 - 1/t))   / t   dt
//   I3~(a) = int_0^1 exp(a (1 - u^2))         du
//
// The exp(a) factor is folded into the integrand so that the values stay
// O(1/a) instead of underflowing once a exceeds a few hundred.

#ifndef MAGDIFF_QUADRATURE_HPP
#define MAGDIFF_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>

namespace magdiff::quadrature {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  std::size_t max_subdivisions = 2000;

  void validate() const;
};

/// Strictly positive, finite argument of I1~ and I2~.
class IntegralArg {
 public:
  explicit IntegralArg(double a);
  double value() const noexcept { return a_; }

  /// Below this the integrals blow up like a^-1/2 (I1~) or log(1/a) (I2~).
  static constexpr double kMin = 1e-12;

 private:
  double a_;
};

using Integrand = std::function<double(double)>;

/// Global adaptive G7/K15. The interval with the largest |K15 - G7| is
/// bisected until the summed estimate is below max(abs_tol, rel_tol*|I|).
/// Throws ErrorKind::AccuracyFailure when the subdivision budget runs out.
double adaptive_integrate(const Integrand& f, double lo, double hi,
                          const QuadratureSpec& spec = {});

/// Same, but the initial partition is given. `points` must be strictly
/// increasing; the first and last entries are the integration limits.
double adaptive_integrate(const Integrand& f, std::span<const double> points,
                          const QuadratureSpec& spec = {});

double i1_tilde(IntegralArg a, const QuadratureSpec& spec = {});
double i2_tilde(IntegralArg a, const QuadratureSpec& spec = {});

/// a >= 0; I3~(0) = 1.
double i3_tilde(double a, const QuadratureSpec& spec = {});

}  // namespace magdiff::quadrature

#endif  // MAGDIFF_QUADRATURE_HPP
