#include "magdiff/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <tuple>
#include <vector>

#include "magdiff/error.hpp"

namespace magdiff::quadrature {
namespace {

// Kronrod 15-point abscissae on [-1, 1] (non-negative half), QUADPACK qk15.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss 7-point weights; they sit on kNodes[1], kNodes[3], kNodes[5], kNodes[7].
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;

  bool operator<(const Segment& other) const { return error < other.error; }
};

double checked(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    std::ostringstream os;
    os << "integrand is not finite at x = " << x;
    fail(ErrorKind::InvalidArgument, os.str());
  }
  return y;
}

Segment gauss_kronrod(const Integrand& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double fc = checked(f, center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t k = 0; k < 7; ++k) {
    const double dx = half * kNodes[k];
    const double pair = checked(f, center - dx) + checked(f, center + dx);
    kronrod += kKronrodWeights[k] * pair;
    if (k % 2 == 1) gauss += kGaussWeights[k / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

void QuadratureSpec::validate() const {
  require(rel_tol > 0.0 && std::isfinite(rel_tol), "rel_tol must be positive");
  require(abs_tol > 0.0 && std::isfinite(abs_tol), "abs_tol must be positive");
  require(max_subdivisions >= 1, "max_subdivisions must be at least 1");
}

IntegralArg::IntegralArg(double a) : a_(a) {
  if (!std::isfinite(a) || !(a >= kMin)) {
    std::ostringstream os;
    os << "integral argument must be finite and >= " << kMin << ", got " << a;
    fail(ErrorKind::InvalidArgument, os.str());
  }
}

double adaptive_integrate(const Integrand& f, std::span<const double> points,
                          const QuadratureSpec& spec) {
  spec.validate();
  require(points.size() >= 2, "need at least two partition points");
  for (std::size_t k = 1; k < points.size(); ++k) {
    require(std::isfinite(points[k - 1]) && points[k - 1] < points[k],
            "partition points must be finite and strictly increasing");
  }

  std::priority_queue<Segment> pool;
  for (std::size_t k = 1; k < points.size(); ++k) {
    pool.push(gauss_kronrod(f, points[k - 1], points[k]));
  }

  auto totals = [&pool] {
    // priority_queue has no iteration; copy is cheap relative to f calls.
    auto copy = pool;
    double value = 0.0;
    double error = 0.0;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      copy.pop();
    }
    return std::pair{value, error};
  };

  auto [value, error] = totals();

  std::size_t subdivisions = 0;
  while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
    if (subdivisions >= spec.max_subdivisions) {
      std::ostringstream os;
      os << "quadrature did not converge after " << subdivisions
         << " subdivisions (estimate " << value << ", error " << error << ")";
      fail(ErrorKind::AccuracyFailure, os.str());
    }
    const Segment worst = pool.top();
    pool.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Segment left = gauss_kronrod(f, worst.lo, mid);
    const Segment right = gauss_kronrod(f, mid, worst.hi);
    pool.push(left);
    pool.push(right);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    ++subdivisions;

    // Running sums drift; resynchronise now and then.
    if (subdivisions % 64 == 0) std::tie(value, error) = totals();
  }
  return totals().first;
}

double adaptive_integrate(const Integrand& f, double lo, double hi,
                          const QuadratureSpec& spec) {
  require(std::isfinite(lo) && std::isfinite(hi) && lo < hi,
          "integration limits must be finite with lo < hi");
  const std::array<double, 2> points{lo, hi};
  return adaptive_integrate(f, std::span<const double>(points), spec);
}

namespace {

// Partition of [0, 1] refined around `peak`, where the integrand has a
// feature of width ~`width`. Breakpoints step away from the peak
// geometrically so no panel is much wider than its distance to the peak;
// otherwise both rules of the pair can miss the feature together.
std::vector<double> partition_around(double peak, double width) {
  std::vector<double> pts{0.0, 1.0};
  if (peak > 0.0 && peak < 1.0) pts.push_back(peak);
  for (double step = width; step < 1.0; step *= 2.0) {
    for (double p : {peak - step, peak + step}) {
      if (p > 1e-300 && p < 1.0) pts.push_back(p);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double a, double b) { return b - a < 1e-15; }),
            pts.end());
  return pts;
}

}  // namespace

double i1_tilde(IntegralArg arg, const QuadratureSpec& spec) {
  const double a = arg.value();
  auto f = [a](double t) {
    if (t <= 1e-150) return 0.0;
    const double inv2 = 1.0 / (t * t);
    return std::exp(a * (1.0 - inv2)) * inv2;
  };
  // Peak sits at t = sqrt(a) for a < 1, otherwise at t = 1 with decay
  // length ~ 1/(2a) to the left.
  const auto pts = a < 1.0 ? partition_around(std::sqrt(a), 0.5 * std::sqrt(a))
                           : partition_around(1.0, 0.5 / a);
  return adaptive_integrate(f, std::span<const double>(pts), spec);
}

double i2_tilde(IntegralArg arg, const QuadratureSpec& spec) {
  const double a = arg.value();
  auto f = [a](double t) {
    if (t <= 1e-300) return 0.0;
    return std::exp(a * (1.0 - 1.0 / t)) / t;
  };
  const auto pts = a < 1.0 ? partition_around(a, 0.5 * a)
                           : partition_around(1.0, 1.0 / a);
  return adaptive_integrate(f, std::span<const double>(pts), spec);
}

double i3_tilde(double a, const QuadratureSpec& spec) {
  if (!std::isfinite(a) || a < 0.0) {
    std::ostringstream os;
    os << "I3~ argument must be finite and non-negative, got " << a;
    fail(ErrorKind::InvalidArgument, os.str());
  }
  if (a == 0.0) return 1.0;
  auto f = [a](double u) { return std::exp(a * (1.0 - u * u)); };
  // Gaussian bump at u = 0 of width 1/sqrt(2a).
  const auto pts = partition_around(0.0, 1.0 / std::sqrt(2.0 * a));
  return adaptive_integrate(f, std::span<const double>(pts), spec);
}

}  // namespace magdiff::quadrature
