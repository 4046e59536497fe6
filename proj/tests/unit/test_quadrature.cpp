#include <cmath>
#include <vector>

#include "doctest.h"
#include "check.hpp"
#include "magdiff/error.hpp"
#include "magdiff/quadrature.hpp"
#include "special_functions.hpp"

using namespace magdiff;
using namespace magdiff::quadrature;

namespace {
std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(lo * std::pow(hi / lo, k / double(n - 1)));
  return out;
}
}  // namespace

TEST_CASE("adaptive_integrate on simple integrands") {
  CHECK(adaptive_integrate([](double) { return 1.0; }, 0.0, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(adaptive_integrate([](double u) { return u; }, 0.0, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-14));
  const double gauss = adaptive_integrate([](double u) { return std::exp(-u * u); }, 0.0, 1.0);
  CHECK(rel_diff(gauss, 0.5 * std::sqrt(M_PI) * oracle::erf(1.0)) < 1e-12);
  CHECK(gauss == doctest::Approx(0.746824).epsilon(1e-6));
}

TEST_CASE("adaptive_integrate rejects bad input and reports exhaustion") {
  CHECK_THROWS_AS(adaptive_integrate([](double) { return 1.0; }, 1.0, 0.0), Error);
  QuadratureSpec spec;
  spec.max_subdivisions = 2;
  try {
    adaptive_integrate([](double u) { return std::sqrt(u); }, 0.0, 1.0, spec);
    FAIL("expected accuracy failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AccuracyFailure);
  }
  QuadratureSpec bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("integral arguments are validated") {
  for (double a : {0.0, -1.0, 1e-13, double(NAN), double(INFINITY)}) {
    try {
      IntegralArg arg(a);
      FAIL("expected invalid-argument");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
  }
  CHECK_THROWS_AS(i3_tilde(-1.0), Error);
  CHECK(i3_tilde(0.0) == 1.0);
}

TEST_CASE("reference values") {
  CHECK(i1_tilde(IntegralArg(1.0)) == doctest::Approx(0.37894).epsilon(1e-4));
  CHECK(rel_diff(i1_tilde(IntegralArg(12.582)), oracle::i1_tilde(12.582)) < 1e-8);
  CHECK(i1_tilde(IntegralArg(100.0)) == doctest::Approx(5.0e-3).epsilon(0.01));

  CHECK(i2_tilde(IntegralArg(1.0)) == doctest::Approx(0.59634).epsilon(1e-4));
  CHECK(i2_tilde(IntegralArg(100.0)) == doctest::Approx(9.9e-3).epsilon(0.01));
  CHECK(rel_diff(i2_tilde(IntegralArg(25.16)), oracle::i2_tilde(25.16)) < 1e-8);

  CHECK(i3_tilde(1.0) == doctest::Approx(2.03008).epsilon(1e-5));
  CHECK(rel_diff(i3_tilde(0.12582), oracle::i3_tilde(0.12582)) < 1e-8);
}

TEST_CASE("closed-form identities over a in [1e-3, 50]") {
  for (double a : log_grid(1e-3, 50.0, 50)) {
    CAPTURE(a);
    CHECK(rel_diff(i1_tilde(IntegralArg(a)), oracle::i1_tilde(a)) < 1e-8);
    CHECK(rel_diff(i2_tilde(IntegralArg(a)), oracle::i2_tilde(a)) < 1e-8);
    CHECK(rel_diff(i3_tilde(a), oracle::i3_tilde(a)) < 1e-8);
  }
}

TEST_CASE("monotonicity in a") {
  const auto grid = log_grid(1e-3, 500.0, 60);
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const IntegralArg lo(grid[k - 1]);
    const IntegralArg hi(grid[k]);
    CHECK(i1_tilde(lo) > i1_tilde(hi));
    CHECK(i2_tilde(lo) > i2_tilde(hi));
    CHECK(i3_tilde(grid[k - 1]) < i3_tilde(grid[k]));
    CHECK(i3_tilde(grid[k]) >= 1.0);
  }
}

TEST_CASE("no overflow or underflow up to a = 700") {
  const IntegralArg a(700.0);
  const double v1 = i1_tilde(a);
  const double v2 = i2_tilde(a);
  const double v3 = i3_tilde(700.0);
  CHECK(std::isfinite(v1));
  CHECK(std::isfinite(v2));
  CHECK(std::isfinite(v3));
  CHECK(v1 > 0.0);
  CHECK(v2 > 0.0);
  CHECK(rel_diff(v1, oracle::i1_tilde(700.0)) < 1e-8);
  CHECK(rel_diff(v2, oracle::i2_tilde(700.0)) < 1e-8);
  CHECK(rel_diff(v3, oracle::i3_tilde(700.0)) < 1e-8);
}
