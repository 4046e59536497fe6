#include <cmath>
#include <vector>

#include "doctest.h"
#include "magdiff/error.hpp"
#include "magdiff/interpolation.hpp"

using magdiff::MonotoneCubic;

TEST_CASE("passes through the nodes and clamps outside") {
  const MonotoneCubic f({0.0, 1.0, 2.0, 4.0}, {3.0, 2.0, 2.0, -1.0});
  CHECK(f(0.0) == 3.0);
  CHECK(f(1.0) == 2.0);
  CHECK(f(4.0) == -1.0);
  CHECK(f(-5.0) == 3.0);
  CHECK(f(9.0) == -1.0);
  // Flat interval stays flat.
  CHECK(f(1.5) == doctest::Approx(2.0));
}

TEST_CASE("monotone data give a monotone curve") {
  // A step-like sequence that overshoots with unlimited cubic splines.
  const std::vector<double> x{0, 1, 2, 3, 4, 5, 6};
  const std::vector<double> y{1, 1, 1, 0.9, 0.0, 0.0, 0.0};
  const MonotoneCubic f(x, y);
  double prev = f(0.0);
  for (double t = 0.0; t <= 6.0; t += 0.01) {
    const double v = f(t);
    CHECK(v <= prev + 1e-15);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    prev = v;
  }
}

TEST_CASE("exact slopes reproduce a monotone cubic") {
  auto g = [](double t) { return -t * t * t - t; };
  auto dg = [](double t) { return -3.0 * t * t - 1.0; };
  std::vector<double> x, y, d;
  for (int k = 0; k <= 10; ++k) {
    x.push_back(0.1 * k);
    y.push_back(g(0.1 * k));
    d.push_back(dg(0.1 * k));
  }
  const MonotoneCubic f(x, y, d);
  for (double t = 0.0; t <= 1.0; t += 0.013) CHECK(f(t) == doctest::Approx(g(t)).epsilon(1e-12));
}

TEST_CASE("rejects malformed nodes") {
  CHECK_THROWS_AS(MonotoneCubic({0.0}, {1.0}), magdiff::Error);
  CHECK_THROWS_AS(MonotoneCubic({0.0, 0.0}, {1.0, 2.0}), magdiff::Error);
  CHECK_THROWS_AS(MonotoneCubic({0.0, 1.0}, {1.0}), magdiff::Error);
}
