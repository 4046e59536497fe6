#include <cmath>

#include "doctest.h"
#include "check.hpp"
#include "special_functions.hpp"

TEST_CASE("erf and erfc agree with the standard library") {
  for (double x = 0.01; x < 6.0; x *= 1.17) {
    CHECK(rel_diff(oracle::erf(x), std::erf(x)) < 1e-13);
    CHECK(rel_diff(oracle::erfc(x), std::erfc(x)) < 1e-12);
  }
  CHECK(oracle::erf(-0.5) == doctest::Approx(-std::erf(0.5)).epsilon(1e-14));
}

TEST_CASE("erfcx stays finite where erfc underflows") {
  CHECK(rel_diff(oracle::erfcx(3.0), std::exp(9.0) * std::erfc(3.0)) < 1e-12);
  // Leading asymptotic term 1/(x sqrt(pi)).
  CHECK(oracle::erfcx(1e3) * 1e3 * std::sqrt(M_PI) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("E1 agrees with the standard exponential integral") {
  for (double x = 1e-3; x < 60.0; x *= 1.3) {
    const double ref = -std::expint(-x);
    CHECK(rel_diff(oracle::e1(x), ref) < 1e-12);
  }
  CHECK(oracle::exp_e1(1.0) == doctest::Approx(0.596347362323194).epsilon(1e-13));
}

TEST_CASE("closed-form integrals at a = 1") {
  CHECK(oracle::i1_tilde(1.0) == doctest::Approx(0.378936).epsilon(1e-5));
  CHECK(oracle::i2_tilde(1.0) == doctest::Approx(0.596347).epsilon(1e-5));
  CHECK(oracle::i3_tilde(1.0) == doctest::Approx(2.030078).epsilon(1e-5));
}
