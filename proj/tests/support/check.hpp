#ifndef MAGDIFF_TESTS_CHECK_HPP
#define MAGDIFF_TESTS_CHECK_HPP

#include <cmath>

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

#endif
