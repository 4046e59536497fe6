#include "special_functions.hpp"

#include <cmath>
#include <numbers>

namespace oracle {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kTiny = 1e-300;

// exp(-x^2) * sum 2^n x^(2n+1) / (1*3*...*(2n+1)); every term positive.
double erf_series(double x) {
  double term = x;
  double sum = x;
  const double x2 = x * x;
  for (int n = 1; n < 500; ++n) {
    term *= 2.0 * x2 / (2.0 * n + 1.0);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return 2.0 / kSqrtPi * std::exp(-x2) * sum;
}

// exp(x^2) erfc(x) = 1/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
// evaluated with the modified Lentz algorithm.
double erfcx_fraction(double x) {
  double f = x;
  double C = f;
  double D = 0.0;
  for (int n = 1; n < 5000; ++n) {
    const double a = 0.5 * n;
    D = x + a * D;
    if (std::abs(D) < kTiny) D = kTiny;
    C = x + a / C;
    if (std::abs(C) < kTiny) C = kTiny;
    D = 1.0 / D;
    const double delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 / (kSqrtPi * f);
}

constexpr double kSwitch = 2.0;

}  // namespace

double erf(double x) {
  if (x < 0.0) return -erf(-x);
  if (x < kSwitch) return erf_series(x);
  return 1.0 - erfc(x);
}

double erfc(double x) {
  if (x < kSwitch) return 1.0 - erf(x);
  return std::exp(-x * x) * erfcx_fraction(x);
}

double erfcx(double x) {
  if (x < kSwitch) return std::exp(x * x) * (1.0 - erf(x));
  return erfcx_fraction(x);
}

double exp_e1(double x) {
  if (x <= 1.0) return std::exp(x) * e1(x);
  // exp(x) E1(x) = 1/(x + 1 - 1/(x + 3 - 4/(x + 5 - ...))), Lentz.
  double b = x + 1.0;
  double C = 1.0 / kTiny;
  double D = 1.0 / b;
  double f = D;
  for (int n = 1; n < 10000; ++n) {
    const double a = -static_cast<double>(n) * n;
    b += 2.0;
    D = 1.0 / (a * D + b);
    C = b + a / C;
    const double delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return f;
}

double e1(double x) {
  if (x > 1.0) return std::exp(-x) * exp_e1(x);
  // -gamma - ln x - sum (-x)^n / (n n!)
  double sum = 0.0;
  double term = 1.0;
  for (int n = 1; n < 200; ++n) {
    term *= -x / n;
    const double add = term / n;
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return -std::numbers::egamma - std::log(x) - sum;
}

double i1_tilde(double a) {
  const double s = std::sqrt(a);
  return 0.5 * kSqrtPi / s * erfcx(s);
}

double i2_tilde(double a) { return exp_e1(a); }

double i3_tilde(double a) {
  const double s = std::sqrt(a);
  return std::exp(a) * 0.5 * kSqrtPi / s * erf(s);
}

}  // namespace oracle
