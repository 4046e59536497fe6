// Sharp-front self-similar solution for magnetic diffusion into a half-space
// whose resistivity steps from etaS to etaL once the Ohmic energy density
// exceeds ec, with a constant field B0 applied at x = 0.
//
// The field is B(x, t) = f(x / xc(t)) with xc(t) = sqrt(2 h t / mu0). The
// knee of f sits at u = 1 where f = Bc. Behind the knee (u < 1, burned)
// and ahead of it (u > 1, cold) f' is a Gaussian:
//
//   f'(u) = (Bc - B0) / I3~(aL) * exp(aL (1 - u^2)),   aL = h / (2 etaL)
//   f'(u) = -Bc / I1~(aS)       * exp(aS (1 - u^2)),   aS = h / (2 etaS)
//
// (Bc, h) is the intersection of two curves Bc(h): one from flux continuity
// at the knee, one from requiring that the Ohmic energy collected ahead of
// the front equals ec exactly when the front arrives.

#ifndef MAGDIFF_EXACT_HPP
#define MAGDIFF_EXACT_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "magdiff/error.hpp"
#include "magdiff/field_profile.hpp"
#include "magdiff/interpolation.hpp"
#include "magdiff/params.hpp"
#include "magdiff/quadrature.hpp"

namespace magdiff::exact {

using quadrature::QuadratureSpec;

struct SolvedConstants {
  double Bc = 0.0;    // field at the knee
  double h = 0.0;     // mu0 * front velocity * front position
  double AL = 0.0;    // f' amplitude, burned side
  double AS = 0.0;    // f' amplitude, cold side
  double b = 0.0;     // B0 / sqrt(2 mu0 ec)
  double r = 0.0;     // etaL / etaS
  double Hcal = 0.0;  // h / etaL
  double Bcal = 0.0;  // Bc / B0

  // Normalisations reused by f'(u): I3~(h / 2 etaL) and I1~(h / 2 etaS).
  double burned_norm = 0.0;
  double cold_norm = 0.0;
};

/// Knee field implied by flux continuity for a trial h.
double bc1_of_h(double h, const ProblemParams& p, const QuadratureSpec& spec = {});

/// Knee field implied by the energy condition at the front for a trial h.
double bc2_of_h(double h, const ProblemParams& p, const QuadratureSpec& spec = {});

struct CurveSample {
  double h;
  double bc1;
  double bc2;
};

/// The log-spaced h grid scanned for a sign change of bc1 - bc2:
/// 200 points over [1e-6 etaS, 1e3 etaL].
std::vector<double> bracket_grid(const ProblemParams& p);

std::vector<CurveSample> bracket_curve(const ProblemParams& p,
                                       const QuadratureSpec& spec = {});

/// Derived quantities for a given (Bc, h); no root finding.
SolvedConstants constants_from(const ProblemParams& p, double Bc, double h,
                               const QuadratureSpec& spec = {});

/// Scans bracket_grid() and bisects the unique sign change to rel. 1e-12.
/// Throws ErrorKind::NoRoot, or AmbiguousRootError listing every bracket.
SolvedConstants solve_constants(const ProblemParams& p,
                                const QuadratureSpec& spec = {});

/// f'(u), u >= 0. At u = 1 the cold-side value is returned.
double f_prime(double u, const SolvedConstants& c, const ProblemParams& p);

/// ec recovered from the cold amplitude AS and h; equals p.ec when the
/// constants are consistent.
double energy_closure(const SolvedConstants& c, const ProblemParams& p,
                      const QuadratureSpec& spec = {});

struct SimilarityProfile {
  std::vector<double> u;       // u[0] = 0, u[knee_index] = 1
  std::vector<double> f;
  std::vector<double> fprime;  // cold-side value at the knee
  std::size_t knee_index = 0;
  double fprime_knee_burned = 0.0;

  double u_max() const { return u.back(); }
};

/// f sampled on [0, u_max] with n_points nodes (n_points >= 16). Roughly half
/// the nodes cover the burned segment. u_max is the first point where
/// f < 1e-12 B0, capped at 1 + sqrt(80 / aS).
SimilarityProfile build_profile(const SolvedConstants& c, const ProblemParams& p,
                                std::size_t n_points,
                                const QuadratureSpec& spec = {});

double x_c(double t, const SolvedConstants& c, const ProblemParams& p);
double front_velocity(double t, const SolvedConstants& c, const ProblemParams& p);

/// Field and energy density in physical space.
class ExactSolution {
 public:
  static constexpr std::size_t kDefaultPoints = 4001;

  ExactSolution(const ProblemParams& p, const SolvedConstants& c,
                std::size_t n_points = kDefaultPoints,
                const QuadratureSpec& spec = {});

  /// Solves for the constants first.
  explicit ExactSolution(const ProblemParams& p,
                         std::size_t n_points = kDefaultPoints,
                         const QuadratureSpec& spec = {});

  const ProblemParams& params() const { return p_; }
  const SolvedConstants& constants() const { return c_; }
  const SimilarityProfile& profile() const { return profile_; }

  double x_c(double t) const { return exact::x_c(t, c_, p_); }

  /// f(u) by monotone interpolation on the profile grid; 0 beyond u_max.
  double f(double u) const;

  /// B(x, t) = f(x / xc(t)); x >= 0, t > 0.
  double field_at(double x, double t) const;

  /// Ohmic energy collected at x by time t; x > 0, t > 0. Integrated in the
  /// scaled front position xi / x, with etaS until the front arrives and
  /// etaL afterwards.
  double energy_at(double x, double t) const;

  FieldProfile field_profile(double t, std::span<const double> x) const;

 private:
  ProblemParams p_;
  SolvedConstants c_;
  QuadratureSpec spec_;
  SimilarityProfile profile_;
  MonotoneCubic burned_;
  MonotoneCubic cold_;
};

struct ScalingPoint {
  double Hcal;
  double Bcal;
};

/// Solves the h-equation in the normalisation etaL = mu0 = ec = 1,
/// etaS = 1 / r, B0 = b sqrt(2). Requires b > 0, r > 1.
ScalingPoint dimensionless_solve(double b, double r,
                                 const QuadratureSpec& spec = {});

struct ScanRow {
  double b;
  double r;
  std::optional<ScalingPoint> value;
  std::optional<ErrorKind> failure;
  std::string message;
};

/// b-major table of dimensionless_solve; failed cells are kept and marked.
std::vector<ScanRow> scan_table(std::span<const double> b_values,
                                std::span<const double> r_values,
                                const QuadratureSpec& spec = {},
                                bool parallel = false);

}  // namespace magdiff::exact

#endif  // MAGDIFF_EXACT_HPP
