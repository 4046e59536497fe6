#include "magdiff/exact.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <limits>
#include <sstream>

namespace magdiff::exact {
namespace {

using quadrature::IntegralArg;
using quadrature::adaptive_integrate;
using quadrature::i1_tilde;
using quadrature::i2_tilde;
using quadrature::i3_tilde;

constexpr std::size_t kScanPoints = 200;
constexpr double kBisectRelTol = 1e-12;
constexpr double kResidualTol = 1e-10;
constexpr double kTailCutoff = 1e-12;

void check_h(double h) {
  if (!std::isfinite(h) || !(h > 0.0)) {
    std::ostringstream os;
    os << "h must be finite and positive (got " << h << ")";
    fail(ErrorKind::InvalidArgument, os.str());
  }
}

// f on the cold side through its tail integral,
//   f(u) = Bc / I1~(aS) * u exp(aS (1 - u^2)) I1~(aS u^2),
// which keeps full relative accuracy however small f becomes.
double cold_field(double u, const SolvedConstants& c, double aS,
                  const QuadratureSpec& spec) {
  const double a = aS * u * u;
  const double decay = std::exp(aS * (1.0 - u * u));
  if (decay == 0.0) return 0.0;
  return c.Bc / c.cold_norm * u * decay * i1_tilde(IntegralArg(a), spec);
}

std::vector<double> refine_near(double end, double width, double lo) {
  std::vector<double> pts{lo};
  for (double k : {64.0, 16.0, 4.0, 1.0}) {
    const double p = end - k * width;
    if (p > pts.back()) pts.push_back(p);
  }
  if (end > pts.back()) pts.push_back(end);
  return pts;
}

}  // namespace

double bc1_of_h(double h, const ProblemParams& p, const QuadratureSpec& spec) {
  check_h(h);
  const double burned = i3_tilde(h / (2.0 * p.etaL), spec);
  const double cold = i1_tilde(IntegralArg(h / (2.0 * p.etaS)), spec);
  return p.B0 / (1.0 + (p.etaS / p.etaL) * burned / cold);
}

double bc2_of_h(double h, const ProblemParams& p, const QuadratureSpec& spec) {
  check_h(h);
  const double i1 = i1_tilde(IntegralArg(h / (2.0 * p.etaS)), spec);
  const double i2 = i2_tilde(IntegralArg(h / p.etaS), spec);
  return std::sqrt(2.0 * p.mu0 * p.ec) * std::sqrt(h / p.etaS * i1 * i1 / i2);
}

std::vector<double> bracket_grid(const ProblemParams& p) {
  const double lo = std::log(1e-6 * p.etaS);
  const double hi = std::log(1e3 * p.etaL);
  std::vector<double> h(kScanPoints);
  for (std::size_t k = 0; k < kScanPoints; ++k) {
    h[k] = std::exp(lo + (hi - lo) * static_cast<double>(k) /
                             static_cast<double>(kScanPoints - 1));
  }
  return h;
}

std::vector<CurveSample> bracket_curve(const ProblemParams& p,
                                       const QuadratureSpec& spec) {
  p.validate();
  std::vector<CurveSample> out;
  for (double h : bracket_grid(p)) {
    out.push_back({h, bc1_of_h(h, p, spec), bc2_of_h(h, p, spec)});
  }
  return out;
}

SolvedConstants constants_from(const ProblemParams& p, double Bc, double h,
                               const QuadratureSpec& spec) {
  p.validate();
  check_h(h);
  require(std::isfinite(Bc) && Bc > 0.0, "Bc must be positive");
  SolvedConstants c;
  c.Bcal = Bc / p.B0;
  c.Hcal = h / p.etaL;
  c.Bc = p.B0 * c.Bcal;
  c.h = p.etaL * c.Hcal;
  c.b = p.b();
  c.r = p.r();
  const double aL = c.h / (2.0 * p.etaL);
  const double aS = c.h / (2.0 * p.etaS);
  c.burned_norm = i3_tilde(aL, spec);
  c.cold_norm = i1_tilde(IntegralArg(aS), spec);
  c.AL = (c.Bc - p.B0) * std::exp(aL) / c.burned_norm;
  c.AS = -c.Bc * std::exp(aS) / c.cold_norm;
  return c;
}

SolvedConstants solve_constants(const ProblemParams& p,
                                const QuadratureSpec& spec) {
  p.validate();
  require(std::isfinite(p.ec), "constants need a finite ec");
  auto g = [&](double h) { return bc1_of_h(h, p, spec) - bc2_of_h(h, p, spec); };

  const auto grid = bracket_grid(p);
  std::vector<double> gv(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) gv[k] = g(grid[k]);

  std::vector<std::pair<double, double>> brackets;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    if ((gv[k] > 0.0) != (gv[k + 1] > 0.0)) brackets.emplace_back(grid[k], grid[k + 1]);
  }
  if (brackets.empty()) {
    std::ostringstream os;
    os << "bc1 - bc2 has no sign change for h in [" << grid.front() << ", "
       << grid.back() << "]";
    fail(ErrorKind::NoRoot, os.str());
  }
  if (brackets.size() > 1) {
    std::ostringstream os;
    os << brackets.size() << " sign changes of bc1 - bc2:";
    for (auto [lo, hi] : brackets) os << " [" << lo << ", " << hi << "]";
    throw AmbiguousRootError(os.str(), brackets);
  }

  auto [lo, hi] = brackets.front();
  double glo = g(lo);
  while (hi - lo > kBisectRelTol * hi) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if ((gm > 0.0) == (glo > 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  const double h = 0.5 * (lo + hi);
  const double Bc = bc1_of_h(h, p, spec);
  const double residual = std::abs(Bc - bc2_of_h(h, p, spec));
  if (residual > kResidualTol * p.B0) {
    std::ostringstream os;
    os << "root residual " << residual << " exceeds " << kResidualTol << " B0";
    fail(ErrorKind::AccuracyFailure, os.str());
  }
  return constants_from(p, Bc, h, spec);
}

double f_prime(double u, const SolvedConstants& c, const ProblemParams& p) {
  if (!(u >= 0.0)) {
    std::ostringstream os;
    os << "u must be non-negative (got " << u << ")";
    fail(ErrorKind::InvalidArgument, os.str());
  }
  const double s = 1.0 - u * u;
  if (u < 1.0) return (c.Bc - p.B0) / c.burned_norm * std::exp(c.h / (2.0 * p.etaL) * s);
  return -c.Bc / c.cold_norm * std::exp(c.h / (2.0 * p.etaS) * s);
}

double energy_closure(const SolvedConstants& c, const ProblemParams& p,
                      const QuadratureSpec& spec) {
  // The cold amplitude without its exp(aS) factor, i.e. -AS exp(-aS).
  const double amp = c.Bc / c.cold_norm;
  return p.etaS * amp * amp * i2_tilde(IntegralArg(c.h / p.etaS), spec) /
         (2.0 * p.mu0 * c.h);
}

SimilarityProfile build_profile(const SolvedConstants& c, const ProblemParams& p,
                                std::size_t n_points, const QuadratureSpec& spec) {
  require(n_points >= 16, "a profile needs at least 16 points");
  p.validate();
  const double aS = c.h / (2.0 * p.etaS);
  const std::size_t n_burned = n_points / 2 + 1;  // nodes on [0, 1]
  const std::size_t n_cold = n_points - n_burned + 1;  // nodes on [1, u_max]

  SimilarityProfile prof;
  prof.knee_index = n_burned - 1;
  prof.u.resize(n_points);
  prof.f.resize(n_points);
  prof.fprime.resize(n_points);

  auto fp = [&](double u) { return f_prime(u, c, p); };
  prof.u[0] = 0.0;
  prof.f[0] = p.B0;
  for (std::size_t k = 1; k < n_burned; ++k) {
    const double u = k + 1 == n_burned
                         ? 1.0
                         : static_cast<double>(k) / static_cast<double>(n_burned - 1);
    prof.u[k] = u;
    prof.f[k] = prof.f[k - 1] + adaptive_integrate(fp, prof.u[k - 1], u, spec);
  }
  for (std::size_t k = 0; k + 1 < n_burned; ++k) prof.fprime[k] = fp(prof.u[k]);
  const double knee_u = std::nextafter(1.0, 0.0);
  prof.fprime_knee_burned = (c.Bc - p.B0) / c.burned_norm *
                            std::exp(c.h / (2.0 * p.etaL) * (1.0 - knee_u * knee_u));

  // Far end: first u where f drops below the cutoff, found by bisection.
  const double threshold = kTailCutoff * p.B0;
  const double cap = 1.0 + std::sqrt(80.0 / aS);
  double u_max = cap;
  if (cold_field(cap, c, aS, spec) < threshold) {
    double lo = 1.0;
    double hi = cap;
    for (int it = 0; it < 100 && hi - lo > 1e-14 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (cold_field(mid, c, aS, spec) < threshold ? hi : lo) = mid;
    }
    u_max = hi;
  }

  for (std::size_t k = 1; k < n_cold; ++k) {
    const std::size_t i = prof.knee_index + k;
    const double u = k + 1 == n_cold
                         ? u_max
                         : 1.0 + (u_max - 1.0) * static_cast<double>(k) /
                                     static_cast<double>(n_cold - 1);
    prof.u[i] = u;
    prof.f[i] = cold_field(u, c, aS, spec);
  }
  for (std::size_t i = prof.knee_index; i < n_points; ++i) prof.fprime[i] = fp(prof.u[i]);
  return prof;
}

double x_c(double t, const SolvedConstants& c, const ProblemParams& p) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    std::ostringstream os;
    os << "t must be finite and non-negative (got " << t << ")";
    fail(ErrorKind::InvalidArgument, os.str());
  }
  return std::sqrt(2.0 * c.h / p.mu0 * t);
}

double front_velocity(double t, const SolvedConstants& c, const ProblemParams& p) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    std::ostringstream os;
    os << "front velocity needs t > 0 (got " << t << ")";
    fail(ErrorKind::InvalidArgument, os.str());
  }
  return c.h / (p.mu0 * x_c(t, c, p));
}

ExactSolution::ExactSolution(const ProblemParams& p, const SolvedConstants& c,
                             std::size_t n_points, const QuadratureSpec& spec)
    : p_(p), c_(c), spec_(spec), profile_(build_profile(c, p, n_points, spec)) {
  const auto& pr = profile_;
  const std::size_t k = pr.knee_index;
  std::vector<double> slopes(pr.fprime.begin(), pr.fprime.begin() + k + 1);
  slopes.back() = pr.fprime_knee_burned;
  burned_ = MonotoneCubic({pr.u.begin(), pr.u.begin() + k + 1},
                          {pr.f.begin(), pr.f.begin() + k + 1}, slopes);
  cold_ = MonotoneCubic({pr.u.begin() + k, pr.u.end()}, {pr.f.begin() + k, pr.f.end()},
                        std::span<const double>(pr.fprime).subspan(k));
}

ExactSolution::ExactSolution(const ProblemParams& p, std::size_t n_points,
                             const QuadratureSpec& spec)
    : ExactSolution(p, solve_constants(p, spec), n_points, spec) {}

double ExactSolution::f(double u) const {
  require(u >= 0.0, "u must be non-negative");
  if (u <= 1.0) return burned_(u);
  if (u <= profile_.u_max()) return cold_(u);
  return 0.0;
}

double ExactSolution::field_at(double x, double t) const {
  require(x >= 0.0 && std::isfinite(x), "x must be finite and non-negative");
  require(t > 0.0 && std::isfinite(t), "t must be finite and positive");
  return f(x / x_c(t));
}

double ExactSolution::energy_at(double x, double t) const {
  require(x > 0.0 && std::isfinite(x), "x must be finite and positive");
  require(t > 0.0 && std::isfinite(t), "t must be finite and positive");
  // tau = (front position) / x runs from 0 to xc(t) / x; the front passes x
  // at tau = 1. Along the way dt = mu0 xc dxc / h turns the heating rate into
  // eta / (mu0 h) * f'(1/tau)^2 dtau / tau.
  const double tau_end = x_c(t) / x;
  const double aS = c_.h / (2.0 * p_.etaS);
  const double aL = c_.h / (2.0 * p_.etaL);

  if (tau_end < 1.0) {
    // Cold: with s = tau^2 the integrand is exp(2 aS (1 - 1/s)) / (2 s).
    const double s_end = tau_end * tau_end;
    if (2.0 * aS * (1.0 - 1.0 / s_end) < -745.0) return 0.0;
    auto g = [aS](double s) {
      if (s <= 1e-300) return 0.0;
      return std::exp(2.0 * aS * (1.0 - 1.0 / s)) / (2.0 * s);
    };
    const auto pts = refine_near(s_end, s_end * s_end / (2.0 * aS), 0.0);
    const double amp = c_.Bc / c_.cold_norm;
    return p_.etaS * amp * amp / (p_.mu0 * c_.h) *
           adaptive_integrate(g, std::span<const double>(pts), spec_);
  }

  // Burned: the cold phase deposits exactly ec by arrival (energy closure),
  // then etaL heating continues. With s = ln tau the integrand is smooth.
  const double s_end = std::log(tau_end);
  if (s_end == 0.0) return p_.ec;
  auto g = [aL](double s) { return std::exp(2.0 * aL * (1.0 - std::exp(-2.0 * s))); };
  const double amp = (c_.Bc - p_.B0) / c_.burned_norm;
  return p_.ec + p_.etaL * amp * amp / (p_.mu0 * c_.h) *
                     adaptive_integrate(g, 0.0, s_end, spec_);
}

FieldProfile ExactSolution::field_profile(double t, std::span<const double> x) const {
  FieldProfile out;
  out.t = t;
  out.xc = x_c(t);
  out.x.assign(x.begin(), x.end());
  out.B.reserve(x.size());
  out.e.reserve(x.size());
  for (double xi : x) {
    out.B.push_back(field_at(xi, t));
    out.e.push_back(xi > 0.0 ? energy_at(xi, t)
                             : std::numeric_limits<double>::infinity());
  }
  return out;
}

ScalingPoint dimensionless_solve(double b, double r, const QuadratureSpec& spec) {
  require(std::isfinite(b) && b > 0.0, "b must be positive");
  require(std::isfinite(r) && r > 1.0, "r must exceed 1");
  ProblemParams p;
  p.etaL = 1.0;
  p.etaS = 1.0 / r;
  p.mu0 = 1.0;
  p.ec = 1.0;
  p.B0 = b * std::sqrt(2.0);
  const SolvedConstants c = solve_constants(p, spec);
  return {c.Hcal, c.Bcal};
}

std::vector<ScanRow> scan_table(std::span<const double> b_values,
                                std::span<const double> r_values,
                                const QuadratureSpec& spec, bool parallel) {
  for (double b : b_values) require(std::isfinite(b) && b > 0.0, "every b must be positive");
  for (double r : r_values) require(std::isfinite(r) && r > 1.0, "every r must exceed 1");

  auto cell = [spec](double b, double r) {
    ScanRow row{b, r, std::nullopt, std::nullopt, {}};
    try {
      row.value = dimensionless_solve(b, r, spec);
    } catch (const Error& err) {
      row.failure = err.kind();
      row.message = err.what();
    }
    return row;
  };

  std::vector<ScanRow> rows;
  if (!parallel) {
    for (double b : b_values)
      for (double r : r_values) rows.push_back(cell(b, r));
    return rows;
  }
  std::vector<std::future<ScanRow>> pending;
  for (double b : b_values)
    for (double r : r_values) pending.push_back(std::async(std::launch::async, cell, b, r));
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

}  // namespace magdiff::exact
