#include "magdiff/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "magdiff/error.hpp"
#include "magdiff/exact.hpp"

#if defined(__SSE2__) || defined(_M_X64)
#include <xmmintrin.h>
#define MAGDIFF_HAVE_MXCSR 1
#endif

namespace magdiff::sim {

void Mesh1D::validate() const {
  require(n_cells >= 8, "mesh needs at least 8 cells");
  require(std::isfinite(x_max) && x_max > 0.0, "x_max must be positive");
}

std::vector<double> Mesh1D::centers() const {
  std::vector<double> x(n_cells);
  for (std::size_t i = 0; i < n_cells; ++i) x[i] = center(i);
  return x;
}

void SimConfig::validate() const {
  require(std::isfinite(t_end) && t_end > 0.0, "t_end must be positive");
  require(cfl > 0.0 && cfl <= 0.5, "cfl must lie in (0, 0.5]");
  for (double t : output_times) {
    require(t >= 0.0 && t <= t_end, "output times must lie in [0, t_end]");
  }
}

FieldProfile SimState::snapshot() const {
  return {t, mesh.centers(), B, e, std::numeric_limits<double>::quiet_NaN()};
}

SimState init_state(const Mesh1D& mesh, const ProblemParams& p) {
  mesh.validate();
  p.validate();
  SimState s;
  s.mesh = mesh;
  s.B.assign(mesh.n_cells, 0.0);
  s.e.assign(mesh.n_cells, 0.0);
  s.eta.assign(mesh.n_cells, p.etaS);
  s.j_faces.assign(mesh.n_cells + 1, 0.0);
  return s;
}

double stable_dt(const Mesh1D& mesh, const ProblemParams& p, double cfl) {
  require(cfl > 0.0 && cfl <= 0.5, "cfl must lie in (0, 0.5]");
  const double dx = mesh.dx();
  return cfl * p.mu0 * dx * dx / (2.0 * p.etaL);
}

namespace {

// Ahead of the front B and e decay through the subnormal range, where x86
// arithmetic is many times slower. Flushing them to zero changes nothing
// above 1e-308; the caller's floating-point mode is restored on exit.
class FlushSubnormals {
 public:
#ifdef MAGDIFF_HAVE_MXCSR
  FlushSubnormals() : saved_(_mm_getcsr()) { _mm_setcsr(saved_ | 0x8040u); }
  ~FlushSubnormals() { _mm_setcsr(saved_); }

 private:
  unsigned saved_;
#endif
};

// Per-face coefficients are cached and refreshed only where the resistivity
// pattern changed or a front sits, which keeps a step to three sweeps.
class Stepper {
 public:
  Stepper(SimState& s, const ProblemParams& p)
      : s_(s), p_(p), n_(s.mesh.n_cells), dx_(s.mesh.dx()), inv_dx_(1.0 / dx_),
        log_ec_(std::log(p.ec)), kw_(n_ + 1), E_(n_ + 1), phi_(n_, 0.0),
        inv_eta_(n_) {
    for (std::size_t i = 0; i < n_; ++i) inv_eta_[i] = 1.0 / s_.eta[i];
    for (std::size_t f = 0; f <= n_; ++f) {
      refresh_face(f);
      E_[f] = kw_[f] * (right_of(f) - left_of(f));
      if (is_interface(f)) interfaces_.push_back(f);
    }
  }

  void run(double dt, std::size_t n_steps) {
    const double c = dt / (p_.mu0 * dx_);
    const double hc = 0.5 * dt / (p_.mu0 * p_.mu0);
    const double boost = 1.0 / p_.etaL - 1.0 / p_.etaS;
    double* B = s_.B.data();
    double* e = s_.e.data();
    double* E = E_.data();
    const double* kw = kw_.data();
    const double* rate0 = inv_eta_.data();
    const double* phi = phi_.data();
    const std::size_t n = n_;

    for (std::size_t k = 0; k < n_steps; ++k) {
      for (std::size_t i = 0; i < n; ++i) B[i] += c * (E[i + 1] - E[i]);

      E[0] = kw[0] * (B[0] - p_.B0);
      for (std::size_t f = 1; f < n; ++f) E[f] = kw[f] * (B[f] - B[f - 1]);
      E[n] = -kw[n] * B[n - 1];

      double check = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        e[i] += hc * (E[i] * E[i] + E[i + 1] * E[i + 1]) * (rate0[i] + phi[i] * boost);
        check += B[i] + e[i];
      }
      ++s_.steps;
      s_.t += dt;
      if (!std::isfinite(check)) {
        std::ostringstream os;
        os << "non-finite field or energy at step " << s_.steps;
        fail(ErrorKind::NumericalFailure, os.str());
      }

      // Cells can only switch next to the current burned region, but a
      // full scan is cheap and needs no assumption about the front.
      changed_.clear();
      const double* eta = s_.eta.data();
      for (std::size_t i = 0; i < n; ++i) {
        if ((e[i] > p_.ec) != (eta[i] == p_.etaL)) changed_.push_back(i);
      }

      for (std::size_t i : changed_) {
        s_.eta[i] = e[i] > p_.ec ? p_.etaL : p_.etaS;
        inv_eta_[i] = 1.0 / s_.eta[i];
      }
      candidates_.assign(interfaces_.begin(), interfaces_.end());
      for (std::size_t i : changed_) {
        candidates_.push_back(i);
        candidates_.push_back(i + 1);
      }
      std::sort(candidates_.begin(), candidates_.end());
      candidates_.erase(std::unique(candidates_.begin(), candidates_.end()),
                        candidates_.end());
      interfaces_.clear();
      for (std::size_t f : candidates_) {
        refresh_face(f);
        E_[f] = kw_[f] * (right_of(f) - left_of(f));
        if (is_interface(f)) interfaces_.push_back(f);
      }
    }

    for (std::size_t f = 0; f <= n_; ++f) {
      const double w = (f == 0 || f == n_) ? 2.0 * inv_dx_ : inv_dx_;
      s_.j_faces[f] = (right_of(f) - left_of(f)) * w / p_.mu0;
    }
  }

 private:
  double left_of(std::size_t f) const { return f == 0 ? p_.B0 : s_.B[f - 1]; }
  double right_of(std::size_t f) const { return f == n_ ? 0.0 : s_.B[f]; }

  bool is_interface(std::size_t f) const {
    return f > 0 && f < n_ && s_.eta[f - 1] != s_.eta[f];
  }

  // Burned fraction of the gap between the centres of cells f-1 and f,
  // from a quadratic in ln e through the cold cells f+1..f+3.
  double burned_fraction(std::size_t f) const {
    const auto& e = s_.e;
    if (f + 3 >= n_ || !(e[f + 3] > 0.0 && e[f + 1] > e[f + 2] && e[f + 2] > e[f + 3]))
      return 0.5;
    const double L2 = std::log(e[f + 1]);
    const double L3 = std::log(e[f + 2]);
    const double L4 = std::log(e[f + 3]);
    const double slope = (-3.0 * L2 + 4.0 * L3 - L4) * 0.5 * inv_dx_;
    const double curv = (L2 - 2.0 * L3 + L4) * inv_dx_ * inv_dx_;
    double y = (log_ec_ - L2) / slope;
    for (int it = 0; it < 3; ++it) {
      const double g = L2 + slope * y + 0.5 * curv * y * y - log_ec_;
      const double gp = slope + curv * y;
      if (gp < 0.0) y -= g / gp;
    }
    const double front = s_.mesh.center(f + 1) + y;
    return std::clamp((front - s_.mesh.center(f - 1)) * inv_dx_, 0.0, 1.0);
  }

  void refresh_face(std::size_t f) {
    if (f == 0) {
      kw_[0] = s_.eta[0] * 2.0 * inv_dx_;
      return;
    }
    if (f == n_) {
      kw_[n_] = s_.eta[n_ - 1] * 2.0 * inv_dx_;
      return;
    }
    const double a = s_.eta[f - 1];
    const double b = s_.eta[f];
    phi_[f] = 0.0;
    double k;
    if (a == b) {
      k = a;
    } else if (a > b) {
      const double theta = burned_fraction(f);
      phi_[f] = std::clamp(theta - 0.5, 0.0, 1.0);
      k = 1.0 / (theta / a + (1.0 - theta) / b);
    } else {
      k = 2.0 * a * b / (a + b);
    }
    kw_[f] = k * inv_dx_;
  }

  SimState& s_;
  const ProblemParams& p_;
  std::size_t n_;
  double dx_;
  double inv_dx_;
  double log_ec_;
  std::vector<double> kw_;       // k / distance between the face's nodes
  std::vector<double> E_;        // k dB/dx
  std::vector<double> phi_;      // burned share of heating, cold cell f
  std::vector<double> inv_eta_;
  std::vector<std::size_t> interfaces_;
  std::vector<std::size_t> changed_;
  std::vector<std::size_t> candidates_;
};

}  // namespace

void advance(SimState& state, const ProblemParams& p, double dt, std::size_t n) {
  p.validate();
  require(std::isfinite(dt) && dt > 0.0, "dt must be positive");
  const double limit = stable_dt(state.mesh, p, 0.5);
  if (dt > limit * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "dt = " << dt << " exceeds the stability bound " << limit;
    fail(ErrorKind::InvalidArgument, os.str());
  }
  if (n == 0) return;
  const FlushSubnormals guard;
  Stepper(state, p).run(dt, n);
}

SimState step(const SimState& state, const ProblemParams& p, double dt) {
  SimState next = state;
  advance(next, p, dt, 1);
  return next;
}

std::vector<FieldProfile> run(const Mesh1D& mesh, const ProblemParams& p,
                              const SimConfig& config) {
  mesh.validate();
  p.validate();
  config.validate();

  if (std::isfinite(p.ec)) {
    const auto c = exact::solve_constants(p);
    const double xc = exact::x_c(config.t_end, c, p);
    if (!(xc < 0.6 * mesh.x_max)) {
      std::ostringstream os;
      os << "front reaches x = " << xc << " by t = " << config.t_end
         << "; x_max must exceed " << xc / 0.6;
      throw DomainTooSmallError(os.str(), xc / 0.6);
    }
  }

  std::vector<double> times = config.output_times;
  if (times.empty()) times.push_back(config.t_end);
  std::sort(times.begin(), times.end());

  const double dt_max = stable_dt(mesh, p, config.cfl);
  SimState state = init_state(mesh, p);
  std::vector<FieldProfile> out;
  for (double t : times) {
    const double span = t - state.t;
    if (span > 0.0) {
      const auto n = static_cast<std::size_t>(std::ceil(span / dt_max * (1.0 - 1e-12)));
      advance(state, p, span / static_cast<double>(n), n);
      state.t = t;
    }
    FieldProfile snap = state.snapshot();
    if (std::isfinite(p.ec)) {
      try {
        snap.xc = extract_front(snap, p);
      } catch (const Error&) {
        // No burned cell yet.
      }
    }
    out.push_back(std::move(snap));
  }
  return out;
}

double extract_front(const FieldProfile& profile, const ProblemParams& p) {
  const auto& e = profile.e;
  require(e.size() == profile.x.size(), "profile x and e differ in length");
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    if (e[i] > p.ec && e[i + 1] <= p.ec) {
      const double x0 = profile.x[i];
      const double x1 = profile.x[i + 1];
      if (!std::isfinite(e[i])) return x1;
      return x0 + (e[i] - p.ec) / (e[i] - e[i + 1]) * (x1 - x0);
    }
  }
  fail(ErrorKind::FrontNotFound, "energy density never crosses ec");
}

}  // namespace magdiff::sim
