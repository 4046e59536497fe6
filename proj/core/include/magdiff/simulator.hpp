// Explicit finite-volume solver for
//
//   dB/dt = d/dx (eta(e) / mu0 dB/dx),   de/dt = eta(e) (dB/dx / mu0)^2
//
// on 0 < x < x_max with B = B0 at x = 0, B = 0 at x = x_max and zero
// initial data. Cell-centred B and e; face fluxes E = k dB/dx.
//
// Faces between two cells of equal resistivity use that resistivity. A face
// with a burned cell on the left and a cold one on the right places the
// front inside the gap from a quadratic fit of ln e over the next cold cells
// and uses the series resistance of the burned and cold parts. Heating is
// 1/eta times the mean of the squared adjacent face fluxes, with the
// first cold cell heated partly at the burned rate when the fitted front
// has entered it.

#ifndef MAGDIFF_SIMULATOR_HPP
#define MAGDIFF_SIMULATOR_HPP

#include <cstddef>
#include <vector>

#include "magdiff/field_profile.hpp"
#include "magdiff/params.hpp"

namespace magdiff::sim {

struct Mesh1D {
  std::size_t n_cells = 1600;
  double x_max = 0.5;

  void validate() const;
  double dx() const { return x_max / static_cast<double>(n_cells); }
  double center(std::size_t i) const { return (static_cast<double>(i) + 0.5) * dx(); }
  std::vector<double> centers() const;
};

struct SimConfig {
  double t_end = 0.4;
  double cfl = 0.4;
  std::vector<double> output_times;  // empty: just t_end

  void validate() const;
};

struct SimState {
  Mesh1D mesh;
  double t = 0.0;
  std::vector<double> B;
  std::vector<double> e;
  std::vector<double> eta;
  std::vector<double> j_faces;  // n_cells + 1 faces, (1/mu0) dB/dx
  std::size_t steps = 0;

  FieldProfile snapshot() const;
};

SimState init_state(const Mesh1D& mesh, const ProblemParams& p);

/// cfl * mu0 dx^2 / (2 etaL); cfl in (0, 0.5].
double stable_dt(const Mesh1D& mesh, const ProblemParams& p, double cfl);

/// One step of size dt <= stable_dt(mesh, p, 0.5). Throws
/// ErrorKind::NumericalFailure, naming the step, if a value goes non-finite.
SimState step(const SimState& state, const ProblemParams& p, double dt);

/// Advances `state` by n equal steps of size dt, in place.
void advance(SimState& state, const ProblemParams& p, double dt, std::size_t n);

/// Snapshots at config.output_times (sorted ascending). Each interval
/// between outputs is split into equal steps no larger than the stable one.
/// Requires the predicted front at t_end to stay below 0.6 x_max, otherwise
/// throws DomainTooSmallError with the x_max that would be needed.
std::vector<FieldProfile> run(const Mesh1D& mesh, const ProblemParams& p,
                              const SimConfig& config);

/// Position where e crosses ec, by linear interpolation between the two cell
/// centres bracketing the first drop to e <= ec. Throws FrontNotFound.
double extract_front(const FieldProfile& profile, const ProblemParams& p);

}  // namespace magdiff::sim

#endif  // MAGDIFF_SIMULATOR_HPP
