// Physical inputs and the unit group they are expressed in.
//
// Units throughout: length cm, time us, magnetic field 10^3 T, energy density
// 10^5 J/cm^3, resistivity 10^2 mOhm.cm. In this group both governing
// equations keep their SI form provided mu0 takes the value returned by
// mu0_in_unit_group().

#ifndef MAGDIFF_PARAMS_HPP
#define MAGDIFF_PARAMS_HPP

#include <numbers>

namespace magdiff {

struct UnitGroup {
  double length_m = 1e-2;             // cm
  double time_s = 1e-6;               // us
  double field_T = 1e3;               // 10^3 T
  double energy_density_J_m3 = 1e11;  // 10^5 J/cm^3
  double resistivity_ohm_m = 1e-3;    // 10^2 mOhm.cm
};

inline constexpr double kMu0SI = 4.0 * std::numbers::pi * 1e-7;  // T m / A

/// mu0 such that dB/dt = d/dx(eta/mu0 dB/dx) holds in `units`.
double mu0_from_diffusion_equation(const UnitGroup& units = {});

/// mu0 such that de/dt = eta (dB/dx / mu0)^2 holds in `units`.
double mu0_from_heating_equation(const UnitGroup& units = {});

/// Value used by default; both routes above agree on it for the default group.
inline constexpr double kMu0UnitGroup = 4.0 * std::numbers::pi * 1e-2;

struct ProblemParams {
  double B0 = 0.2;
  double ec = 0.1;  // may be +inf: resistivity never switches
  double etaL = 9.7e-3;
  double etaS = 9.7e-5;
  double mu0 = kMu0UnitGroup;

  /// Throws ErrorKind::InvalidArgument naming the violated invariant.
  void validate() const;

  double b() const;  // B0 / sqrt(2 mu0 ec)
  double r() const { return etaL / etaS; }

  /// Resistivity step: etaS for e <= ec, etaL above.
  double eta(double e) const noexcept { return e > ec ? etaL : etaS; }
};

}  // namespace magdiff

#endif  // MAGDIFF_PARAMS_HPP
