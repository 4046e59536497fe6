#include "magdiff/params.hpp"

#include <cmath>
#include <sstream>

#include "magdiff/error.hpp"

namespace magdiff {

double mu0_from_diffusion_equation(const UnitGroup& u) {
  // eta/mu0 is a diffusivity: [resistivity]/[mu0] must equal [length]^2/[time].
  return kMu0SI * u.length_m * u.length_m / (u.time_s * u.resistivity_ohm_m);
}

double mu0_from_heating_equation(const UnitGroup& u) {
  // [e]/[time] = [resistivity] [B]^2 / ([length]^2 [mu0]^2)
  const double ratio = u.energy_density_J_m3 * u.length_m * u.length_m /
                       (u.time_s * u.resistivity_ohm_m * u.field_T * u.field_T);
  return kMu0SI * std::sqrt(ratio);
}

void ProblemParams::validate() const {
  auto check = [](bool ok, const char* what, double value) {
    if (!ok) {
      std::ostringstream os;
      os << what << " (got " << value << ")";
      fail(ErrorKind::InvalidArgument, os.str());
    }
  };
  check(std::isfinite(B0) && B0 > 0.0, "B0 must be positive", B0);
  check(!std::isnan(ec) && ec > 0.0, "ec must be positive", ec);
  check(std::isfinite(etaS) && etaS > 0.0, "etaS must be positive", etaS);
  check(std::isfinite(etaL) && etaL > etaS, "etaL must exceed etaS", etaL);
  check(std::isfinite(mu0) && mu0 > 0.0, "mu0 must be positive", mu0);
}

double ProblemParams::b() const { return B0 / std::sqrt(2.0 * mu0 * ec); }

}  // namespace magdiff
