#include <cmath>
#include <limits>

#include "doctest.h"
#include "check.hpp"
#include "magdiff/error.hpp"
#include "magdiff/params.hpp"

using namespace magdiff;

TEST_CASE("mu0 in the cm / us / kT unit group") {
  // Both governing equations must keep their form with the same mu0.
  const double diffusion = mu0_from_diffusion_equation();
  const double heating = mu0_from_heating_equation();
  CHECK(rel_diff(diffusion, 4.0 * M_PI * 1e-2) < 1e-12);
  CHECK(rel_diff(heating, 4.0 * M_PI * 1e-2) < 1e-12);
  CHECK(rel_diff(kMu0UnitGroup, diffusion) < 1e-12);
  CHECK(ProblemParams{}.mu0 == kMu0UnitGroup);
}

TEST_CASE("a unit group that breaks the heating equation is detected") {
  UnitGroup u;
  u.energy_density_J_m3 = 1e6;  // J/cm^3
  CHECK(rel_diff(mu0_from_diffusion_equation(u), mu0_from_heating_equation(u)) > 0.1);
}

TEST_CASE("parameter invariants") {
  ProblemParams p;
  CHECK_NOTHROW(p.validate());
  CHECK(p.b() == doctest::Approx(1.26157).epsilon(1e-5));
  CHECK(p.r() == doctest::Approx(100.0));

  auto rejects = [](ProblemParams q) {
    try {
      q.validate();
    } catch (const Error& e) {
      return e.kind() == ErrorKind::InvalidArgument;
    }
    return false;
  };
  ProblemParams q = p;
  q.B0 = 0.0;
  CHECK(rejects(q));
  q = p;
  q.ec = -1.0;
  CHECK(rejects(q));
  q = p;
  q.ec = std::numeric_limits<double>::quiet_NaN();
  CHECK(rejects(q));
  q = p;
  q.etaL = q.etaS;
  CHECK(rejects(q));
  q = p;
  q.mu0 = 0.0;
  CHECK(rejects(q));
  q = p;
  q.ec = std::numeric_limits<double>::infinity();
  CHECK_NOTHROW(q.validate());
}

TEST_CASE("resistivity at exactly ec is the cold value") {
  ProblemParams p;
  CHECK(p.eta(p.ec) == p.etaS);
  CHECK(p.eta(std::nextafter(p.ec, 1.0)) == p.etaL);
  CHECK(p.eta(0.0) == p.etaS);
}
