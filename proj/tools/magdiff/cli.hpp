// Command-line front end: config loading, subcommands and file emission.

#ifndef MAGDIFF_CLI_HPP
#define MAGDIFF_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "magdiff/error.hpp"
#include "magdiff/params.hpp"
#include "magdiff/quadrature.hpp"
#include "magdiff/simulator.hpp"

namespace magdiff::cli {

enum ExitCode {
  kOk = 0,
  kVerdictFail = 1,
  kInvalidConfig = 2,
  kRootFailure = 3,
  kDomain = 4,
  kAccuracy = 5,
};

struct RunConfig {
  ProblemParams problem;
  quadrature::QuadratureSpec quadrature;
  double x_max = 0.5;
  std::vector<std::size_t> cells{200, 400, 800, 1600};
  double t_end = 0.4;
  double cfl = 0.4;

  void validate() const;
};

/// JSON object with keys B0, ec, etaL, etaS and optionally mu0, xmax, cells
/// (integer or list), t_end, cfl, quadrature {rel_tol, abs_tol,
/// max_subdivisions}. ec may be the string "inf". Unknown keys are rejected.
/// Throws Error(InvalidArgument) naming the offending key.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Decimal with explicit exponent and 12 significant digits; "inf"/"nan"
/// for non-finite values.
std::string format_number(double v);

int exit_code(ErrorKind kind);

/// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace magdiff::cli

#endif  // MAGDIFF_CLI_HPP
