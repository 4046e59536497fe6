// Simulated versus exact field: error norms, front error, observed orders.

#ifndef MAGDIFF_VERIFY_HPP
#define MAGDIFF_VERIFY_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "magdiff/error.hpp"
#include "magdiff/exact.hpp"
#include "magdiff/field_profile.hpp"
#include "magdiff/params.hpp"

namespace magdiff::verify {

struct Norms {
  double L1 = 0.0;    // sum |err| dx
  double L2 = 0.0;    // sqrt(sum err^2 dx)
  double Linf = 0.0;
  double linf_at = 0.0;  // position of the largest error
};

using FieldFn = std::function<double(double)>;

/// Errors at the profile's sample points; cell widths are taken as the
/// uniform spacing x[1] - x[0] (or 2 x[0] for a single sample).
Norms norms(const FieldProfile& sim, const FieldFn& exact_B);

struct Entry {
  std::size_t N = 0;
  Norms errors;
  double front_error = 0.0;  // |simulated front - xc(t)|
  double dx = 0.0;
  double runtime_s = 0.0;
  std::optional<ErrorKind> failure;
  std::string message;

  bool ok() const { return !failure.has_value(); }
};

struct Order {
  std::size_t N_coarse;
  std::size_t N_fine;
  // log(err_coarse / err_fine) / log(N_fine / N_coarse); nullopt when the
  // fine error is zero (saturated).
  std::optional<double> L1;
  std::optional<double> L2;
  std::optional<double> Linf;
};

/// One record per consecutive pair of successful entries.
std::vector<Order> convergence_orders(const std::vector<Entry>& entries);

struct ReportOptions {
  double x_max = 0.5;
  double cfl = 0.4;
  std::size_t profile_points = exact::ExactSolution::kDefaultPoints;
  quadrature::QuadratureSpec spec{};
  // Evaluate errors against these instead of the solved constants; used
  // for negative controls.
  std::optional<exact::SolvedConstants> constants_override;
};

struct ComparisonReport {
  ProblemParams params;
  exact::SolvedConstants constants;
  double t = 0.0;
  std::vector<Entry> entries;
  std::vector<Order> orders;
  bool verdict = false;
  std::string verdict_reason;
};

/// True iff every entry succeeded, L1, L2 and Linf strictly decrease along
/// the entries and the finest front error is below two cells.
bool judge(const std::vector<Entry>& entries, std::string* reason = nullptr);

/// Requires N_list strictly ascending with at least two values. Simulator
/// failures are recorded on their entry and fail the verdict.
ComparisonReport build_report(const ProblemParams& p, double t,
                              const std::vector<std::size_t>& N_list,
                              const ReportOptions& options = {});

}  // namespace magdiff::verify

#endif  // MAGDIFF_VERIFY_HPP
