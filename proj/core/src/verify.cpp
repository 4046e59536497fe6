#include "magdiff/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "magdiff/simulator.hpp"

namespace magdiff::verify {

Norms norms(const FieldProfile& sim, const FieldFn& exact_B) {
  require(!sim.x.empty() && sim.x.size() == sim.B.size(),
          "profile needs matching, non-empty x and B");
  const double dx = sim.x.size() > 1 ? sim.x[1] - sim.x[0] : 2.0 * sim.x[0];
  Norms n;
  double sq = 0.0;
  for (std::size_t i = 0; i < sim.x.size(); ++i) {
    const double err = std::abs(sim.B[i] - exact_B(sim.x[i]));
    n.L1 += err * dx;
    sq += err * err * dx;
    if (err > n.Linf) {
      n.Linf = err;
      n.linf_at = sim.x[i];
    }
  }
  n.L2 = std::sqrt(sq);
  return n;
}

std::vector<Order> convergence_orders(const std::vector<Entry>& entries) {
  std::vector<Order> out;
  const Entry* prev = nullptr;
  for (const Entry& e : entries) {
    if (!e.ok()) continue;
    if (prev != nullptr) {
      const double span = std::log(static_cast<double>(e.N) / static_cast<double>(prev->N));
      auto order = [span](double coarse, double fine) -> std::optional<double> {
        if (fine == 0.0) return std::nullopt;
        return std::log(coarse / fine) / span;
      };
      out.push_back({prev->N, e.N, order(prev->errors.L1, e.errors.L1),
                     order(prev->errors.L2, e.errors.L2),
                     order(prev->errors.Linf, e.errors.Linf)});
    }
    prev = &e;
  }
  return out;
}

bool judge(const std::vector<Entry>& entries, std::string* reason) {
  auto verdict = [reason](bool ok, const std::string& why) {
    if (reason != nullptr) *reason = why;
    return ok;
  };
  if (entries.size() < 2) return verdict(false, "fewer than two meshes");
  for (const Entry& e : entries) {
    if (!e.ok()) return verdict(false, "N = " + std::to_string(e.N) + " failed: " + e.message);
  }
  for (std::size_t k = 1; k < entries.size(); ++k) {
    const Norms& a = entries[k - 1].errors;
    const Norms& b = entries[k].errors;
    if (!(b.L1 < a.L1 && b.L2 < a.L2 && b.Linf < a.Linf)) {
      return verdict(false, "errors do not decrease from N = " +
                                std::to_string(entries[k - 1].N) + " to N = " +
                                std::to_string(entries[k].N));
    }
  }
  const Entry& finest = entries.back();
  if (!(finest.front_error < 2.0 * finest.dx)) {
    std::ostringstream os;
    os << "front error " << finest.front_error << " at N = " << finest.N
       << " is not below 2 dx = " << 2.0 * finest.dx;
    return verdict(false, os.str());
  }
  return verdict(true, "errors decrease monotonically and the front is within 2 dx");
}

ComparisonReport build_report(const ProblemParams& p, double t,
                              const std::vector<std::size_t>& N_list,
                              const ReportOptions& options) {
  p.validate();
  require(std::isfinite(p.ec), "comparison needs a finite ec");
  require(std::isfinite(t) && t > 0.0, "t must be positive");
  require(N_list.size() >= 2, "need at least two mesh sizes");
  for (std::size_t k = 1; k < N_list.size(); ++k) {
    require(N_list[k] > N_list[k - 1], "mesh sizes must be strictly ascending");
  }

  ComparisonReport report;
  report.params = p;
  report.t = t;
  report.constants = options.constants_override.value_or(
      exact::solve_constants(p, options.spec));
  const exact::ExactSolution exact(p, report.constants, options.profile_points,
                                   options.spec);
  const double xc = exact.x_c(t);

  sim::SimConfig config;
  config.t_end = t;
  config.cfl = options.cfl;
  for (std::size_t N : N_list) {
    Entry entry;
    entry.N = N;
    const sim::Mesh1D mesh{N, options.x_max};
    entry.dx = mesh.dx();
    const auto start = std::chrono::steady_clock::now();
    try {
      const auto snaps = sim::run(mesh, p, config);
      entry.runtime_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const FieldProfile& snap = snaps.back();
      entry.errors = norms(snap, [&](double x) { return exact.field_at(x, t); });
      entry.front_error = std::abs(sim::extract_front(snap, p) - xc);
    } catch (const Error& err) {
      entry.runtime_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      entry.failure = err.kind();
      entry.message = err.what();
    }
    report.entries.push_back(std::move(entry));
  }
  report.orders = convergence_orders(report.entries);
  report.verdict = judge(report.entries, &report.verdict_reason);
  return report;
}

}  // namespace magdiff::verify
