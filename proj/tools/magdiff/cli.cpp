#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "magdiff/exact.hpp"
#include "magdiff/verify.hpp"

namespace magdiff::cli {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad_config(const std::string& what) {
  fail(ErrorKind::InvalidArgument, "config: " + what);
}

double number_at(const Json& doc, const char* key) {
  const Json& v = doc.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string() && std::string(key) == "ec" && v.get<std::string>() == "inf")
    return std::numeric_limits<double>::infinity();
  bad_config(std::string("'") + key + "' must be a number");
}

std::size_t count_of(const Json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<long long>() <= 0)
    bad_config("'" + key + "' must hold positive integers");
  return v.get<std::size_t>();
}

void write_json(std::ostream& os, const Json& v, int depth) {
  const std::string pad(2 * depth, ' ');
  const std::string inner(2 * (depth + 1), ' ');
  if (v.is_object()) {
    if (v.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      os << (first ? "" : ",\n") << inner << Json(it.key()).dump() << ": ";
      write_json(os, it.value(), depth + 1);
      first = false;
    }
    os << "\n" << pad << "}";
  } else if (v.is_array()) {
    if (v.empty()) {
      os << "[]";
      return;
    }
    os << "[\n";
    for (std::size_t k = 0; k < v.size(); ++k) {
      os << (k ? ",\n" : "") << inner;
      write_json(os, v[k], depth + 1);
    }
    os << "\n" << pad << "]";
  } else if (v.is_number_float()) {
    const double x = v.get<double>();
    if (std::isfinite(x)) {
      os << format_number(x);
    } else {
      os << "null";  // JSON has no infinities
    }
  } else {
    os << v.dump();
  }
}

std::string to_json_text(const Json& v) {
  std::ostringstream os;
  write_json(os, v, 0);
  os << "\n";
  return os.str();
}

// Writes to `path`, or to `out` when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(ErrorKind::InvalidArgument, "cannot open '" + path + "' for writing");
  file << text;
  if (!file) fail(ErrorKind::InvalidArgument, "failed writing '" + path + "'");
}

class Csv {
 public:
  explicit Csv(std::initializer_list<const char*> header) {
    bool first = true;
    for (const char* h : header) {
      os_ << (first ? "" : ",") << h;
      first = false;
    }
    os_ << '\n';
  }

  template <typename... Cells>
  void row(const Cells&... cells) {
    bool first = true;
    ((os_ << (first ? "" : ",") << cell(cells), first = false), ...);
    os_ << '\n';
  }

  std::string str() const { return os_.str(); }

 private:
  static std::string cell(double v) { return format_number(v); }
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(std::size_t n) { return std::to_string(n); }

  std::ostringstream os_;
};

Json params_json(const ProblemParams& p) {
  return {{"B0", p.B0}, {"ec", p.ec}, {"etaL", p.etaL}, {"etaS", p.etaS}, {"mu0", p.mu0}};
}

Json constants_json(const exact::SolvedConstants& c) {
  return {{"Bc", c.Bc}, {"h", c.h}, {"AL", c.AL}, {"AS", c.AS}, {"b", c.b},
          {"r", c.r},   {"Hcal", c.Hcal}, {"Bcal", c.Bcal}};
}

Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

// Options shared by the subcommands; not every command reads every field.
struct Options {
  std::string config;
  std::vector<double> t;
  std::size_t points = exact::ExactSolution::kDefaultPoints;
  std::vector<std::size_t> cells;
  std::string out;
  std::string format;
  std::vector<double> b;
  std::vector<double> r;
  double perturb_h = 1.0;
  double perturb_bc = 1.0;
};

std::string require_format(const Options& o, const char* fallback) {
  return o.format.empty() ? fallback : o.format;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const RunConfig cfg = load_config(o.config);
  const auto c = exact::solve_constants(cfg.problem, cfg.quadrature);
  const auto curve = exact::bracket_curve(cfg.problem, cfg.quadrature);
  if (require_format(o, "json") == "csv") {
    Csv csv{"h", "bc1", "bc2"};
    for (const auto& s : curve) csv.row(s.h, s.bc1, s.bc2);
    emit(o.out, csv.str(), out);
    return kOk;
  }
  Json doc;
  doc["constants"] = constants_json(c);
  Json rows = Json::array();
  for (const auto& s : curve) rows.push_back({{"h", s.h}, {"bc1", s.bc1}, {"bc2", s.bc2}});
  doc["curve"] = rows;
  emit(o.out, to_json_text(doc), out);
  return kOk;
}

int cmd_profile(const Options& o, std::ostream& out) {
  const RunConfig cfg = load_config(o.config);
  const double t = o.t.empty() ? cfg.t_end : o.t.front();
  require(o.t.size() <= 1, "profile takes a single --t");
  require(std::isfinite(t) && t > 0.0, "--t must be positive");
  const exact::ExactSolution ex(cfg.problem, o.points, cfg.quadrature);
  const auto& pr = ex.profile();
  const double xc = ex.x_c(t);

  std::vector<double> x(pr.u.size()), e(pr.u.size());
  for (std::size_t k = 0; k < pr.u.size(); ++k) {
    x[k] = pr.u[k] * xc;
    e[k] = x[k] > 0.0 ? ex.energy_at(x[k], t) : std::numeric_limits<double>::infinity();
  }
  if (require_format(o, "csv") == "json") {
    Json rows = Json::array();
    for (std::size_t k = 0; k < pr.u.size(); ++k)
      rows.push_back({{"u", pr.u[k]}, {"f", pr.f[k]}, {"x", x[k]}, {"B", pr.f[k]}, {"e", e[k]}});
    Json doc{{"t", t}, {"xc", xc}, {"constants", constants_json(ex.constants())}, {"rows", rows}};
    emit(o.out, to_json_text(doc), out);
    return kOk;
  }
  Csv csv{"u", "f", "x", "B", "e"};
  for (std::size_t k = 0; k < pr.u.size(); ++k) csv.row(pr.u[k], pr.f[k], x[k], pr.f[k], e[k]);
  emit(o.out, csv.str(), out);
  return kOk;
}

// <stem>_N<cells>_t<time><ext>, used when one invocation yields several files.
std::string snapshot_path(const std::string& out, std::size_t n, double t) {
  const std::filesystem::path p(out);
  char tag[64];
  std::snprintf(tag, sizeof tag, "_N%zu_t%g", n, t);
  return (p.parent_path() / (p.stem().string() + tag + p.extension().string())).string();
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const RunConfig cfg = load_config(o.config);
  const std::vector<std::size_t> cells =
      o.cells.empty() ? std::vector<std::size_t>{cfg.cells.back()} : o.cells;
  sim::SimConfig sc;
  sc.cfl = cfg.cfl;
  sc.output_times = o.t.empty() ? std::vector<double>{cfg.t_end} : o.t;
  sc.t_end = cfg.t_end;
  for (double t : sc.output_times) {
    require(std::isfinite(t) && t >= 0.0, "--t must be non-negative");
    sc.t_end = std::max(sc.t_end, t);
  }
  const bool many = cells.size() * sc.output_times.size() > 1;
  require(!many || !o.out.empty(), "several snapshots need --out");
  require(require_format(o, "csv") == "csv", "simulate writes CSV only");

  for (std::size_t n : cells) {
    const auto snaps = sim::run(sim::Mesh1D{n, cfg.x_max}, cfg.problem, sc);
    for (std::size_t k = 0; k < snaps.size(); ++k) {
      Csv csv{"x", "B", "e"};
      const FieldProfile& s = snaps[k];
      for (std::size_t i = 0; i < s.x.size(); ++i) csv.row(s.x[i], s.B[i], s.e[i]);
      emit(many ? snapshot_path(o.out, n, s.t) : o.out, csv.str(), out);
    }
  }
  return kOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const RunConfig cfg = load_config(o.config);
  require(o.t.size() <= 1, "compare takes a single --t");
  const double t = o.t.empty() ? cfg.t_end : o.t.front();
  const std::vector<std::size_t> cells = o.cells.empty() ? cfg.cells : o.cells;

  verify::ReportOptions ro;
  ro.x_max = cfg.x_max;
  ro.cfl = cfg.cfl;
  ro.spec = cfg.quadrature;
  if (o.perturb_h != 1.0 || o.perturb_bc != 1.0) {
    const auto c = exact::solve_constants(cfg.problem, cfg.quadrature);
    ro.constants_override = exact::constants_from(cfg.problem, o.perturb_bc * c.Bc,
                                                  o.perturb_h * c.h, cfg.quadrature);
  }
  const verify::ComparisonReport rep = verify::build_report(cfg.problem, t, cells, ro);

  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json j{{"N", e.N},
           {"L1", e.errors.L1},
           {"L2", e.errors.L2},
           {"Linf", e.errors.Linf},
           {"front_error", e.front_error},
           {"runtime_s", e.runtime_s},
           {"dx", e.dx},
           {"Linf_at", e.errors.linf_at}};
    if (!e.ok()) j["error"] = {{"kind", to_string(*e.failure)}, {"message", e.message}};
    entries.push_back(j);
  }
  Json orders = Json::array();
  for (const auto& r : rep.orders) {
    orders.push_back({{"N_coarse", r.N_coarse},
                      {"N_fine", r.N_fine},
                      {"L1", optional_number(r.L1)},
                      {"L2", optional_number(r.L2)},
                      {"Linf", optional_number(r.Linf)}});
  }
  Json doc{{"params", params_json(rep.params)},
           {"constants", constants_json(rep.constants)},
           {"t", rep.t},
           {"entries", entries},
           {"orders", orders},
           {"verdict", rep.verdict ? "pass" : "fail"},
           {"verdict_reason", rep.verdict_reason}};
  emit(o.out, to_json_text(doc), out);
  return rep.verdict ? kOk : kVerdictFail;
}

int cmd_scan(const Options& o, std::ostream& out) {
  quadrature::QuadratureSpec spec;
  if (!o.config.empty()) spec = load_config(o.config).quadrature;
  const auto rows = exact::scan_table(o.b, o.r, spec);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (require_format(o, "csv") == "json") {
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json j{{"b", row.b}, {"r", row.r}};
      j["Hcal"] = row.value ? Json(row.value->Hcal) : Json(nullptr);
      j["Bcal"] = row.value ? Json(row.value->Bcal) : Json(nullptr);
      j["status"] = row.value ? "ok" : to_string(*row.failure);
      arr.push_back(j);
    }
    emit(o.out, to_json_text(Json{{"rows", arr}}), out);
    return kOk;
  }
  Csv csv{"b", "r", "Hcal", "Bcal", "status"};
  for (const auto& row : rows) {
    csv.row(row.b, row.r, row.value ? row.value->Hcal : nan, row.value ? row.value->Bcal : nan,
            std::string(row.value ? "ok" : to_string(*row.failure)));
  }
  emit(o.out, csv.str(), out);
  return kOk;
}

}  // namespace

void RunConfig::validate() const {
  problem.validate();
  quadrature.validate();
  require(std::isfinite(x_max) && x_max > 0.0, "config: 'xmax' must be positive");
  require(!cells.empty(), "config: 'cells' must not be empty");
  for (std::size_t n : cells) require(n >= 8, "config: 'cells' entries must be >= 8");
  require(std::isfinite(t_end) && t_end > 0.0, "config: 't_end' must be positive");
  require(cfl > 0.0 && cfl <= 0.5, "config: 'cfl' must lie in (0, 0.5]");
}

RunConfig parse_config(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad_config(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad_config("top level must be an object");

  static const std::set<std::string> known{"B0",   "ec",   "etaL",  "etaS", "mu0",
                                           "xmax", "cells", "t_end", "cfl",  "quadrature"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!known.count(it.key())) bad_config("unknown key '" + it.key() + "'");
  }
  for (const char* key : {"B0", "ec", "etaL", "etaS"}) {
    if (!doc.contains(key)) bad_config(std::string("missing required key '") + key + "'");
  }

  RunConfig cfg;
  cfg.problem.B0 = number_at(doc, "B0");
  cfg.problem.ec = number_at(doc, "ec");
  cfg.problem.etaL = number_at(doc, "etaL");
  cfg.problem.etaS = number_at(doc, "etaS");
  if (doc.contains("mu0")) cfg.problem.mu0 = number_at(doc, "mu0");
  if (doc.contains("xmax")) cfg.x_max = number_at(doc, "xmax");
  if (doc.contains("t_end")) cfg.t_end = number_at(doc, "t_end");
  if (doc.contains("cfl")) cfg.cfl = number_at(doc, "cfl");
  if (doc.contains("cells")) {
    const Json& c = doc["cells"];
    cfg.cells.clear();
    if (c.is_array()) {
      for (const Json& v : c) cfg.cells.push_back(count_of(v, "cells"));
    } else {
      cfg.cells.push_back(count_of(c, "cells"));
    }
  }
  if (doc.contains("quadrature")) {
    const Json& q = doc["quadrature"];
    if (!q.is_object()) bad_config("'quadrature' must be an object");
    for (auto it = q.begin(); it != q.end(); ++it) {
      const std::string& k = it.key();
      if (k == "rel_tol") {
        cfg.quadrature.rel_tol = number_at(q, "rel_tol");
      } else if (k == "abs_tol") {
        cfg.quadrature.abs_tol = number_at(q, "abs_tol");
      } else if (k == "max_subdivisions") {
        cfg.quadrature.max_subdivisions = count_of(it.value(), "quadrature.max_subdivisions");
      } else {
        bad_config("unknown key 'quadrature." + k + "'");
      }
    }
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  require(!path.empty(), "--config is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
      return kInvalidConfig;
    case ErrorKind::NoRoot:
    case ErrorKind::AmbiguousRoot:
      return kRootFailure;
    case ErrorKind::DomainTooSmall:
      return kDomain;
    case ErrorKind::AccuracyFailure:
    case ErrorKind::NumericalFailure:
    case ErrorKind::FrontNotFound:
      return kAccuracy;
  }
  return kAccuracy;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sharp-front magnetic diffusion: exact solution and simulator"};
  app.name("magdiff");
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* cmd) {
    cmd->add_option("--out", o.out, "Output file (default: stdout)");
    cmd->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_config = [&o](CLI::App* cmd) {
    cmd->add_option("--config", o.config, "JSON configuration")->required();
  };

  auto* solve = app.add_subcommand("solve", "Solve for Bc and h; emit the bracketing curves");
  add_config(solve);
  add_common(solve);

  auto* profile = app.add_subcommand("profile", "Similarity profile f(u) and fields at time t");
  add_config(profile);
  add_common(profile);
  profile->add_option("--t", o.t, "Time (default: t_end)")->expected(1);
  profile->add_option("--points", o.points, "Profile sample count")->check(CLI::Range(16, 10000000));

  auto* simulate = app.add_subcommand("simulate", "Run the finite-volume simulator");
  add_config(simulate);
  add_common(simulate);
  simulate->add_option("--t", o.t, "Snapshot times (comma separated or repeated)")->delimiter(',');
  simulate->add_option("--cells", o.cells, "Cell counts")->delimiter(',');

  auto* compare = app.add_subcommand("compare", "Mesh-refinement comparison report (JSON)");
  add_config(compare);
  add_common(compare);
  compare->add_option("--t", o.t, "Comparison time (default: t_end)")->expected(1);
  compare->add_option("--cells", o.cells, "Cell counts, ascending")->delimiter(',');
  compare->add_option("--perturb-h", o.perturb_h, "Scale h of the exact solution (negative control)");
  compare->add_option("--perturb-bc", o.perturb_bc, "Scale Bc of the exact solution (negative control)");

  auto* scan = app.add_subcommand("scan", "Table of (Hcal, Bcal) over b and r");
  add_common(scan);
  scan->add_option("--config", o.config, "Optional config (quadrature settings only)");
  scan->add_option("--b", o.b, "b values")->delimiter(',')->required();
  scan->add_option("--r", o.r, "r values")->delimiter(',')->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidConfig;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, out);
    if (profile->parsed()) return cmd_profile(o, out);
    if (simulate->parsed()) return cmd_simulate(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
    return cmd_scan(o, out);
  } catch (const DomainTooSmallError& e) {
    err << "magdiff: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kDomain;
  } catch (const AmbiguousRootError& e) {
    err << "magdiff: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kRootFailure;
  } catch (const Error& e) {
    err << "magdiff: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

}  // namespace magdiff::cli
