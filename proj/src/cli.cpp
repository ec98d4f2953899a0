#include "mcshane/cli.hpp"

#include "mcshane/deadzone.hpp"
#include "mcshane/identity.hpp"
#include "mcshane/report_io.hpp"
#include "mcshane/return_point.hpp"
#include "mcshane/torus_group.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace mcshane::cli {

using nlohmann::json;

namespace {

struct RunConfig {
  std::string surface = "modular";
  std::string traces;
  std::string matrix;
  std::string x;
  int ball = 0;
  int depth = -1;
  std::string eps;
  std::string resolution;
  std::string out;
  std::string format;  // empty: csv for scan, json elsewhere
  int threads = 0;
  bool intervals = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
  return parts;
}

// Exact value of "p/q", "123", "0.001" or "1e-3".
Rational parse_exact(const std::string& text) {
  if (text.find_first_of(".eE") == std::string::npos) return parse_rational(text);
  const auto e = text.find_first_of("eE");
  const std::string mantissa = text.substr(0, e);
  long exponent = 0;
  if (e != std::string::npos) {
    std::size_t used = 0;
    try {
      exponent = std::stol(text.substr(e + 1), &used);
    } catch (const std::exception&) {
      throw DomainError("malformed number '" + text + "'");
    }
    if (used != text.size() - e - 1) throw DomainError("malformed number '" + text + "'");
  }
  const auto dot = mantissa.find('.');
  std::string digits = mantissa;
  if (dot != std::string::npos) {
    digits.erase(dot, 1);
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
  }
  if (digits.empty() || digits == "-" || digits == "+") throw DomainError("malformed number '" + text + "'");
  Rational q = parse_rational(digits);
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  return exponent >= 0 ? Rational(q * ten_pow) : Rational(q / ten_pow);
}

PuncturedTorusGroup make_group(const RunConfig& c) {
  if (!c.traces.empty()) {
    const auto t = split(c.traces, ',');
    if (t.size() != 3) throw DomainError("--traces needs three comma-separated values");
    return from_traces(parse_scalar(t[0], true), parse_scalar(t[1], true), parse_scalar(t[2], true));
  }
  if (c.surface != "modular") throw DomainError("unknown surface '" + c.surface + "'; use modular or --traces");
  return modular_torus();
}

std::string surface_name(const PuncturedTorusGroup& g) { return g.name(); }

void require_modular(const PuncturedTorusGroup& g, const char* what) {
  if (!g.is_modular()) throw DomainError(std::string(what) + " needs exact cusp lifts; use the modular torus");
}

void require_ball(int n) {
  if (n < 1) throw DomainError("--ball must be at least 1");
}

void emit(const RunConfig& c, const json& j, std::ostream& out) {
  if (c.format == "csv") throw DomainError("this subcommand only writes json");
  if (c.out.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw DomainError("cannot open " + c.out);
  f << j.dump(2) << '\n';
}

int classify(const RunConfig& c, std::ostream& out) {
  const auto e = split(c.matrix, ',');
  if (e.size() != 4) throw DomainError("--matrix needs four comma-separated entries a,b,c,d");
  const MobiusMap m(parse_scalar(e[0], true), parse_scalar(e[1], true), parse_scalar(e[2], true),
                    parse_scalar(e[3], true));
  emit(c, io::classification_json(m), out);
  return kOk;
}

int identity(const RunConfig& c, std::ostream& out) {
  const PuncturedTorusGroup g = make_group(c);
  SumOptions opts;
  opts.threads = resolve_threads(c.threads);
  if (c.depth >= 0 && !c.eps.empty()) throw DomainError("--eps and --depth are exclusive");
  if (c.depth >= 0) {
    opts.depth = c.depth;
  } else {
    const double eps = c.eps.empty() ? 1e-12 : parse_scalar(c.eps, true).to_double();
    if (!(eps > 0)) throw DomainError("--eps must be positive");
    opts.eps = eps;
  }
  emit(c, io::identity_json(mcshane_sum(g, opts), surface_name(g)), out);
  return kOk;
}

int deadzone(const RunConfig& c, std::ostream& out) {
  const PuncturedTorusGroup g = make_group(c);
  require_modular(g, "deadzone");
  const int n = c.ball > 0 ? c.ball : 10;
  require_ball(n);
  const BoundaryPoint x(parse_rational(c.x));
  const Deadzone dz = deadzone_of(g, x, n);
  const EndpointCheck ends = verify_endpoints(g, dz, n);
  emit(c, io::deadzone_json(dz, &ends), out);
  return kOk;
}

int return_point(const RunConfig& c, std::ostream& out) {
  const PuncturedTorusGroup g = make_group(c);
  require_modular(g, "return-point");
  const int n = c.ball > 0 ? c.ball : 8;
  require_ball(n);
  const BoundaryPoint x(parse_rational(c.x));
  const ReturnPoint rp = highest_point_of_return(g, x, n);
  const BoundaryPoint center = simple_center_from(g, x, n);
  const Deadzone dz = deadzone_of(g, center, n);
  emit(c, io::return_point_json(rp, center, &dz), out);
  return kOk;
}

int scan(const RunConfig& c, std::ostream& out) {
  const PuncturedTorusGroup g = make_group(c);
  const int n = c.ball > 0 ? c.ball : 8;
  require_ball(n);
  if (c.resolution.empty()) throw DomainError("scan needs --resolution");
  const Scalar step = g.is_exact() ? Scalar(parse_exact(c.resolution)) : parse_scalar(c.resolution, true);
  if (!(step > Scalar(0))) throw DomainError("--resolution must be positive");
  const unsigned threads = resolve_threads(c.threads);
  const CoverageReport cov = gap_measure(g, c.depth >= 0 ? c.depth : 4, 0, threads);
  const auto points = scan_simplicity(g, step, n, cov.deadzones, threads);
  const ScanCounts counts = count_verdicts(points);
  json summary = io::scan_json(points, counts, step, n);
  if (c.format != "json") {
    summary.erase("grid");
    if (c.out.empty()) {
      io::write_scan_csv(out, points);
      return kOk;
    }
    std::ofstream f(c.out);
    if (!f) throw DomainError("cannot open " + c.out);
    io::write_scan_csv(f, points);
    out << summary.dump(2) << '\n';
    return kOk;
  }
  emit(c, summary, out);
  return kOk;
}

int coverage(const RunConfig& c, std::ostream& out) {
  const PuncturedTorusGroup g = make_group(c);
  const int depth = c.depth >= 0 ? c.depth : 4;
  const CoverageReport r = gap_measure(g, depth, std::max(c.ball, 0), resolve_threads(c.threads));
  emit(c, io::coverage_json(r, c.intervals), out);
  return kOk;
}

}  // namespace

unsigned resolve_threads(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  if (const char* env = std::getenv("MCSHANE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"McShane identity deadzones on once-punctured tori", "mcshane"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--surface", c.surface, "surface: modular")->check(CLI::IsMember({"modular"}));
  app.add_option("--traces", c.traces, "Fricke traces x,y,z (decimals allowed)");
  app.add_option("--out", c.out, "output file");
  app.add_option("--format", c.format, "json or csv (default: csv for scan, json otherwise)")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", c.threads, "worker threads (default: MCSHANE_THREADS or all cores)");

  auto* cls = app.add_subcommand("classify", "classify a Mobius map");
  cls->add_option("--matrix", c.matrix, "entries a,b,c,d")->required();
  auto* id = app.add_subcommand("identity", "sum the identity over the slope tree");
  id->add_option("--eps", c.eps, "prune terms below eps (default 1e-12)");
  id->add_option("--depth", c.depth, "visit all slopes to this depth")->check(CLI::NonNegativeNumber);
  auto* dz = app.add_subcommand("deadzone", "deadzone of a simple center");
  dz->add_option("--x", c.x, "center p/q")->required();
  dz->add_option("--ball", c.ball, "ball radius (default 10)");
  auto* rp = app.add_subcommand("return-point", "highest point of return and its simple center");
  rp->add_option("--x", c.x, "non-simple rational p/q")->required();
  rp->add_option("--ball", c.ball, "ball radius (default 8)");
  auto* sc = app.add_subcommand("scan", "classify a uniform grid in [0, 1)");
  sc->add_option("--resolution", c.resolution, "grid step, exact decimal or p/q")->required();
  sc->add_option("--ball", c.ball, "ball radius (default 8)");
  sc->add_option("--depth", c.depth, "slope depth of the deadzones used for ids (default 4)")
      ->check(CLI::NonNegativeNumber);
  auto* cov = app.add_subcommand("coverage", "total deadzone width to a slope depth");
  cov->add_option("--depth", c.depth, "slope depth (default 4)")->check(CLI::NonNegativeNumber);
  cov->add_option("--ball", c.ball, "simplicity radius for centers (default 0: skip)");
  cov->add_flag("--intervals", c.intervals, "list every interval");
  for (CLI::App* sub : {cls, id, dz, rp, sc, cov}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }

  try {
    if (*cls) return classify(c, out);
    if (*id) return identity(c, out);
    if (*dz) return deadzone(c, out);
    if (*rp) return return_point(c, out);
    if (*sc) return scan(c, out);
    if (*cov) return coverage(c, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariantViolation;
  }
  return kValidationError;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace mcshane::cli
