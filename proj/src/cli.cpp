#include "wcc/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "wcc/convergence.hpp"
#include "wcc/errors.hpp"
#include "wcc/families.hpp"
#include "wcc/geodesics.hpp"
#include "wcc/io.hpp"
#include "wcc/ode_oracle.hpp"
#include "wcc/verify.hpp"

namespace wcc::cli {
namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

struct Config {
  std::string c = "0";
  double s_min = -5.0;
  double s_max = 5.0;
  std::size_t n = 1001;
  std::string format = "csv";
  std::string out = "-";
  double tol = 1e-6;
  double step = 1e-4;
  bool reflect = false;
  std::string figure;
  std::string p, q;
  std::optional<double> xi0;
};

// Writes to stdout for "-", otherwise to the named file.
template <class Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path + "'");
  write(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

double single_c(const Config& cfg) {
  const auto list = io::parse_real_list(cfg.c);
  if (list.size() != 1) throw InvalidInput("--c takes a single value for this command");
  return list.front();
}

std::string interval_text(double lo, double hi) {
  std::ostringstream os;
  os << std::setprecision(8) << '(' << lo << ", " << hi << ')';
  return os.str();
}

// Applies the range rules: s_min < s_max, n >= 2, clipping to bounded domains.
Interval checked_range(const ClassifiedCurve& curve, const Config& cfg, std::ostream& err) {
  if (cfg.n < 2) throw InvalidInput("--n must be at least 2");
  if (!(cfg.s_min < cfg.s_max)) throw InvalidInput("--s-min must be less than --s-max");
  const auto dom = curve.domain();
  if (!dom.bounded()) return {cfg.s_min, cfg.s_max};
  const auto inner = curve.sampling_domain();
  Interval r{std::max(cfg.s_min, inner.lo), std::min(cfg.s_max, inner.hi)};
  if (!(r.lo < r.hi))
    throw DomainError("range does not meet the admissible domain " +
                      interval_text(dom.lo, dom.hi) + " for c = " + io::format_short(curve.c()));
  if (r.lo != cfg.s_min || r.hi != cfg.s_max)
    err << "warning: domain clipped to " << interval_text(dom.lo, dom.hi) << '\n';
  return r;
}

io::Polyline polyline(const ClassifiedCurve& curve, Interval r, std::size_t n) {
  io::Polyline line;
  line.label = "k_phi = " + io::format_short(curve.c());
  for (double s : linspace(r.lo, r.hi, n)) line.points.push_back(curve.eval(s));
  return line;
}

struct Figure {
  const char* caption;
  std::vector<double> c_values;
};

// c values per figure preset, chosen for illustration.
const std::map<std::string, Figure>& figures() {
  static const std::map<std::string, Figure> table = {
      {"6.1", {"Curves of k_phi < -1", {-1.5, -2.0, -3.0}}},
      {"6.2", {"Curves of k_phi = +-1", {1.0, -1.0}}},
      {"6.3", {"Curves of k_phi in (-1,0)", {-0.3, -0.6, -0.9}}},
      {"6.4", {"Curve of k_phi = 0 (Grim Reaper)", {0.0}}},
      {"6.5", {"Curves of k_phi in (0,1)", {0.3, 0.6, 0.9}}},
      {"6.6", {"Curves of k_phi > 1", {1.5, 2.0, 3.0}}},
  };
  return table;
}

int cmd_sample(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.figure.empty()) {
    const auto it = figures().find(cfg.figure);
    if (it == figures().end())
      throw InvalidInput("unknown figure '" + cfg.figure + "' (expected 6.1 ... 6.6)");
    std::vector<io::Polyline> lines;
    for (double c : it->second.c_values) {
      const ClassifiedCurve curve(c, cfg.reflect);
      const auto dom = curve.domain();
      const auto r = dom.bounded() ? curve.sampling_domain() : Interval{cfg.s_min, cfg.s_max};
      lines.push_back(polyline(curve, r, cfg.n));
    }
    const auto svg = io::render_svg(lines, std::string("Figure ") + cfg.figure + ". " +
                                               it->second.caption);
    emit(cfg.out, out, [&](std::ostream& os) { os << svg; });
    return kOk;
  }

  const ClassifiedCurve curve(single_c(cfg), cfg.reflect);
  const auto r = checked_range(curve, cfg, err);
  if (cfg.format == "csv") {
    const auto params = linspace(r.lo, r.hi, cfg.n);
    emit(cfg.out, out, [&](std::ostream& os) { io::write_curve_csv(os, curve, params); });
  } else if (cfg.format == "svg") {
    const std::vector<io::Polyline> lines{polyline(curve, r, cfg.n)};
    const auto svg = io::render_svg(lines, "k_phi = " + io::format_short(curve.c()));
    emit(cfg.out, out, [&](std::ostream& os) { os << svg; });
  } else {
    throw InvalidInput("--format must be csv or svg");
  }
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.tol > 0.0)) throw InvalidInput("--tol must be positive");
  if (!(cfg.step > 0.0)) throw InvalidInput("--step must be positive");
  const auto grid = io::parse_real_list(cfg.c);
  VerifyOptions opts;
  opts.tol = cfg.tol;
  opts.ode_step = cfg.step;
  opts.reflect = cfg.reflect;
  const auto results = run_verification(grid, opts);
  bool ok = true;
  for (const auto& r : results) {
    out << (r.pass() ? "PASS " : "FAIL ") << "c=" << io::format_short(r.c) << ' ' << r.check
        << " max_err=" << std::setprecision(3) << std::scientific << r.max_err
        << " tol=" << r.tol << std::defaultfloat << std::setprecision(6) << '\n';
    if (!r.pass()) {
      ok = false;
      err << "failing check: (c=" << io::format_short(r.c) << ", s=" << io::format_real(r.at_s)
          << ", check=" << r.check << ")\n";
    }
  }
  out << (ok ? "verify: all checks passed\n" : "verify: FAILED\n");
  return ok ? kOk : kUsage;
}

int cmd_oracle(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.step > 0.0)) throw InvalidInput("--step must be positive");
  const ClassifiedCurve curve(single_c(cfg), cfg.reflect);
  Config ranged = cfg;
  ranged.n = 2;
  const auto r = checked_range(curve, ranged, err);
  const double lo = std::min(r.lo, 0.0);
  const double hi = std::max(r.hi, 0.0);
  const double xi0 = cfg.xi0.value_or(canonical_xi0(curve));
  const auto traj = integrate_xi(curve.c(), xi0, lo, hi, cfg.step);
  if (cfg.out != "-")
    emit(cfg.out, out, [&](std::ostream& os) { io::write_trajectory_csv(os, traj); });

  out << "c=" << io::format_short(curve.c()) << " branch=" << to_string(curve.branch())
      << " xi0=" << io::format_real(xi0) << " step=" << io::format_short(cfg.step)
      << " samples=" << traj.s.size() << '\n';
  out << "ode_residual=" << io::format_real(traj.max_residual()) << '\n';
  try {
    const auto a = align(traj, curve);
    out << "s_shift=" << io::format_real(a.s_shift)
        << " translation=" << io::format_real(a.translation.x) << ','
        << io::format_real(a.translation.y) << '\n';
    out << "max_deviation=" << io::format_real(max_deviation(traj, curve, a)) << '\n';
  } catch (const RootFindError& e) {
    out << "alignment: " << e.what() << '\n';
  }
  return kOk;
}

int cmd_geodesic(const Config& cfg, std::ostream& out, std::ostream&) {
  if (cfg.p.empty() || cfg.q.empty()) throw InvalidInput("geodesic needs --p and --q");
  const auto P = io::parse_point(cfg.p);
  const auto Q = io::parse_point(cfg.q);
  const auto sol = connect(P, Q);
  out << "kind="
      << (sol.kind == GeodesicKind::VerticalSegment ? "VerticalSegment" : "GrimReaperArc")
      << '\n'
      << "x0=" << io::format_real(sol.x0) << '\n'
      << "y0=" << io::format_real(sol.y0) << '\n'
      << "sP=" << io::format_real(sol.sP) << '\n'
      << "sQ=" << io::format_real(sol.sQ) << '\n'
      << "weighted_length=" << io::format_real(sol.weighted_len) << '\n';
  return kOk;
}

int cmd_sweep(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto list = io::parse_real_list(cfg.c);
  const auto reports = convergence_sweep(list);
  for (const auto& r : reports)
    if (std::abs(r.sampled_sup_dev - r.sup_dev) > 1e-10)
      err << "warning: sampled sup deviation differs from closed form by "
          << std::abs(r.sampled_sup_dev - r.sup_dev) << " at c=" << io::format_short(r.c)
          << '\n';
  emit(cfg.out, out, [&](std::ostream& os) { io::write_sweep_csv(os, reports); });
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constant weighted curvature curves in the plane with density e^y", "wcc"};
  app.require_subcommand(1);
  Config cfg;

  auto add_curve_opts = [&](CLI::App* sub, bool ranged) {
    sub->add_option("--c", cfg.c, "weighted curvature c (lists: comma-separated)");
    sub->add_flag("--reflect", cfg.reflect, "use the mirror representative");
    if (ranged) {
      sub->add_option("--s-min", cfg.s_min, "smallest arc-length parameter");
      sub->add_option("--s-max", cfg.s_max, "largest arc-length parameter");
    }
  };

  auto* sample = app.add_subcommand("sample", "sample a classified curve to CSV or SVG");
  add_curve_opts(sample, true);
  sample->add_option("--n", cfg.n, "number of samples");
  sample->add_option("--format", cfg.format, "csv or svg");
  sample->add_option("--out", cfg.out, "output path ('-' for stdout)");
  sample->add_option("--figure", cfg.figure, "reproduce figure 6.1 ... 6.6 as SVG");

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  cfg.c = "-3,-1.5,-1,-0.5,0,0.5,1,1.5,3";
  add_curve_opts(verify, false);
  verify->add_option("--tol", cfg.tol, "tolerance for every check");
  verify->add_option("--step", cfg.step, "RK4 step");

  auto* oracle = app.add_subcommand("oracle", "integrate the tangent-angle ODE");
  add_curve_opts(oracle, true);
  oracle->add_option("--step", cfg.step, "RK4 step");
  oracle->add_option("--xi0", cfg.xi0, "initial tangent angle (default: canonical)");
  oracle->add_option("--out", cfg.out, "trajectory CSV path");

  auto* geodesic = app.add_subcommand("geodesic", "weighted geodesic between two points");
  geodesic->add_option("--p", cfg.p, "first point x,y")->required();
  geodesic->add_option("--q", cfg.q, "second point x,y")->required();

  auto* sweep = app.add_subcommand("sweep", "round-point convergence sweep over c > 1");
  sweep->add_option("--c", cfg.c, "comma-separated c values")->required();
  sweep->add_option("--out", cfg.out, "output path ('-' for stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  // Subcommands other than verify default to a single c = 0.
  if (!verify->parsed() && sample->count("--c") == 0 && oracle->count("--c") == 0 &&
      !sweep->parsed())
    cfg.c = "0";

  try {
    if (sample->parsed()) return cmd_sample(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (oracle->parsed()) return cmd_oracle(cfg, out, err);
    if (geodesic->parsed()) return cmd_geodesic(cfg, out, err);
    if (sweep->parsed()) return cmd_sweep(cfg, out, err);
  } catch (const NotConnectable& e) {
    err << "error: " << e.what() << '\n';
    return kNotConnectable;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace wcc::cli
