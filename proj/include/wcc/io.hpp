#pragma once

// CSV and SVG serialization used by the command line tool.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wcc/convergence.hpp"
#include "wcc/families.hpp"
#include "wcc/geom_core.hpp"
#include "wcc/ode_oracle.hpp"

namespace wcc::io {

/// 17 significant digits ("%.17g"); round-trips every double.
std::string format_real(double v);
/// Shortest decimal form that round-trips (used for captions).
std::string format_short(double v);

/// Comma-separated reals. Throws InvalidInput on an empty list or bad token.
std::vector<double> parse_real_list(std::string_view text);
/// "x,y". Throws InvalidInput otherwise.
Point2 parse_point(std::string_view text);

/// Header `s,x,y,xp,yp,kf`, one row per parameter.
void write_curve_csv(std::ostream& os, const ClassifiedCurve& curve,
                     std::span<const double> params);
/// Header `s,xi,x,y`.
void write_trajectory_csv(std::ostream& os, const OdeTrajectory& traj);
/// Header `c,r_min,r_max,sup_dev`.
void write_sweep_csv(std::ostream& os, std::span<const RescaleReport> reports);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Column by header name; throws InvalidInput if missing.
  std::vector<double> column(std::string_view name) const;
};

CsvTable read_csv(std::istream& is);

struct Polyline {
  std::vector<Point2> points;
  std::string label;
};

struct SvgOptions {
  int width = 640;
  int height = 480;
  double padding = 0.05;  // fraction of the bounding box on every side
};

/// Self-contained SVG: axes, one <polyline> per input (screen y flipped),
/// and the caption plus per-polyline labels as <text>.
std::string render_svg(std::span<const Polyline> lines, std::string_view caption,
                       const SvgOptions& options = {});

}  // namespace wcc::io
