#include "wcc/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "wcc/errors.hpp"

namespace wcc::io {
namespace {

std::string trim(std::string_view t) {
  const auto b = t.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = t.find_last_not_of(" \t\r\n");
  return std::string(t.substr(b, e - b + 1));
}

double parse_real(std::string_view token) {
  const auto text = trim(token);
  if (text.empty()) throw InvalidInput("empty number");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidInput("not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v))
    throw InvalidInput("not a finite number: '" + text + "'");
  return v;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_short(double v) {
  char buf[64];
  for (int p = 1; p <= 17; ++p) {
    std::snprintf(buf, sizeof buf, "%.*g", p, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::vector<double> parse_real_list(std::string_view text) {
  if (trim(text).empty()) throw InvalidInput("empty list of values");
  std::vector<double> out;
  for (const auto& tok : split(text, ',')) out.push_back(parse_real(tok));
  return out;
}

Point2 parse_point(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw InvalidInput("expected a point 'x,y', got '" + std::string(text) + "'");
  return {parse_real(parts[0]), parse_real(parts[1])};
}

void write_curve_csv(std::ostream& os, const ClassifiedCurve& curve,
                     std::span<const double> params) {
  os << "s,x,y,xp,yp,kf\n";
  for (double s : params) {
    const auto p = curve.eval(s);
    const auto d = curve.eval_derivatives(s);
    os << format_real(s) << ',' << format_real(p.x) << ',' << format_real(p.y) << ','
       << format_real(d.xp) << ',' << format_real(d.yp) << ','
       << format_real(weighted_curvature(d)) << '\n';
  }
}

void write_trajectory_csv(std::ostream& os, const OdeTrajectory& traj) {
  os << "s,xi,x,y\n";
  for (std::size_t i = 0; i < traj.s.size(); ++i)
    os << format_real(traj.s[i]) << ',' << format_real(traj.xi[i]) << ','
       << format_real(traj.x[i]) << ',' << format_real(traj.y[i]) << '\n';
}

void write_sweep_csv(std::ostream& os, std::span<const RescaleReport> reports) {
  os << "c,r_min,r_max,sup_dev\n";
  for (const auto& r : reports)
    os << format_real(r.c) << ',' << format_real(r.r_min) << ',' << format_real(r.r_max)
       << ',' << format_real(r.sup_dev) << '\n';
}

std::vector<double> CsvTable::column(std::string_view name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw InvalidInput("CSV has no column '" + std::string(name) + "'");
  const auto idx = static_cast<std::size_t>(it - header.begin());
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.at(idx));
  return out;
}

CsvTable read_csv(std::istream& is) {
  CsvTable t;
  std::string line;
  if (!std::getline(is, line)) throw InvalidInput("empty CSV");
  for (auto& h : split(line, ',')) t.header.push_back(trim(h));
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    std::vector<double> row;
    for (const auto& tok : split(line, ',')) row.push_back(parse_real(tok));
    if (row.size() != t.header.size()) throw InvalidInput("CSV row width mismatch");
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_svg(std::span<const Polyline> lines, std::string_view caption,
                       const SvgOptions& options) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& l : lines)
    for (const auto& p : l.points) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  if (!std::isfinite(xmin)) xmin = xmax = ymin = ymax = 0.0;
  double bw = xmax - xmin;
  double bh = ymax - ymin;
  if (bw <= 0.0 && bh <= 0.0) bw = bh = 1.0;
  if (bw <= 0.0) bw = bh;
  if (bh <= 0.0) bh = bw;
  const double pw = bw * (1.0 + 2.0 * options.padding);
  const double ph = bh * (1.0 + 2.0 * options.padding);
  const double scale = std::min(options.width / pw, options.height / ph);
  const double cx = 0.5 * (xmin + xmax);
  const double cy = 0.5 * (ymin + ymax);
  auto sx = [&](double x) { return 0.5 * options.width + (x - cx) * scale; };
  auto sy = [&](double y) { return 0.5 * options.height - (y - cy) * scale; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
     << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << ' '
     << options.height << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes through the origin, pinned to the border when the origin is off-view.
  const double ax = std::clamp(sx(0.0), 0.0, static_cast<double>(options.width));
  const double ay = std::clamp(sy(0.0), 0.0, static_cast<double>(options.height));
  os << "<g stroke=\"#888888\" stroke-width=\"1\">\n"
     << "<line x1=\"0\" y1=\"" << fixed4(ay) << "\" x2=\"" << options.width << "\" y2=\""
     << fixed4(ay) << "\"/>\n"
     << "<line x1=\"" << fixed4(ax) << "\" y1=\"0\" x2=\"" << fixed4(ax) << "\" y2=\""
     << options.height << "\"/>\n"
     << "</g>\n";

  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                            "#9467bd", "#ff7f0e", "#8c564b"};
  std::size_t k = 0;
  for (const auto& l : lines) {
    os << "<polyline fill=\"none\" stroke=\"" << kColors[k % 6]
       << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < l.points.size(); ++i) {
      if (i) os << ' ';
      os << fixed4(sx(l.points[i].x)) << ',' << fixed4(sy(l.points[i].y));
    }
    os << "\"/>\n";
    ++k;
  }
  os << "<text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">" << caption
     << "</text>\n";
  if (lines.size() > 1) {
    k = 0;
    for (const auto& l : lines) {
      os << "<text x=\"10\" y=\"" << 40 + 16 * k << "\" font-family=\"sans-serif\" "
         << "font-size=\"12\" fill=\"" << kColors[k % 6] << "\">" << l.label << "</text>\n";
      ++k;
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace wcc::io
