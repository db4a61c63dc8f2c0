#include "wcc/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wcc/errors.hpp"
#include "wcc/families.hpp"

namespace wcc {
namespace {

void require_super(double c) {
  if (!(c > 1.0) || !std::isfinite(c)) {
    std::ostringstream msg;
    msg << "rescaled curvature needs finite c > 1 (got c = " << c << ")";
    throw DomainError(msg.str());
  }
}

}  // namespace

RescaledCurvature rescaled_curvature_forms(double c, double s) {
  require_super(c);
  const double m = std::sqrt((c - 1.0) * (c + 1.0));
  const double edge = std::numbers::pi / m;
  if (!(std::abs(s) < edge)) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "s = " << s << " is outside the admissible interval (" << -edge << ", " << edge
        << ")";
    throw DomainError(msg.str());
  }
  const double cs = std::cos(m * s);
  return {((-c * cs - 1.0) / (c + cs) + c) / m, m / (c + cs)};
}

double rescaled_curvature(double c, double s) { return rescaled_curvature_forms(c, s).printed; }

std::vector<RescaleReport> convergence_sweep(std::span<const double> c_list) {
  for (double c : c_list) require_super(c);
  std::vector<RescaleReport> out;
  out.reserve(c_list.size());
  for (double c : c_list) {
    const double m = std::sqrt((c - 1.0) * (c + 1.0));
    RescaleReport r{c, m / (c + 1.0), m / (c - 1.0), 0.0, 0.0};
    r.sup_dev = std::max(std::abs(r.r_min - 1.0), std::abs(r.r_max - 1.0));
    const auto dom = ClassifiedCurve(c).sampling_domain();
    for (double s : linspace(dom.lo, dom.hi, kSweepSamples))
      r.sampled_sup_dev = std::max(r.sampled_sup_dev, std::abs(rescaled_curvature(c, s) - 1.0));
    out.push_back(r);
  }
  return out;
}

}  // namespace wcc
