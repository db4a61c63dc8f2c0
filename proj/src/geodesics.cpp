#include "wcc/geodesics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "wcc/errors.hpp"

namespace wcc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBracketWidth = 1e-12;
constexpr int kNewtonSteps = 3;

struct Ordered {
  Point2 left, right;
};

Ordered order(Point2 P, Point2 Q) {
  if (P.x <= Q.x) return {P, Q};
  return {Q, P};
}

// On the Grim Reaper translate, y = y0 + ln 2 - ln sin(x - x0).
double residual(const Ordered& e, double x0) {
  return std::log(std::sin(e.left.x - x0)) - std::log(std::sin(e.right.x - x0)) -
         (e.right.y - e.left.y);
}

double residual_slope(const Ordered& e, double x0) {
  return 1.0 / std::tan(e.right.x - x0) - 1.0 / std::tan(e.left.x - x0);
}

int count_sign_changes(const Ordered& e, std::size_t n) {
  const double lo = e.right.x - kPi;
  const double hi = e.left.x;
  int changes = 0;
  int prev = 1;  // residual -> +inf as x0 -> lo
  for (std::size_t j = 0; j < n; ++j) {
    const double x0 = lo + (static_cast<double>(j) + 0.5) * (hi - lo) / static_cast<double>(n);
    const double r = residual(e, x0);
    if (r == 0.0) continue;
    const int sign = r > 0 ? 1 : -1;
    if (sign != prev) ++changes;
    prev = sign;
  }
  if (prev != -1) ++changes;  // residual -> -inf as x0 -> hi
  return changes;
}

double arc_parameter(double x, double x0) { return std::log(std::tan(0.5 * (x - x0))); }

}  // namespace

Point2 GeodesicSolution::point_at(double s) const {
  if (kind == GeodesicKind::VerticalSegment) return {x0, s};
  return {x0 + 2.0 * std::atan(std::exp(s)),
          y0 + std::abs(s) + std::log1p(std::exp(-2.0 * std::abs(s)))};
}

bool connectable(Point2 P, Point2 Q) {
  if (P == Q) throw InvalidInput("geodesic endpoints coincide");
  return std::abs(P.x - Q.x) < kPi;
}

double grim_reaper_residual(Point2 P, Point2 Q, double x0) { return residual(order(P, Q), x0); }

int residual_sign_changes(Point2 P, Point2 Q, std::size_t n) {
  return count_sign_changes(order(P, Q), n);
}

GeodesicSolution connect(Point2 P, Point2 Q) {
  if (!connectable(P, Q)) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "no geodesic: |dx| = " << std::abs(P.x - Q.x) << " is not less than pi";
    throw NotConnectable(msg.str());
  }

  GeodesicSolution sol;
  if (P.x == Q.x) {
    sol.kind = GeodesicKind::VerticalSegment;
    sol.x0 = P.x;
    sol.sP = P.y;
    sol.sQ = Q.y;
    sol.weighted_len = path_weighted_length(sol);
    return sol;
  }

  const auto e = order(P, Q);
  double x0;
  if (e.left.y == e.right.y) {
    x0 = 0.5 * (e.left.x + e.right.x) - 0.5 * kPi;
  } else {
    if (count_sign_changes(e, 1000) != 1)
      throw RootFindError("geodesic shooting residual does not change sign exactly once");
    // residual is +inf at lo and -inf at hi and strictly decreasing.
    double lo = e.right.x - kPi;
    double hi = e.left.x;
    while (hi - lo > kBracketWidth) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (residual(e, mid) > 0.0)
        lo = mid;
      else
        hi = mid;
    }
    x0 = 0.5 * (lo + hi);
    for (int k = 0; k < kNewtonSteps; ++k) {
      const double next = x0 - residual(e, x0) / residual_slope(e, x0);
      if (!(next > e.right.x - kPi && next < e.left.x)) break;
      x0 = next;
    }
  }

  sol.kind = GeodesicKind::GrimReaperArc;
  sol.x0 = x0;
  sol.y0 = e.left.y - std::log(2.0) + std::log(std::sin(e.left.x - x0));
  sol.sP = arc_parameter(P.x, x0);
  sol.sQ = arc_parameter(Q.x, x0);
  sol.weighted_len = path_weighted_length(sol);
  return sol;
}

double path_weighted_length(const GeodesicSolution& sol) {
  if (sol.kind == GeodesicKind::VerticalSegment)
    return std::abs(std::exp(sol.sQ) - std::exp(sol.sP));
  return std::exp(sol.y0) * std::abs(2.0 * std::sinh(sol.sQ) - 2.0 * std::sinh(sol.sP));
}

CurveSamples sample_path(const GeodesicSolution& sol, std::size_t n) {
  double lo = sol.sP;
  double hi = sol.sQ;
  if (lo > hi) std::swap(lo, hi);
  auto s = linspace(lo, hi, n);
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = sol.point_at(s[i]);
    x[i] = p.x;
    y[i] = p.y;
  }
  // Both path kinds are unit speed in their parameter.
  return CurveSamples(std::move(s), std::move(x), std::move(y));
}

double path_weighted_length_quadrature(const GeodesicSolution& sol, std::size_t n) {
  if (sol.sP == sol.sQ) return 0.0;
  if (n % 2 == 0) ++n;
  return weighted_length(sample_path(sol, n), 1.0);
}

}  // namespace wcc
