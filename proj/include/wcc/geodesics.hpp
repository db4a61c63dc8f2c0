#pragma once

// Weighted geodesics of the plane with density e^y: vertical lines and
// translates of the Grim Reaper  x = x0 + 2 arctan(e^s), y = y0 + ln(e^s + e^-s).

#include "wcc/geom_core.hpp"

namespace wcc {

enum class GeodesicKind { VerticalSegment, GrimReaperArc };

struct GeodesicSolution {
  GeodesicKind kind = GeodesicKind::VerticalSegment;
  /// Grim Reaper translation; for a vertical segment x0 is the line's x and
  /// y0 = 0.
  double x0 = 0.0;
  double y0 = 0.0;
  /// Always false from connect(): endpoints are ordered so the arc is a
  /// translate of the +2 arctan(e^s) branch.
  bool reflect = false;
  /// Arc parameters of P and Q (for a vertical segment, their y values).
  double sP = 0.0;
  double sQ = 0.0;
  double weighted_len = 0.0;

  Point2 point_at(double s) const;
};

/// True iff |P.x - Q.x| < pi. Throws InvalidInput when P = Q.
bool connectable(Point2 P, Point2 Q);

/// Unique zero weighted curvature curve through P and Q.
/// Throws NotConnectable when |P.x - Q.x| >= pi, InvalidInput when P = Q,
/// RootFindError if the shooting residual does not change sign exactly once.
GeodesicSolution connect(Point2 P, Point2 Q);

/// Analytic weighted length: e^{y0} |2 sinh sQ - 2 sinh sP| for an arc,
/// |e^{yQ} - e^{yP}| for a vertical segment.
double path_weighted_length(const GeodesicSolution& sol);

/// The same length by Simpson quadrature over n samples (n odd).
double path_weighted_length_quadrature(const GeodesicSolution& sol, std::size_t n = 1001);

/// n arc-length samples of the path from P to Q (parameter increasing).
CurveSamples sample_path(const GeodesicSolution& sol, std::size_t n);

/// Residual of the shooting problem for a candidate translation x0:
/// [y(sR) - y(sL)] - (yR - yL) with L, R the left and right endpoints.
double grim_reaper_residual(Point2 P, Point2 Q, double x0);

/// Sign changes of grim_reaper_residual over n interior points of the
/// bracket (max(xP,xQ) - pi, min(xP,xQ)), counting the known limits
/// +inf / -inf at the ends.
int residual_sign_changes(Point2 P, Point2 Q, std::size_t n = 1000);

}  // namespace wcc
