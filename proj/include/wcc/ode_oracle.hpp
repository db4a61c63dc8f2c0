#pragma once

// Independent numerical route to the constant weighted curvature curves:
// integrate the tangent-angle equation  -2 xi' + cos(2 xi) = c  with
// (x', y') = (-cos 2xi, sin 2xi), then compare against the closed forms.

#include <vector>

#include "wcc/families.hpp"
#include "wcc/geom_core.hpp"

namespace wcc {

struct OdeTrajectory {
  double c = 0.0;
  double xi0 = 0.0;
  double step = 0.0;
  std::vector<double> s, xi, x, y;

  /// Index of the sample at s = 0.
  std::size_t origin_index() const;
  /// Max over interior samples of |-2 xi' + cos 2xi - c| with xi' from
  /// central differences.
  double max_residual() const;
};

/// Classical fixed-step RK4 on (xi, x, y) from s = 0 outward to both ends of
/// [s_lo, s_hi] (which must contain 0), starting at xi(0) = xi0 and
/// x(0) = y(0) = 0. Grid nodes are k * step.
OdeTrajectory integrate_xi(double c, double xi0, double s_lo, double s_hi, double step);

/// xi(0) reproducing the canonical representative's tangent at s = 0.
double canonical_xi0(const ClassifiedCurve& curve);

/// Trajectory holding the closed form itself (positions and tangent angle),
/// on the same grid integrate_xi would use.
OdeTrajectory trajectory_from_curve(const ClassifiedCurve& curve, double s_lo,
                                    double s_hi, double step);

struct Alignment {
  double s_shift = 0.0;
  Point2 translation;
};

/// Finds s* where the curve's tangent equals the trajectory's tangent at
/// s = 0, and the translation with traj(s) ~ curve(s + s*) + translation.
/// Throws RootFindError if the tangent is never attained (e.g. a line).
Alignment align(const OdeTrajectory& traj, const ClassifiedCurve& curve);

/// Sup of |traj(s_i) - (curve(s_i + s*) + translation)| over samples whose
/// shifted parameter lies in the curve's domain. Throws DomainError when
/// none do.
double max_deviation(const OdeTrajectory& traj, const ClassifiedCurve& curve,
                     const Alignment& alignment);

}  // namespace wcc
