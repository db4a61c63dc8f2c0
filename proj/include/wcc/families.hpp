#pragma once

// Closed-form curves of constant weighted curvature c under the density e^y,
// one canonical representative per branch of the classification (up to
// translation), plus the straight-line solutions.

#include <span>
#include <string>
#include <vector>

#include "wcc/geom_core.hpp"

namespace wcc {

enum class Branch { SubNegOne, NegOne, Open, PlusOne, SuperOne };

std::string to_string(Branch b);

/// Parameter interval. Unbounded ends are +-infinity; bounded ends are open.
struct Interval {
  double lo;
  double hi;

  bool bounded() const noexcept;
  bool contains(double s) const noexcept { return s > lo && s < hi; }
};

/// Constants |1 - |c|| below this are treated as exactly +-1.
inline constexpr double kUnitSnapBand = 1e-12;
/// Relative margin kept from the ends of a bounded domain.
inline constexpr double kDomainMargin = 1e-6;

class ClassifiedCurve {
 public:
  /// Canonical representative for c. reflect selects the mirror solution:
  /// Case 2 (ln(... + 2c)) for -1 < c < 1, and the curvature-preserving
  /// mirror (x, y)(s) -> (-x(-s), y(-s)) for |c| >= 1, whose traces are
  /// symmetric so it coincides with the canonical curve there.
  ClassifiedCurve(double c, bool reflect = false);

  double c() const noexcept { return c_; }
  Branch branch() const noexcept { return branch_; }
  bool reflect() const noexcept { return reflect_; }

  /// sqrt((c-1)/(c+1)); only meaningful for |c| > 1 (0 otherwise).
  double a_c() const noexcept { return a_c_; }
  /// sqrt((1-c)/(1+c)); only meaningful for |c| < 1 (0 otherwise).
  double b_c() const noexcept { return b_c_; }

  /// R for |c| <= 1, (-pi/sqrt(c^2-1), pi/sqrt(c^2-1)) for |c| > 1.
  Interval domain() const noexcept;
  /// Closed sub-interval [lo+eps, hi-eps], eps = margin (hi-lo), for bounded
  /// domains; for unbounded domains returns [-half_width, half_width].
  Interval sampling_domain(double half_width = 5.0,
                           double margin = kDomainMargin) const noexcept;

  /// Position on the canonical representative. Throws DomainError when s is
  /// outside domain().
  Point2 eval(double s) const;
  /// Analytic first and second arc-length derivatives.
  Derivatives eval_derivatives(double s) const;
  /// Tangent angle xi with (x', y') = (-cos 2xi, sin 2xi), in (-pi/2, pi/2].
  double tangent_xi(double s) const;

 private:
  void check_domain(double s) const;
  Point2 eval_unreflected(double s) const;
  Derivatives derivatives_unreflected(double s) const;

  double c_;
  Branch branch_;
  bool reflect_;
  double a_c_ = 0.0;
  double b_c_ = 0.0;
  double rate_ = 0.0;  // sqrt(|1 - c^2|)
};

ClassifiedCurve make_curve(double c, bool reflect = false);
Point2 eval(const ClassifiedCurve& curve, double s);
Derivatives eval_derivatives(const ClassifiedCurve& curve, double s);

/// Samples curve on n uniform parameters in [lo, hi] with derivative columns.
CurveSamples sample_curve(const ClassifiedCurve& curve, double lo, double hi,
                          std::size_t n);

/// Straight line of constant weighted curvature c through `through`.
struct LineSolution {
  double c;
  Point2 direction;
  Point2 through;

  Point2 eval(double s) const noexcept {
    return {through.x + s * direction.x, through.y + s * direction.y};
  }
  Derivatives derivatives() const noexcept { return {direction.x, direction.y, 0.0, 0.0}; }
};

/// Lines with k_f = c: direction (-c, +-sqrt(1-c^2)) for |c| < 1, the single
/// direction (-c, 0) for c = +-1, none for |c| > 1. All pass through the origin.
std::vector<LineSolution> lines_for(double c);

// Positions of the two open cases, for the mirror identities at -1 < c < 1.
double case1_x(double c, double s);
double case2_x(double c, double s);
double case1_y(double c, double s);
double case2_y(double c, double s);

struct SymmetryResiduals {
  double dx;  // case1_x(c, s) + case2_x(-c, s)
  double dy;  // case1_y(c, s) - case2_y(-c, s)
};

/// Throws DomainError for |c| >= 1.
SymmetryResiduals symmetry_check(double c, double s);

enum class SolutionKind { Line, GrimReaper };

/// Change of coordinates taking the traveling-front equation with external
/// force (c1, c2) and forcing c to zero weighted curvature under e^y:
/// the density e^{-c1 x + (c2 - c) y} becomes e^y after rotating by
/// `rotation` and scaling by `scale`.
struct FrontReduction {
  double rotation;
  double scale;
  std::vector<SolutionKind> classification;

  /// scale * R(rotation) p.
  Point2 to_standard_frame(Point2 p) const noexcept;
  /// Inverse of to_standard_frame.
  Point2 from_standard_frame(Point2 q) const noexcept;
};

/// Throws InvalidInput when c1 = 0 and c2 = c (constant density).
FrontReduction front_reduction(double c1, double c2, double c);

}  // namespace wcc
