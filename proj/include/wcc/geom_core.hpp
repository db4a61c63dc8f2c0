#pragma once

// Density-aware functionals on plane curves for the log-linear density
// f = e^{a y}. Curves are arc-length parametrized; derivatives are with
// respect to arc length.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace wcc {

/// Log-linear density e^{a y}. a = 1 is the canonical density.
struct DensityParams {
  double a = 1.0;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// First and second arc-length derivatives of a curve at one point.
struct Derivatives {
  double xp = 0.0;
  double yp = 0.0;
  double xpp = 0.0;
  double ypp = 0.0;
};

inline constexpr double kEntryUnitTolerance = 1e-6;
inline constexpr double kAnalyticUnitTolerance = 1e-9;

/// Euclidean curvature x'y'' - x''y' of a unit-speed curve.
/// Throws InvalidInput when |(xp, yp)| deviates from 1 by more than 1e-6.
double euclidean_curvature(const Derivatives& d);

/// Weighted curvature x'y'' - x''y' - x' under the density e^y.
///
/// Reversing the parametrization negates the result (the sign follows the
/// left-hand normal (-y', x')).
double weighted_curvature(const Derivatives& d);

/// Weighted curvature of the curve itself under e^{a y}: k - a x'.
double weighted_curvature(DensityParams density, const Derivatives& d);

/// a (x'y'' - x''y') - a x', where d are the derivatives of alpha. This is
/// the weighted curvature under e^{a y} of beta(s) = alpha(a s) / a.
double weighted_curvature_scaled(double a, const Derivatives& alpha);

/// Sampled curve s -> (x, y) with optional derivative columns.
class CurveSamples {
 public:
  struct DerivativeColumns {
    std::vector<double> xp, yp, xpp, ypp;
  };

  /// Throws InvalidInput unless all arrays have equal length >= 2 and s is
  /// strictly increasing.
  CurveSamples(std::vector<double> s, std::vector<double> x,
               std::vector<double> y);

  /// As above; additionally requires xp^2 + yp^2 = 1 within 1e-9.
  CurveSamples(std::vector<double> s, std::vector<double> x,
               std::vector<double> y, DerivativeColumns derivatives);

  std::size_t size() const noexcept { return s_.size(); }
  std::span<const double> s() const noexcept { return s_; }
  std::span<const double> x() const noexcept { return x_; }
  std::span<const double> y() const noexcept { return y_; }
  const std::optional<DerivativeColumns>& derivatives() const noexcept {
    return derivatives_;
  }
  Point2 point(std::size_t i) const { return {x_.at(i), y_.at(i)}; }

 private:
  std::vector<double> s_, x_, y_;
  std::optional<DerivativeColumns> derivatives_;
};

/// n equally spaced values from lo to hi inclusive (n >= 2).
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// Finite-difference weighted curvature at sample i under e^{a y}.
///
/// Requires uniform spacing in s and 1 <= i <= size-2. Uses five-point
/// stencils (central, or shifted by one node next to the ends) and
/// three-point stencils when fewer than five samples exist.
double weighted_curvature_fd(const CurveSamples& samples, std::size_t i,
                             DensityParams density = {});

/// Weighted length  integral of e^{a y(s)} ds  over the samples.
/// Composite Simpson (non-uniform form) for an odd point count, trapezoid
/// otherwise.
double weighted_length(const CurveSamples& samples, double a = 1.0);

/// beta(sigma) = alpha(a sigma) / a sampled at sigma = s / a (reordered so
/// the parameter increases when a < 0). Derivative columns, when present,
/// are transformed as beta' = alpha', beta'' = a alpha''. The weighted
/// curvature of beta under e^{a y} is a times that of alpha under e^y.
/// Throws InvalidInput for a = 0 or non-finite a.
CurveSamples density_rescale(const CurveSamples& samples, double a);

}  // namespace wcc
