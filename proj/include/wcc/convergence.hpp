#pragma once

// Curvature of the |c| > 1 curves rescaled by sqrt(c^2 - 1). As c grows the
// rescaled curvature tends to 1 uniformly: the curves shrink to a round point.

#include <span>
#include <vector>

namespace wcc {

struct RescaledCurvature {
  double printed;     // (1/m) ((-c cos(ms) - 1) / (c + cos(ms)) + c)
  double simplified;  // m / (c + cos(ms))
};

/// Both forms at (c, s), m = sqrt(c^2 - 1). Throws DomainError for c <= 1
/// or s outside (-pi/m, pi/m).
RescaledCurvature rescaled_curvature_forms(double c, double s);

/// The printed form.
double rescaled_curvature(double c, double s);

struct RescaleReport {
  double c;
  double r_min;            // m / (c + 1)
  double r_max;            // m / (c - 1)
  double sup_dev;          // sup |r - 1| from the closed-form extremes
  double sampled_sup_dev;  // same from 10^4 samples on the margin-trimmed domain
};

inline constexpr std::size_t kSweepSamples = 10000;

/// One report per c, in input order. Throws DomainError if any c <= 1.
std::vector<RescaleReport> convergence_sweep(std::span<const double> c_list);

}  // namespace wcc
