#include "wcc/geom_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "wcc/errors.hpp"

namespace wcc {
namespace {

// FD tangents may be off-unit by O(h^2); beyond this the samples are not
// arc-length parametrized.
constexpr double kFdSpeedTolerance = 1e-3;
constexpr double kUniformSpacingTolerance = 1e-6;

void require_unit(double xp, double yp, double tol) {
  const double dev = std::abs(std::hypot(xp, yp) - 1.0);
  if (!(dev <= tol)) {
    std::ostringstream msg;
    msg << "tangent (" << xp << ", " << yp << ") is not unit (|T|-1 = " << dev
        << "); curve is not arc-length parametrized";
    throw InvalidInput(msg.str());
  }
}

double cross(const Derivatives& d) { return d.xp * d.ypp - d.xpp * d.yp; }

}  // namespace

double euclidean_curvature(const Derivatives& d) {
  require_unit(d.xp, d.yp, kEntryUnitTolerance);
  return cross(d);
}

double weighted_curvature(const Derivatives& d) {
  return weighted_curvature(DensityParams{1.0}, d);
}

double weighted_curvature(DensityParams density, const Derivatives& d) {
  require_unit(d.xp, d.yp, kEntryUnitTolerance);
  return cross(d) - density.a * d.xp;
}

double weighted_curvature_scaled(double a, const Derivatives& alpha) {
  require_unit(alpha.xp, alpha.yp, kEntryUnitTolerance);
  return a * cross(alpha) - a * alpha.xp;
}

CurveSamples::CurveSamples(std::vector<double> s, std::vector<double> x,
                           std::vector<double> y)
    : s_(std::move(s)), x_(std::move(x)), y_(std::move(y)) {
  if (s_.size() < 2) throw InvalidInput("CurveSamples needs at least 2 points");
  if (x_.size() != s_.size() || y_.size() != s_.size())
    throw InvalidInput("CurveSamples arrays differ in length");
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (!std::isfinite(s_[i]) || !std::isfinite(x_[i]) || !std::isfinite(y_[i]))
      throw InvalidInput("CurveSamples contains a non-finite value");
    if (i > 0 && !(s_[i] > s_[i - 1]))
      throw InvalidInput("CurveSamples parameter s is not strictly increasing");
  }
}

CurveSamples::CurveSamples(std::vector<double> s, std::vector<double> x,
                           std::vector<double> y, DerivativeColumns derivatives)
    : CurveSamples(std::move(s), std::move(x), std::move(y)) {
  const auto n = s_.size();
  if (derivatives.xp.size() != n || derivatives.yp.size() != n ||
      derivatives.xpp.size() != n || derivatives.ypp.size() != n)
    throw InvalidInput("CurveSamples derivative columns differ in length");
  for (std::size_t i = 0; i < n; ++i)
    require_unit(derivatives.xp[i], derivatives.yp[i], kAnalyticUnitTolerance);
  derivatives_ = std::move(derivatives);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n < 2) throw InvalidInput("linspace needs n >= 2");
  std::vector<double> out(n);
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + h * static_cast<double>(i);
  out.back() = hi;
  return out;
}

double weighted_curvature_fd(const CurveSamples& samples, std::size_t i,
                             DensityParams density) {
  const auto n = samples.size();
  if (i < 1 || i + 2 > n) {
    std::ostringstream msg;
    msg << "finite-difference index " << i << " must lie in [1, " << n - 2 << "]";
    throw InvalidInput(msg.str());
  }
  const auto s = samples.s();
  const auto x = samples.x();
  const auto y = samples.y();
  // Five-point stencils: centred where possible, shifted one node next to
  // the ends; three-point only when fewer than five samples exist.
  int lo = -1;
  int width = 3;
  if (n >= 5) {
    width = 5;
    lo = i < 2 ? -1 : (i + 3 > n ? -3 : -2);
  }
  const std::size_t first_node = i + lo;
  const double h = s[i + 1] - s[i];
  for (std::size_t j = first_node; j + 1 < first_node + width; ++j) {
    if (std::abs((s[j + 1] - s[j]) - h) > kUniformSpacingTolerance * h)
      throw InvalidInput("finite differences need uniformly spaced samples");
  }

  static constexpr double kFirst3[] = {-0.5, 0.0, 0.5};
  static constexpr double kSecond3[] = {1.0, -2.0, 1.0};
  static constexpr double kFirst5[3][5] = {{-3.0 / 12, -10.0 / 12, 18.0 / 12, -6.0 / 12, 1.0 / 12},
                                           {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12},
                                           {-1.0 / 12, 6.0 / 12, -18.0 / 12, 10.0 / 12, 3.0 / 12}};
  static constexpr double kSecond5[3][5] = {{11.0 / 12, -20.0 / 12, 6.0 / 12, 4.0 / 12, -1.0 / 12},
                                            {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12},
                                            {-1.0 / 12, 4.0 / 12, 6.0 / 12, -20.0 / 12, 11.0 / 12}};
  const int row = width == 5 ? (lo == -1 ? 0 : (lo == -2 ? 1 : 2)) : 0;
  auto apply = [&](std::span<const double> f, const double* w) {
    double acc = 0.0;
    for (int k = 0; k < width; ++k) acc += w[k] * f[first_node + k];
    return acc;
  };
  auto first = [&](std::span<const double> f) {
    return apply(f, width == 5 ? kFirst5[row] : kFirst3) / h;
  };
  auto second = [&](std::span<const double> f) {
    return apply(f, width == 5 ? kSecond5[row] : kSecond3) / (h * h);
  };

  Derivatives d{first(x), first(y), second(x), second(y)};
  const double speed = std::hypot(d.xp, d.yp);
  if (std::abs(speed - 1.0) > kFdSpeedTolerance)
    throw InvalidInput("samples are not arc-length parametrized");
  // Project the estimate onto unit speed: k = (x'y'' - x''y') / |v|^3.
  d = {d.xp / speed, d.yp / speed, d.xpp / (speed * speed), d.ypp / (speed * speed)};
  return weighted_curvature(density, d);
}

double weighted_length(const CurveSamples& samples, double a) {
  const auto s = samples.s();
  const auto y = samples.y();
  const auto n = samples.size();
  auto weight = [&](std::size_t i) { return std::exp(a * y[i]); };

  double total = 0.0;
  if (n % 2 == 1) {
    for (std::size_t i = 0; i + 2 < n; i += 2) {
      const double h0 = s[i + 1] - s[i];
      const double h1 = s[i + 2] - s[i + 1];
      const double span = h0 + h1;
      total += span / 6.0 *
               ((2.0 - h1 / h0) * weight(i) + span * span / (h0 * h1) * weight(i + 1) +
                (2.0 - h0 / h1) * weight(i + 2));
    }
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i)
      total += 0.5 * (s[i + 1] - s[i]) * (weight(i) + weight(i + 1));
  }
  return total;
}

CurveSamples density_rescale(const CurveSamples& samples, double a) {
  if (!std::isfinite(a)) throw InvalidInput("density slope must be finite");
  if (a == 0.0)
    throw InvalidInput("density slope a = 0 is the unweighted plane; rescaling undefined");

  const auto n = samples.size();
  std::vector<double> s(n), x(n), y(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = a > 0 ? i : n - 1 - i;
  for (std::size_t k = 0; k < n; ++k) {
    const auto i = order[k];
    s[k] = samples.s()[i] / a;
    x[k] = samples.x()[i] / a;
    y[k] = samples.y()[i] / a;
  }
  const auto& d = samples.derivatives();
  if (!d) return CurveSamples(std::move(s), std::move(x), std::move(y));

  CurveSamples::DerivativeColumns out{std::vector<double>(n), std::vector<double>(n),
                                      std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    const auto i = order[k];
    out.xp[k] = d->xp[i];
    out.yp[k] = d->yp[i];
    out.xpp[k] = a * d->xpp[i];
    out.ypp[k] = a * d->ypp[i];
  }
  return CurveSamples(std::move(s), std::move(x), std::move(y), std::move(out));
}

}  // namespace wcc
