#include "wcc/families.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "wcc/errors.hpp"

namespace wcc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

double snap_unit(double c) {
  if (std::abs(1.0 - std::abs(c)) < kUnitSnapBand) return c > 0 ? 1.0 : -1.0;
  return c;
}

Branch branch_for(double c) {
  if (c < -1.0) return Branch::SubNegOne;
  if (c == -1.0) return Branch::NegOne;
  if (c < 1.0) return Branch::Open;
  if (c == 1.0) return Branch::PlusOne;
  return Branch::SuperOne;
}

// Case 1 of -1 < c < 1 with w = sqrt(1 - c^2). Hyperbolic functions enter
// only through e^{-|ws|} so nothing overflows for large |s|.
struct OpenTerms {
  double sech;     // 1 / cosh(ws)
  double tanh;     // tanh(ws)
  double reduced;  // (cosh(ws) - c) / cosh(ws)
};

OpenTerms open_terms(double c, double w, double s) {
  const double u = w * s;
  const double e = std::exp(-std::abs(u));
  const double e2 = e * e;
  const double sech = 2.0 * e / (1.0 + e2);
  const double tanh = std::copysign((1.0 - e2) / (1.0 + e2), u);
  return {sech, tanh, 1.0 - c * sech};
}

Point2 open_case1_position(double c, double s) {
  const double w = std::sqrt((1.0 - c) * (1.0 + c));
  const double u = w * s;
  const double x = 2.0 * std::atan((std::exp(u) - c) / w) - c * s;
  const double e = std::exp(-std::abs(u));
  const double y = std::abs(u) + std::log1p(e * e - 2.0 * c * e);
  return {x, y};
}

Derivatives open_case1_derivatives(double c, double s) {
  const double w = std::sqrt((1.0 - c) * (1.0 + c));
  const auto [sech, tanh, reduced] = open_terms(c, w, s);
  const double r2 = reduced * reduced;
  return {
      (sech - c) / reduced,
      w * tanh / reduced,
      -w * w * w * tanh * sech / r2,
      w * w * sech * (sech - c) / r2,
  };
}

}  // namespace

std::string to_string(Branch b) {
  switch (b) {
    case Branch::SubNegOne: return "c<-1";
    case Branch::NegOne: return "c=-1";
    case Branch::Open: return "-1<c<1";
    case Branch::PlusOne: return "c=1";
    case Branch::SuperOne: return "c>1";
  }
  return "?";
}

bool Interval::bounded() const noexcept { return std::isfinite(lo) && std::isfinite(hi); }

ClassifiedCurve::ClassifiedCurve(double c, bool reflect)
    : c_(snap_unit(c)), branch_(Branch::Open), reflect_(reflect) {
  if (!std::isfinite(c)) throw InvalidInput("weighted curvature c must be finite");
  branch_ = branch_for(c_);
  if (branch_ == Branch::SubNegOne || branch_ == Branch::SuperOne) {
    a_c_ = std::sqrt((c_ - 1.0) / (c_ + 1.0));
    rate_ = std::sqrt((c_ - 1.0) * (c_ + 1.0));
  } else if (branch_ == Branch::Open) {
    b_c_ = std::sqrt((1.0 - c_) / (1.0 + c_));
    rate_ = std::sqrt((1.0 - c_) * (1.0 + c_));
  }
}

Interval ClassifiedCurve::domain() const noexcept {
  if (branch_ == Branch::SubNegOne || branch_ == Branch::SuperOne) {
    const double edge = kPi / rate_;
    return {-edge, edge};
  }
  return {-kInf, kInf};
}

Interval ClassifiedCurve::sampling_domain(double half_width, double margin) const noexcept {
  const auto d = domain();
  if (!d.bounded()) return {-half_width, half_width};
  const double eps = margin * (d.hi - d.lo);
  return {d.lo + eps, d.hi - eps};
}

void ClassifiedCurve::check_domain(double s) const {
  const auto d = domain();
  if (std::isnan(s) || !(d.bounded() ? d.contains(s) : std::isfinite(s))) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "s = " << s << " is outside the admissible interval (" << d.lo << ", "
        << d.hi << ") for c = " << c_;
    throw DomainError(msg.str());
  }
}

Point2 ClassifiedCurve::eval_unreflected(double s) const {
  switch (branch_) {
    case Branch::NegOne:
    case Branch::PlusOne: {
      const double sign = c_;
      return {sign * (2.0 * std::atan(s) - s), std::log1p(s * s)};
    }
    case Branch::Open:
      if (!reflect_) return open_case1_position(c_, s);
      {
        const auto p = open_case1_position(-c_, s);
        return {-p.x, p.y};
      }
    case Branch::SubNegOne:
    case Branch::SuperOne: {
      const double phi = rate_ * s;
      const double sign = c_ > 0 ? 1.0 : -1.0;
      const double x = sign * 2.0 * std::atan(a_c_ * std::tan(0.5 * phi)) - c_ * s;
      const double y = std::log((c_ + std::cos(phi)) / (c_ + 1.0));
      return {x, y};
    }
  }
  return {};
}

Derivatives ClassifiedCurve::derivatives_unreflected(double s) const {
  switch (branch_) {
    case Branch::NegOne:
    case Branch::PlusOne: {
      const double sign = c_;
      const double q = 1.0 + s * s;
      return {sign * (1.0 - s * s) / q, 2.0 * s / q, -sign * 4.0 * s / (q * q),
              2.0 * (1.0 - s * s) / (q * q)};
    }
    case Branch::Open:
      if (!reflect_) return open_case1_derivatives(c_, s);
      {
        const auto d = open_case1_derivatives(-c_, s);
        return {-d.xp, d.yp, -d.xpp, d.ypp};
      }
    case Branch::SubNegOne:
    case Branch::SuperOne: {
      const double m = rate_;
      const double phi = m * s;
      const double cs = std::cos(phi);
      const double sn = std::sin(phi);
      const double den = c_ + cs;
      return {-(1.0 + c_ * cs) / den, -m * sn / den, m * m * m * sn / (den * den),
              -m * m * (1.0 + c_ * cs) / (den * den)};
    }
  }
  return {};
}

Point2 ClassifiedCurve::eval(double s) const {
  check_domain(s);
  if (reflect_ && branch_ != Branch::Open) {
    const auto p = eval_unreflected(-s);
    return {-p.x, p.y};
  }
  return eval_unreflected(s);
}

Derivatives ClassifiedCurve::eval_derivatives(double s) const {
  check_domain(s);
  if (reflect_ && branch_ != Branch::Open) {
    const auto d = derivatives_unreflected(-s);
    return {d.xp, -d.yp, -d.xpp, d.ypp};
  }
  return derivatives_unreflected(s);
}

double ClassifiedCurve::tangent_xi(double s) const {
  const auto d = eval_derivatives(s);
  return 0.5 * std::atan2(d.yp, -d.xp);
}

ClassifiedCurve make_curve(double c, bool reflect) { return ClassifiedCurve(c, reflect); }
Point2 eval(const ClassifiedCurve& curve, double s) { return curve.eval(s); }
Derivatives eval_derivatives(const ClassifiedCurve& curve, double s) {
  return curve.eval_derivatives(s);
}

CurveSamples sample_curve(const ClassifiedCurve& curve, double lo, double hi,
                          std::size_t n) {
  auto s = linspace(lo, hi, n);
  std::vector<double> x(n), y(n);
  CurveSamples::DerivativeColumns d{std::vector<double>(n), std::vector<double>(n),
                                    std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = curve.eval(s[i]);
    const auto q = curve.eval_derivatives(s[i]);
    x[i] = p.x;
    y[i] = p.y;
    d.xp[i] = q.xp;
    d.yp[i] = q.yp;
    d.xpp[i] = q.xpp;
    d.ypp[i] = q.ypp;
  }
  return CurveSamples(std::move(s), std::move(x), std::move(y), std::move(d));
}

std::vector<LineSolution> lines_for(double c) {
  c = snap_unit(c);
  if (std::abs(c) > 1.0) return {};
  if (std::abs(c) == 1.0) return {LineSolution{c, {-c, 0.0}, {0.0, 0.0}}};
  const double w = std::sqrt((1.0 - c) * (1.0 + c));
  return {LineSolution{c, {-c, w}, {0.0, 0.0}}, LineSolution{c, {-c, -w}, {0.0, 0.0}}};
}

namespace {
void require_open(double c) {
  if (!(std::abs(c) < 1.0)) {
    std::ostringstream msg;
    msg << "symmetry identities need |c| < 1 (got c = " << c << ")";
    throw DomainError(msg.str());
  }
}
}  // namespace

double case1_x(double c, double s) {
  require_open(c);
  const double w = std::sqrt((1.0 - c) * (1.0 + c));
  return 2.0 * std::atan((std::exp(w * s) - c) / w) - c * s;
}

double case2_x(double c, double s) {
  require_open(c);
  const double w = std::sqrt((1.0 - c) * (1.0 + c));
  return -2.0 * std::atan((std::exp(w * s) + c) / w) - c * s;
}

double case1_y(double c, double s) {
  require_open(c);
  const double w = std::sqrt((1.0 - c) * (1.0 + c));
  return std::log(std::exp(w * s) + std::exp(-w * s) - 2.0 * c);
}

double case2_y(double c, double s) {
  require_open(c);
  const double w = std::sqrt((1.0 - c) * (1.0 + c));
  return std::log(std::exp(w * s) + std::exp(-w * s) + 2.0 * c);
}

SymmetryResiduals symmetry_check(double c, double s) {
  require_open(c);
  return {case1_x(c, s) + case2_x(-c, s), case1_y(c, s) - case2_y(-c, s)};
}

Point2 FrontReduction::to_standard_frame(Point2 p) const noexcept {
  const double cs = std::cos(rotation);
  const double sn = std::sin(rotation);
  return {scale * (cs * p.x - sn * p.y), scale * (sn * p.x + cs * p.y)};
}

Point2 FrontReduction::from_standard_frame(Point2 q) const noexcept {
  const double cs = std::cos(rotation);
  const double sn = std::sin(rotation);
  return {(cs * q.x + sn * q.y) / scale, (-sn * q.x + cs * q.y) / scale};
}

FrontReduction front_reduction(double c1, double c2, double c) {
  const double gx = -c1;
  const double gy = c2 - c;
  if (gx == 0.0 && gy == 0.0)
    throw InvalidInput(
        "constant density: equation reduces to zero Euclidean curvature (lines)");
  double rotation = kPi / 2.0 - std::atan2(gy, gx);
  if (rotation <= -kPi) rotation += 2.0 * kPi;
  if (rotation > kPi) rotation -= 2.0 * kPi;
  return {rotation, std::hypot(gx, gy), {SolutionKind::Line, SolutionKind::GrimReaper}};
}

}  // namespace wcc
