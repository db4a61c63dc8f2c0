#include "wcc/ode_oracle.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include <boost/math/tools/roots.hpp>

#include "wcc/errors.hpp"

namespace wcc {
namespace {

struct State {
  double xi, x, y;
};

State rhs(double c, const State& st) {
  const double cs = std::cos(2.0 * st.xi);
  return {0.5 * (cs - c), -cs, std::sin(2.0 * st.xi)};
}

State axpy(const State& base, double h, const State& k) {
  return {base.xi + h * k.xi, base.x + h * k.x, base.y + h * k.y};
}

State rk4_step(double c, const State& st, double h) {
  const State k1 = rhs(c, st);
  const State k2 = rhs(c, axpy(st, 0.5 * h, k1));
  const State k3 = rhs(c, axpy(st, 0.5 * h, k2));
  const State k4 = rhs(c, axpy(st, h, k3));
  return {st.xi + h / 6.0 * (k1.xi + 2.0 * k2.xi + 2.0 * k3.xi + k4.xi),
          st.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
          st.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y)};
}

struct Grid {
  std::size_t below;  // nodes with s < 0
  std::size_t above;  // nodes with s > 0
};

Grid make_grid(double s_lo, double s_hi, double step) {
  if (!(step > 0.0) || !std::isfinite(step))
    throw InvalidInput("integration step must be positive and finite");
  if (!std::isfinite(s_lo) || !std::isfinite(s_hi) || !(s_lo <= 0.0 && 0.0 <= s_hi))
    throw InvalidInput("integration range must be finite and contain s = 0");
  // Ranges that are an integer multiple of the step keep their end node.
  const auto count = [step](double len) {
    return static_cast<std::size_t>(std::floor(len / step * (1.0 + 1e-12)));
  };
  return {count(-s_lo), count(s_hi)};
}

double shortest_diff(double a, double b) {
  // xi is defined modulo pi.
  double d = std::fmod(a - b, std::numbers::pi);
  if (d > std::numbers::pi / 2) d -= std::numbers::pi;
  if (d < -std::numbers::pi / 2) d += std::numbers::pi;
  return d;
}

}  // namespace

std::size_t OdeTrajectory::origin_index() const {
  const auto it = std::find(s.begin(), s.end(), 0.0);
  if (it == s.end()) throw InvalidInput("trajectory has no sample at s = 0");
  return static_cast<std::size_t>(it - s.begin());
}

double OdeTrajectory::max_residual() const {
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const double dxi = (xi[i + 1] - xi[i - 1]) / (s[i + 1] - s[i - 1]);
    worst = std::max(worst, std::abs(-2.0 * dxi + std::cos(2.0 * xi[i]) - c));
  }
  return worst;
}

OdeTrajectory integrate_xi(double c, double xi0, double s_lo, double s_hi, double step) {
  if (!std::isfinite(c) || !std::isfinite(xi0))
    throw InvalidInput("c and xi0 must be finite");
  const auto grid = make_grid(s_lo, s_hi, step);
  const std::size_t n = grid.below + grid.above + 1;

  OdeTrajectory out{c, xi0, step, std::vector<double>(n), std::vector<double>(n),
                    std::vector<double>(n), std::vector<double>(n)};
  auto store = [&](std::size_t i, double s, const State& st) {
    if (!std::isfinite(st.xi) || !std::isfinite(st.x) || !std::isfinite(st.y))
      throw Error("RK4 integration produced a non-finite value");
    out.s[i] = s;
    out.xi[i] = st.xi;
    out.x[i] = st.x;
    out.y[i] = st.y;
  };

  const State start{xi0, 0.0, 0.0};
  store(grid.below, 0.0, start);
  State st = start;
  for (std::size_t k = 1; k <= grid.above; ++k) {
    st = rk4_step(c, st, step);
    store(grid.below + k, static_cast<double>(k) * step, st);
  }
  st = start;
  for (std::size_t k = 1; k <= grid.below; ++k) {
    st = rk4_step(c, st, -step);
    store(grid.below - k, -static_cast<double>(k) * step, st);
  }
  return out;
}

double canonical_xi0(const ClassifiedCurve& curve) { return curve.tangent_xi(0.0); }

OdeTrajectory trajectory_from_curve(const ClassifiedCurve& curve, double s_lo,
                                    double s_hi, double step) {
  const auto grid = make_grid(s_lo, s_hi, step);
  const std::size_t n = grid.below + grid.above + 1;
  OdeTrajectory out{curve.c(), canonical_xi0(curve), step, std::vector<double>(n),
                    std::vector<double>(n), std::vector<double>(n),
                    std::vector<double>(n)};
  double prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = (static_cast<double>(i) - static_cast<double>(grid.below)) * step;
    const auto p = curve.eval(s);
    double xi = curve.tangent_xi(s);
    if (i > 0) xi = prev + shortest_diff(xi, prev);
    prev = xi;
    out.s[i] = i == grid.below ? 0.0 : s;
    out.xi[i] = xi;
    out.x[i] = p.x;
    out.y[i] = p.y;
  }
  // Keep xi(0) on the principal branch.
  const double offset = out.xi[grid.below] - canonical_xi0(curve);
  for (auto& v : out.xi) v -= offset;
  return out;
}

Alignment align(const OdeTrajectory& traj, const ClassifiedCurve& curve) {
  if (ClassifiedCurve(traj.c).c() != curve.c())
    throw InvalidInput("trajectory and curve have different c");
  const auto origin = traj.origin_index();
  const double target_xi = traj.xi[origin];
  const double tx = -std::cos(2.0 * target_xi);
  const double ty = std::sin(2.0 * target_xi);

  // cross(T(s), T0) vanishes where the tangents are parallel; the tangent
  // angle is strictly monotone on every non-line branch.
  auto mismatch = [&](double s) {
    const auto d = curve.eval_derivatives(s);
    return d.xp * ty - d.yp * tx;
  };
  auto agrees = [&](double s) {
    const auto d = curve.eval_derivatives(s);
    return d.xp * tx + d.yp * ty > 0.0;
  };

  constexpr std::size_t kScan = 4001;
  std::vector<double> nodes(kScan);
  const auto dom = curve.domain();
  if (dom.bounded()) {
    const auto inner = curve.sampling_domain();
    nodes = linspace(inner.lo, inner.hi, kScan);
  } else {
    // sinh spacing: fine near 0, reaching |s| = 1e4 for the slowly turning
    // c = +-1 curves.
    const double t = std::asinh(1e4);
    for (std::size_t i = 0; i < kScan; ++i)
      nodes[i] = std::sinh(-t + 2.0 * t * static_cast<double>(i) / (kScan - 1));
    nodes[kScan / 2] = 0.0;
  }

  std::optional<double> found;
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](double s) {
    if (!agrees(s)) return;
    if (std::abs(s) < best) {
      best = std::abs(s);
      found = s;
    }
  };
  double prev = mismatch(nodes[0]);
  if (prev == 0.0) consider(nodes[0]);
  for (std::size_t i = 1; i < kScan; ++i) {
    const double cur = mismatch(nodes[i]);
    if (cur == 0.0) {
      consider(nodes[i]);
    } else if (prev != 0.0 && (prev < 0.0) != (cur < 0.0)) {
      boost::uintmax_t iters = 200;
      const auto root = boost::math::tools::toms748_solve(
          mismatch, nodes[i - 1], nodes[i], prev, cur,
          boost::math::tools::eps_tolerance<double>(52), iters);
      consider(0.5 * (root.first + root.second));
    }
    prev = cur;
  }
  if (!found) {
    std::ostringstream msg;
    msg << "no parameter of the c = " << curve.c() << " curve (" << to_string(curve.branch())
        << ") has the trajectory's initial tangent; wrong initial condition for this branch";
    throw RootFindError(msg.str());
  }
  const double s_star = *found;
  const auto p = curve.eval(s_star);
  return {s_star, {traj.x[origin] - p.x, traj.y[origin] - p.y}};
}

double max_deviation(const OdeTrajectory& traj, const ClassifiedCurve& curve,
                     const Alignment& alignment) {
  const auto dom = curve.domain();
  double worst = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < traj.s.size(); ++i) {
    const double s = traj.s[i] + alignment.s_shift;
    if (dom.bounded() ? !dom.contains(s) : !std::isfinite(s)) continue;
    const auto p = curve.eval(s);
    const double dx = traj.x[i] - (p.x + alignment.translation.x);
    const double dy = traj.y[i] - (p.y + alignment.translation.y);
    worst = std::max(worst, std::hypot(dx, dy));
    any = true;
  }
  if (!any) throw DomainError("trajectory and curve domains do not overlap");
  return worst;
}

}  // namespace wcc
