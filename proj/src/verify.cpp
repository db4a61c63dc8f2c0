#include "wcc/verify.hpp"

#include <algorithm>
#include <cmath>

#include "wcc/errors.hpp"
#include "wcc/families.hpp"
#include "wcc/geom_core.hpp"
#include "wcc/ode_oracle.hpp"

namespace wcc {
namespace {

struct Worst {
  double err = 0.0;
  double at = 0.0;
  void update(double e, double s) {
    if (!(e <= err)) {
      err = e;
      at = s;
    }
  }
};

// 99.99% of a bounded domain; [-5, 5] otherwise.
Interval oracle_range(const ClassifiedCurve& curve) {
  return curve.sampling_domain(5.0, 0.5e-4);
}

}  // namespace

std::vector<CheckResult> run_verification(std::span<const double> c_list,
                                          const VerifyOptions& options) {
  if (c_list.empty()) throw InvalidInput("verification needs at least one c value");
  std::vector<double> grid(c_list.begin(), c_list.end());
  std::sort(grid.begin(), grid.end());

  std::vector<CheckResult> out;
  for (double c : grid) {
    const ClassifiedCurve curve(c, options.reflect);
    const auto dom = curve.sampling_domain();

    Worst kf, unit;
    for (double s : linspace(dom.lo, dom.hi, 1001)) {
      const auto d = curve.eval_derivatives(s);
      kf.update(std::abs(weighted_curvature(d) - curve.c()), s);
      unit.update(std::abs(d.xp * d.xp + d.yp * d.yp - 1.0), s);
    }
    out.push_back({curve.c(), "families.kf", kf.err, kf.at, options.tol});
    out.push_back({curve.c(), "families.unit_speed", unit.err, unit.at, options.tol});

    const auto n = static_cast<std::size_t>(std::llround((dom.hi - dom.lo) / options.fd_step)) + 1;
    const auto samples = sample_curve(curve, dom.lo, dom.hi, std::max<std::size_t>(n, 3));
    Worst fd;
    for (std::size_t i = 1; i + 1 < samples.size(); ++i)
      fd.update(std::abs(weighted_curvature_fd(samples, i) - curve.c()), samples.s()[i]);
    out.push_back({curve.c(), "geom_core.fd_kf", fd.err, fd.at, options.tol});

    const auto range = oracle_range(curve);
    const auto traj = integrate_xi(curve.c(), canonical_xi0(curve), range.lo, range.hi,
                                   options.ode_step);
    const auto alignment = align(traj, curve);
    Worst dev;
    for (std::size_t i = 0; i < traj.s.size(); ++i) {
      const double s = traj.s[i] + alignment.s_shift;
      if (curve.domain().bounded() && !curve.domain().contains(s)) continue;
      const auto p = curve.eval(s);
      dev.update(std::hypot(traj.x[i] - p.x - alignment.translation.x,
                            traj.y[i] - p.y - alignment.translation.y),
                 traj.s[i]);
    }
    out.push_back({curve.c(), "ode_oracle.deviation", dev.err, dev.at, options.tol});

    Worst res;
    for (std::size_t i = 1; i + 1 < traj.s.size(); ++i) {
      const double dxi = (traj.xi[i + 1] - traj.xi[i - 1]) / (traj.s[i + 1] - traj.s[i - 1]);
      res.update(std::abs(-2.0 * dxi + std::cos(2.0 * traj.xi[i]) - curve.c()), traj.s[i]);
    }
    out.push_back({curve.c(), "ode_oracle.residual", res.err, res.at, options.tol});
  }
  return out;
}

}  // namespace wcc
