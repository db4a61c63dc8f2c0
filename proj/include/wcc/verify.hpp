#pragma once

// End-to-end invariant checks over a grid of c values, shared by the
// `verify` command and the acceptance suite.

#include <span>
#include <string>
#include <vector>

namespace wcc {

struct CheckResult {
  double c;
  std::string check;
  double max_err;
  double at_s;  // parameter where max_err occurs
  double tol;
  bool pass() const noexcept { return max_err <= tol; }
};

struct VerifyOptions {
  double tol = 1e-6;
  double ode_step = 1e-4;
  double fd_step = 1e-3;
  bool reflect = false;
};

inline constexpr double kDefaultGrid[] = {-3, -1.5, -1, -0.5, 0, 0.5, 1, 1.5, 3};

/// For each c: analytic k_f and unit speed (families), finite-difference k_f
/// (geom-core), closed form vs RK4 deviation and the ODE residual
/// (ode-oracle). Results are ordered by c, then check.
std::vector<CheckResult> run_verification(std::span<const double> c_list,
                                          const VerifyOptions& options = {});

}  // namespace wcc
