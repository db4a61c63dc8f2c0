#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles/frozen_values.hpp"
#include "wcc/convergence.hpp"
#include "wcc/errors.hpp"
#include "wcc/families.hpp"

using namespace wcc;

TEST_CASE("rescaled curvature values") {
  CHECK(rescaled_curvature(2.0, 0.0) == doctest::Approx(frozen::kRescaledC2AtZero).epsilon(1e-15));
  const double edge = std::numbers::pi / std::sqrt(3.0);
  CHECK(rescaled_curvature(2.0, edge * (1 - 1e-9)) ==
        doctest::Approx(frozen::kRescaledC2AtEdge).epsilon(1e-12));
  CHECK(std::abs(rescaled_curvature(1e6, 0.0) - 1.0) <= 2e-6);
}

TEST_CASE("rescaled curvature errors") {
  CHECK_THROWS_AS(rescaled_curvature(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(rescaled_curvature(-3.0, 0.0), DomainError);
  CHECK_THROWS_AS(rescaled_curvature(2.0, 2.0), DomainError);
}

TEST_CASE("printed and simplified forms agree") {
  for (double c : {1.1, 2.0, 10.0, 100.0}) {
    const auto dom = ClassifiedCurve(c).sampling_domain();
    for (double s : linspace(dom.lo, dom.hi, 2001)) {
      const auto f = rescaled_curvature_forms(c, s);
      CHECK(std::abs(f.printed - f.simplified) <= 1e-13);
    }
  }
}

TEST_CASE("agrees with the Euclidean curvature of the rescaled curve") {
  for (double c : {1.5, 4.0, 30.0}) {
    const auto curve = make_curve(c);
    const double m = std::sqrt(c * c - 1.0);
    const auto dom = curve.sampling_domain();
    for (double s : linspace(dom.lo, dom.hi, 301)) {
      auto d = curve.eval_derivatives(s);
      // beta(sigma) = m alpha(sigma / m): beta' = alpha', beta'' = alpha'' / m.
      d.xpp /= m;
      d.ypp /= m;
      CHECK(std::abs(euclidean_curvature(d) - rescaled_curvature(c, s)) <= 1e-9);
    }
  }
}

TEST_CASE("sweep reports") {
  const std::vector<double> cs{10.0, 100.0, 1000.0};
  const auto reports = convergence_sweep(cs);
  REQUIRE(reports.size() == 3);
  const double expected[] = {frozen::kSupDevC10, frozen::kSupDevC100, frozen::kSupDevC1000};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& r = reports[i];
    const double m = std::sqrt(r.c * r.c - 1.0);
    CHECK(std::abs(r.r_min - m / (r.c + 1)) <= 1e-12);
    CHECK(std::abs(r.r_max - m / (r.c - 1)) <= 1e-12);
    CHECK(r.r_min <= 1.0);
    CHECK(r.r_max >= 1.0);
    CHECK(std::abs(r.sup_dev - expected[i]) <= 1e-12);
    CHECK(std::abs(r.sampled_sup_dev - r.sup_dev) <= 1e-10);
  }
  CHECK(reports[0].sup_dev > reports[1].sup_dev);
  CHECK(reports[1].sup_dev > reports[2].sup_dev);
  CHECK(std::abs(reports[1].sup_dev * 100.0 - 1.0) <= 0.02);
}

TEST_CASE("sweep decreases along increasing c") {
  std::vector<double> cs;
  for (double c = 1.5; c < 5000.0; c *= 1.7) cs.push_back(c);
  const auto reports = convergence_sweep(cs);
  for (std::size_t i = 1; i < reports.size(); ++i)
    CHECK(reports[i].sup_dev < reports[i - 1].sup_dev);
}

TEST_CASE("sweep rejects c <= 1") {
  const std::vector<double> cs{3.0, 1.0};
  CHECK_THROWS_AS(convergence_sweep(cs), DomainError);
}
