#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles/frozen_values.hpp"
#include "wcc/errors.hpp"
#include "wcc/geodesics.hpp"

using namespace wcc;
using std::numbers::pi;

namespace {

// Weighted length of a parametrized path t in [0,1] by chord lengths.
template <class Path>
double polyline_weighted_length(Path&& path, std::size_t n) {
  std::vector<double> s{0.0}, x, y;
  Point2 prev = path(0.0);
  x.push_back(prev.x);
  y.push_back(prev.y);
  for (std::size_t i = 1; i < n; ++i) {
    const auto p = path(static_cast<double>(i) / static_cast<double>(n - 1));
    s.push_back(s.back() + std::hypot(p.x - prev.x, p.y - prev.y));
    x.push_back(p.x);
    y.push_back(p.y);
    prev = p;
  }
  return weighted_length(CurveSamples(s, x, y));
}

}  // namespace

TEST_CASE("connectability") {
  CHECK(connectable({1, 0}, {1, 5}));
  CHECK_FALSE(connectable({0, 0}, {pi, 0}));
  CHECK_FALSE(connectable({0, 3}, {-4, 0}));
  CHECK(connectable({0, 0}, {1.7315, 2}));
  CHECK_THROWS_AS(connectable({1, 1}, {1, 1}), InvalidInput);
}

TEST_CASE("canonical arc is recovered") {
  const Point2 P{frozen::kGrimReaperXAtMinusOne, frozen::kGrimReaperYAtOne};
  const Point2 Q{frozen::kGrimReaperXAtPlusOne, frozen::kGrimReaperYAtOne};
  const auto sol = connect(P, Q);
  CHECK(sol.kind == GeodesicKind::GrimReaperArc);
  CHECK(std::abs(sol.x0) <= 1e-12);
  CHECK(std::abs(sol.y0) <= 1e-12);
  CHECK(sol.sP == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(sol.sQ == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(sol.reflect);
}

TEST_CASE("vertical segment") {
  const auto sol = connect({1, 0}, {1, 5});
  CHECK(sol.kind == GeodesicKind::VerticalSegment);
  CHECK(sol.weighted_len == doctest::Approx(frozen::kVerticalWeightedLengthFive).epsilon(1e-14));
  const auto unit = connect({-2, 1}, {-2, 0});
  CHECK(path_weighted_length(unit) == doctest::Approx(frozen::kVerticalWeightedLengthUnit * std::exp(0.0)).epsilon(1e-14));
  CHECK(path_weighted_length_quadrature(unit) == doctest::Approx(path_weighted_length(unit)).epsilon(1e-12));
}

TEST_CASE("not connectable") {
  CHECK_THROWS_AS(connect({0, 0}, {pi, 0}), NotConnectable);
  CHECK_THROWS_AS(connect({0, 0}, {4, 0}), NotConnectable);
  CHECK_THROWS_AS(connect({2, 2}, {2, 2}), InvalidInput);
}

TEST_CASE("path weighted length") {
  GeodesicSolution arc;
  arc.kind = GeodesicKind::GrimReaperArc;
  arc.sP = 0.0;
  arc.sQ = 1.0;
  CHECK(std::abs(path_weighted_length(arc) - frozen::kGrimReaperWeightedLengthUnit) <= 1e-14);
  CHECK(std::abs(path_weighted_length_quadrature(arc) - frozen::kGrimReaperWeightedLengthUnit) <=
        1e-12);
  arc.sQ = 0.0;
  CHECK(path_weighted_length(arc) == 0.0);
  CHECK(path_weighted_length_quadrature(arc) == 0.0);
}

TEST_CASE("round trip on random arcs") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> shift(-5.0, 5.0);
  std::uniform_real_distribution<double> param(-3.0, 3.0);
  for (int k = 0; k < 1000; ++k) {
    const double x0 = shift(rng), y0 = shift(rng);
    double sP = param(rng), sQ = param(rng);
    while (std::abs(sP - sQ) < 0.05) sQ = param(rng);
    GeodesicSolution truth;
    truth.kind = GeodesicKind::GrimReaperArc;
    truth.x0 = x0;
    truth.y0 = y0;
    const auto sol = connect(truth.point_at(sP), truth.point_at(sQ));
    CHECK(std::abs(sol.x0 - x0) <= 1e-8);
    CHECK(std::abs(sol.y0 - y0) <= 1e-8);
    CHECK(std::abs(sol.sP - sP) <= 1e-8);
    CHECK(std::abs(sol.sQ - sQ) <= 1e-8);
    const auto p = sol.point_at(sol.sP);
    CHECK(std::abs(p.x - truth.point_at(sP).x) <= 1e-8);
    CHECK(std::abs(p.y - truth.point_at(sP).y) <= 1e-8);
    CHECK(sol.weighted_len == doctest::Approx(2 * std::abs(std::sinh(sQ) - std::sinh(sP)) * std::exp(y0)).epsilon(1e-8));
  }
}

TEST_CASE("endpoint order does not matter") {
  const Point2 P{0.3, 1.0}, Q{2.1, -0.4};
  const auto a = connect(P, Q);
  const auto b = connect(Q, P);
  CHECK(a.x0 == doctest::Approx(b.x0).epsilon(1e-14));
  CHECK(a.y0 == doctest::Approx(b.y0).epsilon(1e-14));
  CHECK(a.sP == doctest::Approx(b.sQ).epsilon(1e-12));
  CHECK(a.weighted_len == doctest::Approx(b.weighted_len).epsilon(1e-12));
}

TEST_CASE("endpoints strictly inside the arc's x-range") {
  const auto sol = connect({-1.0, 0.0}, {1.5, 4.0});
  CHECK(sol.x0 < -1.0);
  CHECK(sol.x0 + pi > 1.5);
}

TEST_CASE("shooting residual changes sign exactly once") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_real_distribution<double> dx(-3.1, 3.1);
  for (int k = 0; k < 200; ++k) {
    const Point2 P{coord(rng), coord(rng)};
    const Point2 Q{P.x + dx(rng), coord(rng)};
    CHECK(residual_sign_changes(P, Q, 1000) == 1);
  }
}

TEST_CASE("geodesic beats the segment and perturbed paths") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> dx(-2.8, 2.8);
  std::uniform_real_distribution<double> amp(-0.3, 0.3);
  std::uniform_int_distribution<int> mode(1, 3);
  for (int pair = 0; pair < 20; ++pair) {
    const Point2 P{coord(rng), coord(rng)};
    Point2 Q{P.x + dx(rng), coord(rng)};
    if (std::abs(Q.x - P.x) < 0.1) Q.x = P.x + 0.1;
    const auto sol = connect(P, Q);
    const double best = path_weighted_length(sol);
    const double segment =
        polyline_weighted_length([&](double t) { return Point2{P.x + t * (Q.x - P.x), P.y + t * (Q.y - P.y)}; }, 1000);
    CHECK(best <= segment);
    for (int k = 0; k < 20; ++k) {
      const double ax = amp(rng), ay = amp(rng);
      const int m = mode(rng);
      auto path = [&](double t) {
        const auto p = sol.point_at(sol.sP + t * (sol.sQ - sol.sP));
        const double bump = std::sin(pi * m * t);
        return Point2{p.x + ax * bump, p.y + ay * bump};
      };
      CHECK(best <= polyline_weighted_length(path, 1000));
    }
  }
}
