#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "quadcover/conic.hpp"
#include "quadcover/planner.hpp"
#include "support/case_study.hpp"
#include "support/generators.hpp"

using namespace quadcover;

namespace {

constexpr double kPi = std::numbers::pi;

EllipseFootprint circle_footprint(Point2 c, double r) {
  return EllipseFootprint{c, r, r, 0.0, 0};
}

// 2x2 symmetric eigendecomposition oracle for the quadratic part
struct QuadFormAxes {
  double lmin, lmax, angle_min;  // angle of the eigenvector of the smaller eigenvalue
};

QuadFormAxes quad_form_axes(double A, double B, double C) {
  const double tr = A + C;
  const double det = A * C - B * B / 4;
  const double disc = std::sqrt(tr * tr / 4 - det);
  const double lmin = tr / 2 - disc, lmax = tr / 2 + disc;
  // (A - l) x + B/2 y = 0
  double vx = -B / 2, vy = A - lmin;
  if (std::abs(vx) < 1e-300 && std::abs(vy) < 1e-300) vx = 1, vy = 0;
  return {lmin, lmax, std::atan2(vy, vx)};
}

}  // namespace

TEST_CASE("map_circle basics") {
  SUBCASE("identity keeps the unit circle") {
    const auto c = map_circle(Homography::identity(), {{0, 0}, 1.0});
    CHECK(c.A == doctest::Approx(c.C).epsilon(1e-12));
    CHECK(std::abs(c.B) < 1e-12);
    CHECK(std::abs(c.D) < 1e-12);
    CHECK(std::abs(c.E) < 1e-12);
    CHECK(c.F == doctest::Approx(-c.A).epsilon(1e-12));
  }

  SUBCASE("axis scaling turns the unit circle into x^2/4 + y^2 = 1") {
    const auto h = Homography::from_row_major({2, 0, 0, 0, 1, 0, 0, 0, 1});
    const auto c = map_circle(h, {{0, 0}, 1.0});
    // normalized: (0.25, 0, 1, 0, 0, -1) up to overall sign
    const double s = c.C;  // expect +-1
    CHECK(std::abs(std::abs(s) - 1.0) < 1e-12);
    CHECK(c.A / s == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(c.F / s == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(c.B) < 1e-12);
  }

  SUBCASE("case-study reference map reproduces footprint 1") {
    const auto c = map_circle(testdata::reference_homography(), {{0.25, 0.25}, 0.25});
    const auto e = extract_ellipse(c, 1);
    CHECK(std::abs(e.a - 93.8) < 0.1);
    CHECK(std::abs(e.b - 83.0) < 0.1);
  }

  SUBCASE("image of the case-study circle is not a circle") {
    const auto c = map_circle(testdata::reference_homography(), {{0.25, 0.25}, 0.25});
    CHECK((std::abs(c.A - c.C) > 1e-6 || std::abs(c.B) > 1e-6));
  }
}

TEST_CASE("classify") {
  CHECK(classify(Conic::normalized(1, 0, 1, 0, 0, -1)) == ConicType::Ellipse);
  CHECK(classify(Conic::normalized(1, 0, 0, 0, -1, 0)) == ConicType::Parabola);
  CHECK(classify(Conic::normalized(0, 1, 0, 0, 0, -1)) == ConicType::Hyperbola);
  // imaginary ellipse: x^2 + y^2 + 1 = 0
  CHECK(classify(Conic::normalized(1, 0, 1, 0, 0, 1)) == ConicType::Degenerate);
  // two lines x^2 - y^2 = 0
  CHECK(classify(Conic::normalized(1, 0, -1, 0, 0, 0)) == ConicType::Degenerate);
}

TEST_CASE("extract_ellipse") {
  SUBCASE("axis-aligned") {
    const auto e = extract_ellipse(Conic::normalized(0.25, 0, 1, 0, 0, -1), 3);
    CHECK(e.a == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(e.b == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(e.center.x) < 1e-12);
    CHECK(std::abs(e.center.y) < 1e-12);
    CHECK(std::abs(e.phi) < 1e-12);
    CHECK(e.index == 3);
  }

  SUBCASE("rotated: 5x^2 - 6xy + 5y^2 - 8 = 0") {
    const auto e = extract_ellipse(Conic::normalized(5, -6, 5, 0, 0, -8), 0);
    CHECK(e.a == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(e.b == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.phi == doctest::Approx(kPi / 4).epsilon(1e-12));

    // eigen-decomposition oracle: major axis along the smaller eigenvalue
    const auto ax = quad_form_axes(5, -6, 5);
    CHECK(ax.lmin == doctest::Approx(2.0));
    CHECK(ax.lmax == doctest::Approx(8.0));
    double want = std::remainder(ax.angle_min, kPi);
    if (want <= -kPi / 2) want += kPi;
    if (want > kPi / 2) want -= kPi;
    CHECK(e.phi == doctest::Approx(want).epsilon(1e-12));
  }

  SUBCASE("shifted circle") {
    // (x-3)^2 + (y+2)^2 = 4
    const auto e = extract_ellipse(Conic::normalized(1, 0, 1, -6, 4, 9), 0);
    CHECK(e.a == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(e.b == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(e.center.x == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(e.center.y == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(e.phi == 0.0);  // circle convention
  }

  SUBCASE("rejects non-ellipses") {
    CHECK_THROWS_AS(extract_ellipse(Conic::normalized(0, 1, 0, 0, 0, -1), 0),
                    NotAnEllipseError);
  }

  SUBCASE("invariant under conic rescaling") {
    std::mt19937_64 rng(23);
    const auto h = solve_homography(unit_square(), testdata::case_study_quad());
    const auto c = map_circle(h, {{0.4, 0.6}, 0.2});
    const auto base = extract_ellipse(c, 0);
    for (double lambda : {2.0, -1.0, 1e-7, -3.5e4}) {
      const Conic scaled = Conic::normalized(lambda * c.A, lambda * c.B, lambda * c.C,
                                             lambda * c.D, lambda * c.E, lambda * c.F);
      const auto e = extract_ellipse(scaled, 0);
      CHECK(e.a == doctest::Approx(base.a).epsilon(1e-12));
      CHECK(e.b == doctest::Approx(base.b).epsilon(1e-12));
      CHECK(e.center.x == doctest::Approx(base.center.x).epsilon(1e-12));
      CHECK(e.phi == doctest::Approx(base.phi).epsilon(1e-12));
    }
  }
}

TEST_CASE("boundary consistency of extracted footprints") {
  const auto h = solve_homography(unit_square(), testdata::case_study_quad());
  const auto pack = get_packing(9);
  for (const auto& center : pack.centers) {
    const auto c = map_circle(h, {center, pack.radius});
    const auto e = extract_ellipse(c, 0);
    for (int k = 0; k < 64; ++k) {
      const Point2 p = e.boundary_point(2 * kPi * k / 64);
      CHECK(conic_residual(c, p) < 1e-6);
    }
  }
}

TEST_CASE("tangency_check basics") {
  const auto c1 = circle_footprint({0, 0}, 1);
  CHECK(tangency_check(c1, circle_footprint({2, 0}, 1)) == PairRelation::Tangent);
  CHECK(tangency_check(c1, circle_footprint({3, 0}, 1)) == PairRelation::Disjoint);
  CHECK(tangency_check(c1, circle_footprint({1.5, 0}, 1)) == PairRelation::Overlapping);
  // nested: either argument order reports overlap
  CHECK(tangency_check(c1, circle_footprint({0.1, 0}, 0.3)) == PairRelation::Overlapping);
  CHECK(tangency_check(circle_footprint({0.1, 0}, 0.3), c1) == PairRelation::Overlapping);
}

TEST_CASE("tangency survives the case-study map") {
  const auto h = testdata::reference_homography();
  const auto e1 = extract_ellipse(map_circle(h, {{0.25, 0.25}, 0.25}), 1);
  const auto e2 = extract_ellipse(map_circle(h, {{0.75, 0.25}, 0.25}), 2);
  CHECK(tangency_check(e1, e2) == PairRelation::Tangent);

  // the shared point (0.5, 0.25) maps onto both conics
  const Point2 shared = h.apply({0.5, 0.25});
  CHECK(conic_residual(map_circle(h, {{0.25, 0.25}, 0.25}), shared) < 1e-9);
  CHECK(conic_residual(map_circle(h, {{0.75, 0.25}, 0.25}), shared) < 1e-9);
  CHECK(std::abs(e1.implicit_value(shared)) < 1e-6);
  CHECK(std::abs(e2.implicit_value(shared)) < 1e-6);
}

TEST_CASE("circle images under convex-quad maps are ellipses") {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 30; ++iter) {
    const auto dst = testgen::random_convex_quad(rng);
    const auto h = solve_homography(unit_square(), dst);
    for (int k = 0; k < 5; ++k) {
      const double r = testgen::uniform(rng, 0.02, 0.45);
      const Circle c{testgen::random_center(rng, r), r};
      const Conic conic = map_circle(h, c);  // throws if not an ellipse
      CHECK(classify(conic) == ConicType::Ellipse);
    }
  }
}

TEST_CASE("pair relations are preserved by the map") {
  std::mt19937_64 rng(31);
  int tangent = 0, disjoint = 0, overlapping = 0;
  for (int iter = 0; iter < 12; ++iter) {
    const auto dst = testgen::random_convex_quad(rng);
    const auto h = solve_homography(unit_square(), dst);
    for (int k = 0; k < 5; ++k) {
      const double r1 = testgen::uniform(rng, 0.02, 0.12);
      const double r2 = testgen::uniform(rng, 0.02, 0.12);
      const int kind = static_cast<int>(rng() % 3);
      double dist = r1 + r2;
      if (kind == 1) dist = testgen::uniform(rng, (r1 + r2) * 1.05, (r1 + r2) * 1.6);
      if (kind == 2) dist = testgen::uniform(rng, std::max(r1, r2) - std::min(r1, r2) + 0.2 * std::min(r1, r2),
                                             (r1 + r2) * 0.95);
      // place the pair fully inside the unit square
      Point2 c1{}, c2{};
      for (;;) {
        c1 = testgen::random_center(rng, std::max(r1, 0.26));
        const double ang = testgen::uniform(rng, 0, 2 * kPi);
        c2 = {c1.x + dist * std::cos(ang), c1.y + dist * std::sin(ang)};
        if (c2.x >= r2 && c2.x <= 1 - r2 && c2.y >= r2 && c2.y <= 1 - r2) break;
      }
      const auto e1 = extract_ellipse(map_circle(h, {c1, r1}), 1);
      const auto e2 = extract_ellipse(map_circle(h, {c2, r2}), 2);
      const auto rel = tangency_check(e1, e2);
      if (kind == 0) {
        CHECK(rel == PairRelation::Tangent);
        ++tangent;
      } else if (kind == 1) {
        CHECK(rel == PairRelation::Disjoint);
        ++disjoint;
      } else {
        CHECK(rel == PairRelation::Overlapping);
        ++overlapping;
      }
    }
  }
  CHECK(tangent > 5);
  CHECK(disjoint > 5);
  CHECK(overlapping > 5);
}

TEST_CASE("ellipse_area") {
  CHECK(ellipse_area(EllipseFootprint{{0, 0}, 2, 1, 0, 0}) ==
        doctest::Approx(2 * kPi).epsilon(1e-15));

  const auto h = testdata::reference_homography();
  for (const auto& [m, want] : {std::pair{4, testdata::kFleet4AreaSumM2},
                                std::pair{9, testdata::kFleet9AreaSumM2}}) {
    const auto pack = get_packing(m);
    double sum = 0;
    for (const auto& c : pack.centers) {
      sum += ellipse_area(extract_ellipse(map_circle(h, {c, pack.radius}), 0));
    }
    CHECK(sum == doctest::Approx(want).epsilon(0.002));
  }
}
