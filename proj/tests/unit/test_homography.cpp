#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "quadcover/homography.hpp"
#include "support/case_study.hpp"
#include "support/generators.hpp"

using namespace quadcover;

namespace {

Eigen::Matrix<double, 8, 9> dlt_as_eigen(const Quadrilateral& src, const Quadrilateral& dst) {
  const auto rows = build_dlt_matrix(src, dst);
  Eigen::Matrix<double, 8, 9> B;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 9; ++j)
      B(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return B;
}

// intersection of the lines through (p1,p2) and (p3,p4)
Point2 line_intersection(Point2 p1, Point2 p2, Point2 p3, Point2 p4) {
  const Point2 d1 = p2 - p1, d2 = p4 - p3;
  const double t = cross(p3 - p1, d2) / cross(d1, d2);
  return p1 + t * d1;
}

}  // namespace

TEST_CASE("DLT matrix structure") {
  const auto sq = unit_square();

  SUBCASE("identity correspondence has null vector vec(I)") {
    const auto B = dlt_as_eigen(sq, sq);
    Eigen::Matrix<double, 9, 1> h;
    h << 1, 0, 0, 0, 1, 0, 0, 0, 1;
    h /= std::sqrt(3.0);
    CHECK((B * h).norm() < 1e-14);
    const auto svd = B.jacobiSvd();
    CHECK(svd.singularValues()(7) > 1e-3);  // rank 8
  }

  SUBCASE("case-study correspondence: rank 8 with a clean null space") {
    const auto B = dlt_as_eigen(sq, testdata::case_study_quad());
    const Eigen::JacobiSVD<Eigen::Matrix<double, 8, 9>> svd(
        B, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    // 8x9 system: all eight singular values well away from zero
    CHECK(sv(7) / sv(0) > 1e-9);
    // but the 9-dim null direction exists: B * v9 = 0
    const Eigen::Matrix<double, 9, 1> v9 = svd.matrixV().col(8);
    CHECK((B * v9).norm() / sv(0) <= 1e-9);
  }

  SUBCASE("axis-aligned rectangle gives the affine null vector") {
    const double u = 3.5, v = 0.7;
    const auto rect = Quadrilateral::from_vertices({{{0, 0}, {u, 0}, {u, v}, {0, v}}});
    const auto B = dlt_as_eigen(sq, rect);
    Eigen::Matrix<double, 9, 1> h;
    h << u, 0, 0, 0, v, 0, 0, 0, 1;
    CHECK((B * h).norm() < 1e-12 * h.norm());
  }
}

TEST_CASE("solve_homography golden values") {
  SUBCASE("case-study quad reproduces the reference matrix") {
    const auto h = solve_homography(unit_square(), testdata::case_study_quad());
    const auto ref = testdata::reference_homography();
    // reference entries carry 4 decimals
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        CHECK(std::abs(h.at(r, c) - ref.at(r, c)) < 5e-4);
      }
    }
  }

  SUBCASE("identity") {
    const auto h = solve_homography(unit_square(), unit_square());
    const double inv_s3 = 1.0 / std::sqrt(3.0);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        CHECK(std::abs(h.at(r, c) - (r == c ? inv_s3 : 0.0)) < 1e-12);
      }
    }
  }

  SUBCASE("uniform scale by 2") {
    const auto big = Quadrilateral::from_vertices({{{0, 0}, {2, 0}, {2, 2}, {0, 2}}});
    const auto h = solve_homography(unit_square(), big);
    // proportional to diag(2,2,1), normalized: diag(2,2,1)/3
    CHECK(h.at(0, 0) == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(h.at(1, 1) == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(h.at(2, 2) == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(std::abs(h.at(0, 1)) < 1e-12);
    CHECK(std::abs(h.at(2, 0)) < 1e-12);
  }

  SUBCASE("degenerate destination is rejected") {
    // a valid quad squeezed towards a segment cannot be built at all, so
    // degeneracy surfaces as a geometry error at construction
    CHECK_THROWS_AS(
        Quadrilateral::from_vertices({{{0, 0}, {1, 0}, {2, 0}, {3, 0}}}),
        DegenerateQuadError);
  }
}

TEST_CASE("homography invariants on random quads") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 40; ++iter) {
    const auto dst = testgen::random_convex_quad(rng);
    const auto h = solve_homography(unit_square(), dst);

    double norm2 = 0;
    for (double v : h.coeffs()) norm2 += v * v;
    CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(h.at(2, 2) >= 0);
    CHECK(std::abs(h.det()) > 1e-12);

    // reprojection of the four correspondences
    const double diag = dst.bbox_diagonal();
    for (int i = 0; i < 4; ++i) {
      const Point2 img = h.apply(unit_square().vertex(i));
      CHECK(norm(img - dst.vertex(i)) < 1e-9 * diag);
    }

    // adjugate identity H * adj(H) = det(H) I
    const auto adj = inverse_coefficients(h).hhat;
    const auto& m = h.coeffs();
    const double det = h.det();
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        double sum = 0;
        for (int k = 0; k < 3; ++k)
          sum += m[static_cast<std::size_t>(3 * r + k)] * adj[static_cast<std::size_t>(3 * k + c)];
        CHECK(std::abs(sum - (r == c ? det : 0.0)) < 1e-9);
      }
    }

    // round-trip on random interior points
    for (int k = 0; k < 25; ++k) {
      const Point2 p{testgen::uniform(rng, 0.01, 0.99), testgen::uniform(rng, 0.01, 0.99)};
      const Point2 q = h.apply(p);
      const Point2 back = h.apply_inverse(q);
      CHECK(norm(back - p) < 1e-9);
      const Point2 there = h.apply(back);
      CHECK(norm(there - q) < 1e-9 * (1 + norm(q)));
    }

    // one-to-one: sign of det(J) constant over a 20x20 grid
    const double sign0 = h.jacobian_det({0, 0}) > 0 ? 1.0 : -1.0;
    for (int gx = 0; gx < 20; ++gx) {
      for (int gy = 0; gy < 20; ++gy) {
        const double jd = h.jacobian_det({gx / 19.0, gy / 19.0});
        CHECK(jd * sign0 > 0);
        CHECK(std::abs(jd) > 1e-12);
      }
    }
  }
}

TEST_CASE("apply and apply_inverse on the case-study map") {
  const auto h = solve_homography(unit_square(), testdata::case_study_quad());
  const auto q = testdata::case_study_quad();
  const Point2 p1 = h.apply({0, 0});
  CHECK(norm(p1 - q.vertex(0)) < 1e-6 * norm(q.vertex(0)));
  const Point2 p3 = h.apply({1, 1});
  CHECK(norm(p3 - q.vertex(2)) < 1e-6 * norm(q.vertex(2)));
  const Point2 back = h.apply_inverse({-100, -100});
  CHECK(norm(back - Point2{0, 0}) < 1e-6);

  const auto id = Homography::identity();
  const Point2 same = id.apply({0.3, 0.4});
  CHECK(same.x == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(same.y == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("vanishing points") {
  SUBCASE("affine maps send both families to infinity") {
    const auto id = Homography::identity();
    const auto [vh, vv] = id.vanishing_points();
    CHECK_FALSE(vh.has_value());
    CHECK_FALSE(vv.has_value());
    const auto aff = solve_homography(
        unit_square(), Quadrilateral::from_vertices({{{0, 0}, {2, 0}, {2, 1}, {0, 1}}}));
    const auto [ah, av] = aff.vanishing_points();
    CHECK_FALSE(ah.has_value());
    CHECK_FALSE(av.has_value());
  }

  SUBCASE("horizontal family: images of two y=const lines meet at the result") {
    const auto h = solve_homography(unit_square(), testdata::case_study_quad());
    const auto [vh, vv] = h.vanishing_points();
    REQUIRE(vh.has_value());
    REQUIRE(vv.has_value());
    const Point2 i1 = h.apply({0.0, 0.2}), i2 = h.apply({1.0, 0.2});
    const Point2 i3 = h.apply({0.0, 0.7}), i4 = h.apply({1.0, 0.7});
    const Point2 meet = line_intersection(i1, i2, i3, i4);
    CHECK(norm(meet - *vh) < 1e-6 * norm(*vh));

    // independent of the chosen constants
    const Point2 j1 = h.apply({0.0, 0.05}), j2 = h.apply({1.0, 0.05});
    const Point2 meet2 = line_intersection(j1, j2, i3, i4);
    CHECK(norm(meet2 - *vh) < 1e-6 * norm(*vh));

    // vertical family likewise
    const Point2 k1 = h.apply({0.3, 0.0}), k2 = h.apply({0.3, 1.0});
    const Point2 k3 = h.apply({0.8, 0.0}), k4 = h.apply({0.8, 1.0});
    const Point2 meet_v = line_intersection(k1, k2, k3, k4);
    CHECK(norm(meet_v - *vv) < 1e-6 * norm(*vv));
  }
}

TEST_CASE("jacobian determinant") {
  SUBCASE("identity is the constant field 1") {
    const auto id = Homography::identity();
    CHECK(id.jacobian_det({0, 0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(id.jacobian_det({0.9, -3.0}) == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("affine maps have a constant Jacobian") {
    const auto aff = solve_homography(
        unit_square(), Quadrilateral::from_vertices({{{0, 0}, {2, 0}, {2, 1}, {0, 1}}}));
    const double j0 = aff.jacobian_det({0.1, 0.1});
    const double j1 = aff.jacobian_det({0.9, 0.8});
    CHECK(j0 == doctest::Approx(j1).epsilon(1e-12));
    CHECK(j0 == doctest::Approx(2.0).epsilon(1e-12));  // area scale of 2x1
  }

  SUBCASE("case-study map: same sign at all four source corners") {
    const auto h = solve_homography(unit_square(), testdata::case_study_quad());
    const double s = h.jacobian_det({0, 0});
    for (const Point2 p : {Point2{1, 0}, Point2{1, 1}, Point2{0, 1}}) {
      CHECK(h.jacobian_det(p) * s > 0);
    }
  }
}

TEST_CASE("solver determinism") {
  const auto a = solve_homography(unit_square(), testdata::case_study_quad());
  const auto b = solve_homography(unit_square(), testdata::case_study_quad());
  for (std::size_t i = 0; i < 9; ++i) CHECK(a.coeffs()[i] == b.coeffs()[i]);
}
