#include "quadcover/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace quadcover {

namespace {

double bbox_diag(const std::array<Point2, 4>& v) {
  double xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
  for (const auto& p : v) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  return std::hypot(xmax - xmin, ymax - ymin);
}

}  // namespace

Quadrilateral Quadrilateral::from_vertices(const std::array<Point2, 4>& vertices) {
  for (const auto& p : vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw DegenerateQuadError("non-finite vertex coordinate");
    }
  }
  const double diag = bbox_diag(vertices);
  if (diag == 0.0) {
    throw DegenerateQuadError("all four vertices coincide");
  }
  // cross products of consecutive edge vectors; sign pattern decides validity
  const double tol = 1e-12 * diag * diag;
  int pos = 0, neg = 0;
  for (int i = 0; i < 4; ++i) {
    const Point2 e1 = vertices[(i + 1) % 4] - vertices[i % 4];
    const Point2 e2 = vertices[(i + 2) % 4] - vertices[(i + 1) % 4];
    const double c = cross(e1, e2);
    if (std::abs(c) <= tol) {
      throw DegenerateQuadError("three consecutive vertices are collinear");
    }
    (c > 0 ? pos : neg)++;
  }
  if (pos == 4) return Quadrilateral(vertices);
  if (neg == 4) {
    // CW input: reverse to CCW; reversal maps back to the original list's
    // order when normalized again, keeping construction idempotent.
    return Quadrilateral({vertices[3], vertices[2], vertices[1], vertices[0]});
  }
  if (pos == 2 && neg == 2) {
    throw SelfIntersectingError("vertex order traces a self-intersecting (bowtie) quad");
  }
  throw NonConvexError("quadrilateral has a reflex vertex");
}

Point2 Quadrilateral::centroid() const {
  return {(v_[0].x + v_[1].x + v_[2].x + v_[3].x) / 4.0,
          (v_[0].y + v_[1].y + v_[2].y + v_[3].y) / 4.0};
}

double Quadrilateral::bbox_diagonal() const { return bbox_diag(v_); }

bool Quadrilateral::contains(Point2 p) const {
  const double eps = 1e-9 * bbox_diagonal();
  for (int i = 0; i < 4; ++i) {
    const Point2 a = v_[static_cast<std::size_t>(i)];
    const Point2 b = v_[static_cast<std::size_t>((i + 1) % 4)];
    const Point2 e = b - a;
    // signed distance of p from edge line (positive = interior side for CCW)
    const double d = cross(e, p - a) / norm(e);
    if (d < -eps) return false;
  }
  return true;
}

double shoelace_area(const Quadrilateral& q) {
  const auto& v = q.vertices();
  double s = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Point2 a = v[static_cast<std::size_t>(i)];
    const Point2 b = v[static_cast<std::size_t>((i + 1) % 4)];
    s += cross(a, b);
  }
  return 0.5 * s;
}

bool contains_point(const Quadrilateral& q, Point2 p) { return q.contains(p); }

Quadrilateral convexity_check(const std::array<Point2, 4>& vertices) {
  return Quadrilateral::from_vertices(vertices);
}

Quadrilateral unit_square() {
  return Quadrilateral::from_vertices({{{0, 0}, {1, 0}, {1, 1}, {0, 1}}});
}

}  // namespace quadcover
