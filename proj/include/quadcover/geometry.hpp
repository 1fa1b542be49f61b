#pragma once

#include <array>
#include <cmath>

#include "quadcover/errors.hpp"

namespace quadcover {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }

/// Strictly convex quadrilateral, vertices normalized to counter-clockwise
/// order at construction. Construct through from_vertices(), which rejects
/// collinear triples, reflex vertices and bowties.
class Quadrilateral {
public:
  /// Validates and normalizes; throws DegenerateQuadError, NonConvexError
  /// or SelfIntersectingError.
  static Quadrilateral from_vertices(const std::array<Point2, 4>& vertices);

  const std::array<Point2, 4>& vertices() const { return v_; }
  Point2 vertex(int i) const { return v_[static_cast<std::size_t>(i)]; }

  /// Centroid of the four vertices.
  Point2 centroid() const;

  double bbox_diagonal() const;

  /// Boundary-inclusive containment with tolerance 1e-9 * bbox diagonal.
  bool contains(Point2 p) const;

private:
  explicit Quadrilateral(const std::array<Point2, 4>& v) : v_(v) {}
  std::array<Point2, 4> v_;
};

/// Positive area of the CCW polygon.
double shoelace_area(const Quadrilateral& q);

bool contains_point(const Quadrilateral& q, Point2 p);

/// Factory alias matching the validating construction path.
Quadrilateral convexity_check(const std::array<Point2, 4>& vertices);

/// The unit square (0,0),(1,0),(1,1),(0,1).
Quadrilateral unit_square();

}  // namespace quadcover
