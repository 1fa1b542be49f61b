#pragma once

#include "quadcover/geometry.hpp"
#include "quadcover/homography.hpp"

namespace quadcover {

/// General second-degree curve A x^2 + B xy + C y^2 + D x + E y + F = 0,
/// scale-normalized so max(|A|..|F|) = 1.
struct Conic {
  double A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;

  /// Rescales so the largest-magnitude coefficient is 1 (sign preserved).
  static Conic normalized(double A, double B, double C, double D, double E, double F);

  double value(Point2 p) const {
    return A * p.x * p.x + B * p.x * p.y + C * p.y * p.y + D * p.x + E * p.y + F;
  }
};

enum class ConicType { Ellipse, Parabola, Hyperbola, Degenerate };

struct Circle {
  Point2 center;
  double radius = 0;
};

/// One UAV's elliptical ground footprint: center, semi-axes a >= b, and the
/// major-axis orientation phi in (-pi/2, pi/2] CCW from +x.
struct EllipseFootprint {
  Point2 center;
  double a = 0;
  double b = 0;
  double phi = 0;
  int index = 0;

  Point2 major_axis_dir() const { return {std::cos(phi), std::sin(phi)}; }

  /// Parametric boundary point at angle t.
  Point2 boundary_point(double t) const;

  /// Dimensionless implicit value: negative inside, zero on the boundary,
  /// positive outside.
  double implicit_value(Point2 p) const;
};

/// Image of a circle under the homography, via the adjugate coefficients.
/// Throws NotBoundedError when the image fails the ellipse conditions
/// (the circle meets the preimage of the line at infinity).
Conic map_circle(const Homography& h, const Circle& c);

/// Ellipse iff 4AC - B^2 > 0 and CD^2 + AE^2 - BDE - 4ACF + B^2F > 0;
/// parabola on the 4AC - B^2 = 0 boundary; degenerate when the 3x3 conic
/// matrix determinant vanishes.
ConicType classify(const Conic& c);

/// Center, semi-axes and orientation of an ellipse-classified conic.
/// Throws NotAnEllipseError otherwise.
EllipseFootprint extract_ellipse(const Conic& c, int index);

enum class PairRelation { Disjoint, Tangent, Overlapping };

/// Boundary relation of two ellipses by sign analysis of e2's implicit value
/// along e1's boundary (tolerance 1e-6 on the dimensionless value).
PairRelation tangency_check(const EllipseFootprint& e1, const EllipseFootprint& e2);

/// pi * a * b
double ellipse_area(const EllipseFootprint& e);

}  // namespace quadcover
