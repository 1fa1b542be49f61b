#include "quadcover/conic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "quadcover/errors.hpp"

namespace quadcover {

namespace {

constexpr double kParabolaTol = 1e-10;
constexpr double kDegenerateTol = 1e-12;
constexpr double kTangentTol = 1e-6;
constexpr double kCircleTol = 1e-9;  // relative a-b below which phi := 0

double wrap_half_pi(double phi) {
  while (phi > std::numbers::pi / 2) phi -= std::numbers::pi;
  while (phi <= -std::numbers::pi / 2) phi += std::numbers::pi;
  return phi;
}

}  // namespace

Conic Conic::normalized(double A, double B, double C, double D, double E, double F) {
  double scale = std::max({std::abs(A), std::abs(B), std::abs(C),
                           std::abs(D), std::abs(E), std::abs(F)});
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw ComputeError("conic coefficients are zero or non-finite");
  }
  // fix the projective sign as well: A + C > 0 (first nonzero coefficient
  // when the trace vanishes), so the ellipse discriminant conditions read
  // the same for every representation of the curve
  double lead = A + C;
  if (lead == 0.0) {
    for (double v : {A, B, C, D, E, F}) {
      if (v != 0.0) {
        lead = v;
        break;
      }
    }
  }
  if (lead < 0.0) scale = -scale;
  return Conic{A / scale, B / scale, C / scale, D / scale, E / scale, F / scale};
}

Point2 EllipseFootprint::boundary_point(double t) const {
  const double c = std::cos(phi), s = std::sin(phi);
  const double u = a * std::cos(t), v = b * std::sin(t);
  return {center.x + c * u - s * v, center.y + s * u + c * v};
}

double EllipseFootprint::implicit_value(Point2 p) const {
  const double c = std::cos(phi), s = std::sin(phi);
  const double dx = p.x - center.x, dy = p.y - center.y;
  const double u = (c * dx + s * dy) / a;
  const double v = (-s * dx + c * dy) / b;
  return u * u + v * v - 1.0;
}

Conic map_circle(const Homography& h, const Circle& c) {
  // circle in the source plane: A(x^2 + y^2) + Dx + Ey + F = 0
  const double A = 1.0;
  const double D = -2.0 * c.center.x;
  const double E = -2.0 * c.center.y;
  const double F = c.center.x * c.center.x + c.center.y * c.center.y - c.radius * c.radius;

  const auto a = inverse_coefficients(h).hhat;
  const double h11 = a[0], h12 = a[1], h13 = a[2];
  const double h21 = a[3], h22 = a[4], h23 = a[5];
  const double h31 = a[6], h32 = a[7], h33 = a[8];

  const double Ap = A * (h11 * h11 + h21 * h21) + h31 * (D * h11 + E * h21) + F * h31 * h31;
  const double Bp = h11 * (2 * A * h12 + D * h32) + h21 * (2 * A * h22 + E * h32) +
                    h31 * (D * h12 + E * h22 + 2 * F * h32);
  const double Cp = A * (h12 * h12 + h22 * h22) + h32 * (D * h12 + E * h22) + F * h32 * h32;
  const double Dp = h11 * (2 * A * h13 + D * h33) + h21 * (2 * A * h23 + E * h33) +
                    h31 * (D * h13 + E * h23 + 2 * F * h33);
  const double Ep = h12 * (2 * A * h13 + D * h33) + h22 * (2 * A * h23 + E * h33) +
                    h32 * (D * h13 + E * h23 + 2 * F * h33);
  const double Fp = A * (h13 * h13 + h23 * h23) + h33 * (D * h13 + E * h23) + F * h33 * h33;

  const Conic out = Conic::normalized(Ap, Bp, Cp, Dp, Ep, Fp);
  if (classify(out) != ConicType::Ellipse) {
    throw NotBoundedError("circle image is not a bounded conic under this homography");
  }
  return out;
}

ConicType classify(const Conic& c) {
  // coefficients scale both with the projective freedom and with the
  // coordinate units, so every test below is made dimensionless first
  const double s2 = std::max({std::abs(c.A), std::abs(c.B), std::abs(c.C)});
  if (!(s2 > 0.0)) return ConicType::Degenerate;

  // 3x3 conic matrix determinant, Hadamard-normalized into [-1, 1]
  const double det3 = c.A * (c.C * c.F - c.E * c.E / 4) -
                      (c.B / 2) * (c.B / 2 * c.F - c.E / 2 * c.D / 2) +
                      (c.D / 2) * (c.B / 2 * c.E / 2 - c.C * c.D / 2);
  const double r0 = std::hypot(c.A, c.B / 2, c.D / 2);
  const double r1 = std::hypot(c.B / 2, c.C, c.E / 2);
  const double r2 = std::hypot(c.D / 2, c.E / 2, c.F);
  // a zero row means a singular conic matrix outright
  if (r0 * r1 * r2 == 0.0 || std::abs(det3) < kDegenerateTol * r0 * r1 * r2) {
    return ConicType::Degenerate;
  }

  const double disc = 4 * c.A * c.C - c.B * c.B;
  if (std::abs(disc) < kParabolaTol * s2 * s2) return ConicType::Parabola;
  if (disc < 0) return ConicType::Hyperbola;
  // real ellipse needs the second condition as well
  const double second = c.C * c.D * c.D + c.A * c.E * c.E - c.B * c.D * c.E -
                        4 * c.A * c.C * c.F + c.B * c.B * c.F;
  return second > 0 ? ConicType::Ellipse : ConicType::Degenerate;
}

EllipseFootprint extract_ellipse(const Conic& c, int index) {
  if (classify(c) != ConicType::Ellipse) {
    throw NotAnEllipseError("conic does not satisfy the ellipse conditions");
  }
  const double delta2 = 4 * c.A * c.C - c.B * c.B;
  const double delta1 = c.C * c.D * c.D + c.A * c.E * c.E - c.B * c.D * c.E - c.F * delta2;
  const double mu = 4 * delta1 / (delta2 * delta2);
  const double root = std::hypot(c.A - c.C, c.B);
  const double a = std::sqrt(mu / 2 * (c.A + c.C + root));
  const double b = std::sqrt(mu / 2 * (c.A + c.C - root));

  EllipseFootprint e;
  e.center = {(c.B * c.E - 2 * c.C * c.D) / delta2, (c.B * c.D - 2 * c.A * c.E) / delta2};
  e.a = a;
  e.b = b;
  e.index = index;
  if (a - b < kCircleTol * a) {
    e.phi = 0.0;  // circle image: orientation is arbitrary
  } else {
    // 0.5*atan2(B, A-C) is the minor-axis direction (larger quadratic-form
    // eigenvalue); the major axis is perpendicular.
    e.phi = wrap_half_pi(0.5 * std::atan2(c.B, c.A - c.C) + std::numbers::pi / 2);
  }
  return e;
}

namespace {

// minimum of e2's implicit value over e1's boundary: coarse scan, then a
// golden-section refinement around the best bracket
double boundary_min_value(const EllipseFootprint& e1, const EllipseFootprint& e2) {
  constexpr int kSamples = 512;
  double best_t = 0.0;
  double best_v = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kSamples; ++i) {
    const double t = 2 * std::numbers::pi * i / kSamples;
    const double v = e2.implicit_value(e1.boundary_point(t));
    if (v < best_v) {
      best_v = v;
      best_t = t;
    }
  }
  const double step = 2 * std::numbers::pi / kSamples;
  double lo = best_t - step, hi = best_t + step;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = e2.implicit_value(e1.boundary_point(x1));
  double f2 = e2.implicit_value(e1.boundary_point(x2));
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = e2.implicit_value(e1.boundary_point(x1));
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = e2.implicit_value(e1.boundary_point(x2));
    }
  }
  return std::min({best_v, f1, f2});
}

}  // namespace

PairRelation tangency_check(const EllipseFootprint& e1, const EllipseFootprint& e2) {
  // both directions, so one ellipse nested inside the other still reads as
  // Overlapping rather than Disjoint
  const double vmin = std::min(boundary_min_value(e1, e2), boundary_min_value(e2, e1));
  if (vmin < -kTangentTol) return PairRelation::Overlapping;
  if (vmin <= kTangentTol) return PairRelation::Tangent;
  return PairRelation::Disjoint;
}

double ellipse_area(const EllipseFootprint& e) { return std::numbers::pi * e.a * e.b; }

}  // namespace quadcover
