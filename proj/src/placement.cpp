#include "quadcover/placement.hpp"

#include <cmath>
#include <numbers>

#include "quadcover/errors.hpp"

namespace quadcover {

namespace {

constexpr double kNearCircle = 1e-9;  // relative a-b treated as circular

double to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace

AltitudeResult optimize_altitude(const Environment& env, double a, double b, double f) {
  const auto loss = [&](double h) { return pl_max(env, LinkGeometry{a, b, h, f}); };

  double lo = kAltitudeMin, hi = kAltitudeMax;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = loss(x1), f2 = loss(x2);
  while (hi - lo > kAltitudeTol) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = loss(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = loss(x2);
    }
  }
  const double h = 0.5 * (lo + hi);
  if (h < kAltitudeMin + 2 * kAltitudeTol || h > kAltitudeMax - 2 * kAltitudeTol) {
    throw NoInteriorMinimumError("altitude minimizer hit the search-interval boundary");
  }
  // stationarity check: central difference of the loss at the optimum
  const double step = 0.5;
  const double deriv = (loss(h + step) - loss(h - step)) / (2 * step);
  if (std::abs(deriv) > kDerivativeTol) {
    throw NoInteriorMinimumError("loss derivative not small at the located minimum");
  }
  return {h, loss(h)};
}

AntennaAngles antenna_angles(double a, double b, double h) {
  const double b2 = b * b;
  const double denom = std::sqrt(a * a * h * h + b2 * b2);
  const double psi = std::acos(std::sqrt(b2 * h * h + b2 * b2) / denom);
  const double theta = std::asin(b2 / denom);
  return {to_deg(psi), to_deg(theta)};
}

double projection_offset(double a, double b, double h) {
  if (a - b < kNearCircle * a) return 0.0;
  return std::sqrt((a * a - b * b) * (b * b + h * h)) / b;
}

UavPlacement assemble_placement(const Environment& env, const EllipseFootprint& e,
                                double f, int offset_sign) {
  const auto alt = optimize_altitude(env, e.a, e.b, f);
  const bool circular = e.a - e.b < kNearCircle * e.a;
  UavPlacement p;
  p.footprint = e;
  p.h_opt = alt.h_opt;
  p.pl_max_db = alt.pl_db;
  if (circular) {
    p.psi_deg = 0.0;
    p.theta_deg = to_deg(std::atan(e.b / alt.h_opt));
    p.proj = e.center;
  } else {
    const auto ang = antenna_angles(e.a, e.b, alt.h_opt);
    p.psi_deg = ang.psi_deg;
    p.theta_deg = ang.theta_deg;
    const double d = projection_offset(e.a, e.b, alt.h_opt);
    const Point2 u = e.major_axis_dir();
    p.proj = e.center + (offset_sign >= 0 ? d : -d) * u;
  }
  p.position = {p.proj.x, p.proj.y, p.h_opt};
  return p;
}

}  // namespace quadcover
