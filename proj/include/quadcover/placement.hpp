#pragma once

#include <array>

#include "quadcover/channel.hpp"
#include "quadcover/conic.hpp"

namespace quadcover {

inline constexpr double kAltitudeMin = 1.0;       // m
inline constexpr double kAltitudeMax = 10'000.0;  // m
inline constexpr double kAltitudeTol = 0.01;      // m, golden-section stop
inline constexpr double kDerivativeTol = 1e-3;    // dB/m at the optimum

/// Full per-UAV pose: footprint plus optimal altitude, antenna angles,
/// ground projection (on the footprint's major axis) and 3-D position.
struct UavPlacement {
  EllipseFootprint footprint;
  double h_opt = 0;       // m
  double pl_max_db = 0;   // dB at the farthest footprint point
  double psi_deg = 0;     // antenna tilt from vertical
  double theta_deg = 0;   // beam semi-apex angle
  Point2 proj;            // UAV ground projection (m)
  std::array<double, 3> position{};  // (x, y, h)
};

struct AltitudeResult {
  double h_opt = 0;
  double pl_db = 0;
};

/// Minimizes pl_max over h in [kAltitudeMin, kAltitudeMax] by golden-section
/// search. Throws NoInteriorMinimumError when the minimizer sticks to an
/// interval endpoint.
AltitudeResult optimize_altitude(const Environment& env, double a, double b, double f);

struct AntennaAngles {
  double psi_deg = 0;
  double theta_deg = 0;
};

/// psi = acos(sqrt(b^2 h^2 + b^4) / sqrt(a^2 h^2 + b^4)),
/// theta = asin(b^2 / sqrt(a^2 h^2 + b^4)), in degrees.
AntennaAngles antenna_angles(double a, double b, double h);

/// Distance from the footprint center to the UAV ground projection along the
/// major axis: sqrt((a^2 - b^2)(b^2 + h^2)) / b. Satisfies d + a = W/b and
/// h tan(psi +- theta) = d +- a.
double projection_offset(double a, double b, double h);

/// Composes altitude optimization, angles, and the projection offset.
/// offset_sign (+1/-1) selects which end of the major axis the UAV sits
/// toward; the two mirror placements are radio-equivalent.
UavPlacement assemble_placement(const Environment& env, const EllipseFootprint& e,
                                double f, int offset_sign);

}  // namespace quadcover
