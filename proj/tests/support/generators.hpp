#pragma once

// Hand-rolled random generators for property-style tests. Everything is
// seeded explicitly so failures reproduce.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "quadcover/geometry.hpp"

namespace quadcover::testgen {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

/// Random strictly convex quadrilateral with a decent aspect ratio: four
/// points on a randomized ellipse around a random center, rejected until the
/// convexity check passes and no edge is tiny.
inline Quadrilateral random_convex_quad(std::mt19937_64& rng, double scale = 100.0) {
  for (;;) {
    const double cx = uniform(rng, -scale, scale);
    const double cy = uniform(rng, -scale, scale);
    const double rx = uniform(rng, 0.3 * scale, scale);
    const double ry = uniform(rng, 0.3 * scale, scale);
    double angles[4];
    for (auto& a : angles) a = uniform(rng, 0, 2 * std::numbers::pi);
    std::sort(std::begin(angles), std::end(angles));
    // enforce angular separation so vertices cannot collapse
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
      const double gap = (i == 3 ? angles[0] + 2 * std::numbers::pi : angles[i + 1]) - angles[i];
      ok = ok && gap > 0.35;
    }
    if (!ok) continue;
    std::array<Point2, 4> v{};
    for (int i = 0; i < 4; ++i) {
      v[static_cast<std::size_t>(i)] = {cx + rx * std::cos(angles[i]),
                                        cy + ry * std::sin(angles[i])};
    }
    try {
      return Quadrilateral::from_vertices(v);
    } catch (const Error&) {
      continue;
    }
  }
}

/// Random circle fully inside the unit square.
inline Point2 random_center(std::mt19937_64& rng, double radius) {
  return {uniform(rng, radius, 1 - radius), uniform(rng, radius, 1 - radius)};
}

}  // namespace quadcover::testgen
