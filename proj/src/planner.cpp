#include "quadcover/planner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "quadcover/errors.hpp"

namespace quadcover {

namespace {

constexpr int kBoundarySamples = 64;
constexpr double kBoundaryResidualTol = 1e-6;

double uniform01(std::mt19937_64& rng) {
  // top 53 bits -> [0,1); keeps the stream identical across platforms
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Quadrilateral image_of_unit_square(const Homography& h) {
  const auto& sq = unit_square().vertices();
  std::array<Point2, 4> img{};
  for (std::size_t i = 0; i < 4; ++i) img[i] = h.apply(sq[i]);
  return Quadrilateral::from_vertices(img);
}

std::string circle_diagnostic(const Circle& c) {
  std::ostringstream os;
  os << "circle center (" << c.center.x << ", " << c.center.y << ") r=" << c.radius;
  return os.str();
}

std::string conic_diagnostic(const Circle& c, const Conic& q) {
  std::ostringstream os;
  os << circle_diagnostic(c) << "; conic A=" << q.A << " B=" << q.B << " C=" << q.C
     << " D=" << q.D << " E=" << q.E << " F=" << q.F;
  return os.str();
}

}  // namespace

double conic_residual(const Conic& c, Point2 p) {
  const double scale = std::abs(c.A * p.x * p.x) + std::abs(c.B * p.x * p.y) +
                       std::abs(c.C * p.y * p.y) + std::abs(c.D * p.x) +
                       std::abs(c.E * p.y) + std::abs(c.F);
  return scale > 0 ? std::abs(c.value(p)) / scale : 0.0;
}

int resolve_offset_sign(OffsetPolicy policy, const EllipseFootprint& e, Point2 quad_centroid) {
  switch (policy) {
    case OffsetPolicy::Positive:
      return +1;
    case OffsetPolicy::Negative:
      return -1;
    case OffsetPolicy::TowardCentroid:
    case OffsetPolicy::AwayFromCentroid: {
      const double along = dot(e.major_axis_dir(), quad_centroid - e.center);
      int sign = along >= 0 ? +1 : -1;  // +1 moves the projection toward the centroid
      if (policy == OffsetPolicy::AwayFromCentroid) sign = -sign;
      return sign;
    }
  }
  return +1;
}

Plan plan(const Scenario& s) {
  PackingConfig packing = s.packing ? *s.packing : get_packing(s.m);
  if (packing.m != s.m) {
    throw PlanningError(0, "packing circle count " + std::to_string(packing.m) +
                               " does not match scenario m=" + std::to_string(s.m));
  }

  Plan out{
      s.homography ? *s.homography : solve_homography(unit_square(), s.quad),
      {},
      s.homography ? image_of_unit_square(*s.homography) : s.quad,
      shoelace_area(s.quad),
      0.0,
      0.0,
  };

  const Point2 centroid = s.quad.centroid();
  for (int i = 0; i < packing.m; ++i) {
    const int uav = i + 1;
    const Circle circle{packing.centers[static_cast<std::size_t>(i)], packing.radius};
    try {
      const Conic conic = map_circle(out.homography, circle);
      EllipseFootprint foot = extract_ellipse(conic, uav);

      for (int k = 0; k < kBoundarySamples; ++k) {
        const double t = 2 * std::numbers::pi * k / kBoundarySamples;
        const Point2 p = foot.boundary_point(t);
        if (conic_residual(conic, p) > kBoundaryResidualTol) {
          throw PlanningError(uav, "extracted ellipse does not satisfy its conic; " +
                                       conic_diagnostic(circle, conic));
        }
        if (!out.region.contains(p)) {
          std::ostringstream os;
          os << "footprint boundary point (" << p.x << ", " << p.y
             << ") lies outside the service region; " << conic_diagnostic(circle, conic);
          throw PlanningError(uav, os.str());
        }
      }

      const int sign = resolve_offset_sign(s.offset_policy, foot, centroid);
      out.placements.push_back(assemble_placement(s.env, foot, s.frequency_hz, sign));
    } catch (const PlanningError&) {
      throw;
    } catch (const ComputeError& e) {
      throw PlanningError(uav, std::string(e.what()) + "; " + circle_diagnostic(circle));
    }
  }

  for (std::size_t i = 0; i < out.placements.size(); ++i) {
    for (std::size_t j = i + 1; j < out.placements.size(); ++j) {
      const auto rel =
          tangency_check(out.placements[i].footprint, out.placements[j].footprint);
      if (rel == PairRelation::Overlapping) {
        throw PlanningError(static_cast<int>(j + 1),
                            "footprints " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " overlap");
      }
    }
  }

  for (const auto& p : out.placements) out.footprint_area_sum += ellipse_area(p.footprint);
  out.coverage_fraction = out.footprint_area_sum / out.quad_area;
  if (!(out.coverage_fraction > 0.0) || out.coverage_fraction >= 1.0) {
    throw PlanningError(0, "coverage fraction " + std::to_string(out.coverage_fraction) +
                               " outside (0,1)");
  }
  return out;
}

double coverage_fraction_mc(const Plan& p, long samples, std::uint64_t seed) {
  const auto& v = p.region.vertices();
  double xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
  for (const auto& q : v) {
    xmin = std::min(xmin, q.x);
    xmax = std::max(xmax, q.x);
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
  }
  std::mt19937_64 rng(seed);
  long accepted = 0, covered = 0;
  while (accepted < samples) {
    const Point2 pt{xmin + (xmax - xmin) * uniform01(rng),
                    ymin + (ymax - ymin) * uniform01(rng)};
    if (!p.region.contains(pt)) continue;
    ++accepted;
    for (const auto& pl : p.placements) {
      if (pl.footprint.implicit_value(pt) <= 0.0) {
        ++covered;
        break;
      }
    }
  }
  return static_cast<double>(covered) / static_cast<double>(samples);
}

double hexagon_comparison(double side) { return hexagon_comparison_variant(0, side); }

double hexagon_comparison_variant(int rotation, double side) {
  if (!(side > 0)) throw InputError("hexagon side must be positive");
  // regular hexagon, vertices at 60-degree steps; split along the V0-V3
  // long diagonal into two congruent isosceles trapezoids
  std::array<Point2, 6> hex{};
  for (int k = 0; k < 6; ++k) {
    const double ang = std::numbers::pi / 3.0 * k;
    hex[static_cast<std::size_t>(k)] = {side * std::cos(ang), side * std::sin(ang)};
  }
  // upper trapezoid CCW with the long side first: V3, V0, V1, V2
  std::array<Point2, 4> trap{hex[3], hex[0], hex[1], hex[2]};
  std::array<Point2, 4> rotated{};
  for (int k = 0; k < 4; ++k) {
    rotated[static_cast<std::size_t>(k)] = trap[static_cast<std::size_t>((k + rotation) % 4)];
  }

  const Homography h = solve_homography(unit_square(), Quadrilateral::from_vertices(rotated));
  const PackingConfig packing = get_packing(4);
  double covered = 0.0;
  for (const auto& c : packing.centers) {
    const auto foot = extract_ellipse(map_circle(h, Circle{c, packing.radius}), 0);
    covered += ellipse_area(foot);
  }
  const double hex_area = 6.0 * std::sqrt(3.0) / 4.0 * side * side;
  return 2.0 * covered / hex_area;  // two congruent halves
}

double rectangle_comparison(double u, double v, int n) {
  if (!(u > 0) || !(v > 0) || n < 1) {
    throw InputError("rectangle_comparison requires u,v > 0 and n >= 1");
  }
  const auto rect = Quadrilateral::from_vertices({{{0, 0}, {u, 0}, {u, v}, {0, v}}});
  const Homography h = solve_homography(unit_square(), rect);
  const PackingConfig packing = get_packing(n * n);
  double covered = 0.0;
  for (const auto& c : packing.centers) {
    covered += ellipse_area(extract_ellipse(map_circle(h, Circle{c, packing.radius}), 0));
  }
  return covered / (u * v);
}

}  // namespace quadcover
