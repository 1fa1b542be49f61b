#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quadcover/channel.hpp"
#include "quadcover/conic.hpp"
#include "quadcover/geometry.hpp"
#include "quadcover/homography.hpp"
#include "quadcover/packing.hpp"
#include "quadcover/placement.hpp"

namespace quadcover {

/// Which end of each footprint's major axis the UAV ground projection takes.
/// TowardCentroid keeps the fleet compact; the mirror choice is
/// radio-equivalent.
enum class OffsetPolicy { TowardCentroid, AwayFromCentroid, Positive, Negative };

struct Scenario {
  Quadrilateral quad;
  int m = 0;
  double frequency_hz = 0;
  Environment env;
  std::optional<PackingConfig> packing;     // external packing override
  OffsetPolicy offset_policy = OffsetPolicy::TowardCentroid;
  /// Optional explicit map override. When set, plan() uses it instead of
  /// solving from the quad, and footprint containment is validated against
  /// the image of the unit square under this map (the region the footprints
  /// actually tile); areas are still reported against the scenario quad.
  std::optional<Homography> homography;
};

struct Plan {
  Homography homography;
  std::vector<UavPlacement> placements;
  Quadrilateral region;       // containment / sampling region (see Scenario)
  double quad_area = 0;       // m^2, scenario quad
  double footprint_area_sum = 0;
  double coverage_fraction = 0;
};

/// Packing -> homography -> per-circle conic mapping -> footprint extraction
/// -> per-UAV placement -> metrics. Fails fast with PlanningError (carrying
/// the 1-based UAV index) on the first invalid footprint.
Plan plan(const Scenario& s);

/// Monte Carlo coverage oracle: rejection-samples `samples` uniform points in
/// plan.region and returns the fraction lying inside any footprint.
/// Deterministic for a fixed seed.
double coverage_fraction_mc(const Plan& p, long samples, std::uint64_t seed);

/// Regular hexagon split along a long diagonal into two congruent trapezoids,
/// each covered by the m=4 packing; returns total ellipse area over hexagon
/// area (~0.7715, independent of the side length).
double hexagon_comparison(double side = 1.0);

/// Same computation with the trapezoid vertex cycle rotated; rotation 0 is
/// the fixed long-side-to-square-bottom correspondence.
double hexagon_comparison_variant(int rotation, double side = 1.0);

/// n^2 grid circles mapped to a u x v rectangle; the covered fraction is
/// exactly pi/4 regardless of u, v, n.
double rectangle_comparison(double u, double v, int n);

/// Resolves the +-1 offset sign for a footprint under a policy.
int resolve_offset_sign(OffsetPolicy policy, const EllipseFootprint& e, Point2 quad_centroid);

/// Relative residual of a point against a conic (terms normalized by their
/// absolute sum); used for boundary self-checks.
double conic_residual(const Conic& c, Point2 p);

}  // namespace quadcover
