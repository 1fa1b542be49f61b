#pragma once

#include <string>

#include "quadcover/planner.hpp"

namespace quadcover {

enum class RenderMode { Footprints, PackingPair, Pose3d };

RenderMode render_mode_from_string(const std::string& s);

/// Static SVG 1.1 figure of a plan.
///  - Footprints: quad outline with numbered ellipses and UAV ground
///    projections; each <ellipse> carries full-precision world-frame
///    data-* attributes.
///  - PackingPair: unit-square circle packing beside the mapped quad.
///  - Pose3d: isometric view of the 3-D UAV poses with tilt arrows.
std::string render_svg(const Plan& plan, const Scenario& scenario, RenderMode mode);

}  // namespace quadcover
