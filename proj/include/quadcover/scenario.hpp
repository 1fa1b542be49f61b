#pragma once

#include <filesystem>
#include <string>

#include "quadcover/planner.hpp"

namespace quadcover {

/// Parses and validates a scenario JSON document:
///   {
///     "quad": [[x,y],[x,y],[x,y],[x,y]],          // meters, any winding
///     "m": 4,
///     "frequency_hz": 2.0e9,
///     "environment": "suburban" | {"xi_los":..,"xi_nlos":..,"eta":..,"kappa":..},
///     "packing_file": "path.txt",                 // optional, relative to the scenario file
///     "offset_policy": "toward_centroid",         // optional
///     "homography": [h11,...,h33]                 // optional row-major override
///   }
/// Unknown keys and schema violations raise ScenarioParseError.
Scenario load_scenario(const std::filesystem::path& path);

Scenario scenario_from_json_text(const std::string& text,
                                 const std::filesystem::path& base_dir);

OffsetPolicy offset_policy_from_string(const std::string& s);

/// CSV report: header, one row per UAV
/// (uav_id,center_x,center_y,a_m,b_m,phi_deg,h_opt_m,proj_x,proj_y,theta_deg,psi_deg,pl_max_db),
/// then '#'-prefixed summary lines (S, sum of footprint areas, coverage, H).
/// Angles carry one decimal; '.' decimal separator regardless of locale.
std::string plan_to_csv(const Plan& p);

/// Full-precision JSON report with the same fields plus the summary block.
std::string plan_to_json(const Plan& p);

}  // namespace quadcover
