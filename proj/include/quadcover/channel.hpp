#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace quadcover {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s, exact SI

/// Air-to-ground propagation environment. eta and kappa are the LoS-probability
/// sigmoid constants; the sigmoid's elevation argument is in DEGREES (the
/// standard parameter sets below are degree-domain constants).
struct Environment {
  double xi_los = 0;    // dB excess loss under LoS
  double xi_nlos = 0;   // dB excess loss under NLoS
  double eta = 0;       // sigmoid offset (degrees domain)
  double kappa = 0;     // sigmoid slope (per degree)
  std::string name;
};

namespace environments {
Environment suburban();
Environment urban();
Environment dense_urban();
/// Preset lookup by name {"suburban","urban","dense_urban"}.
std::optional<Environment> by_name(std::string_view name);
}  // namespace environments

/// One UAV-to-footprint link: semi-axes a >= b (m), altitude h (m),
/// carrier frequency f (Hz).
struct LinkGeometry {
  double a = 0;
  double b = 0;
  double h = 0;
  double f = 0;
};

/// a*b + sqrt((b^2 + h^2)(a^2 - b^2)); W/b is the horizontal distance from
/// the UAV ground projection to the farthest footprint boundary point.
double w_factor(const LinkGeometry& g);

/// LoS probability 1 / (1 + eta * exp(-kappa * (elevation_deg - eta))).
double p_los(const Environment& env, double elevation_deg);

/// Worst-case (farthest footprint point) path loss in dB:
/// weighted LoS/NLoS excess loss plus free-space loss at distance
/// sqrt(h^2 + (W/b)^2).
double pl_max(const Environment& env, const LinkGeometry& g);

}  // namespace quadcover
