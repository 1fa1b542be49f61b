#include "quadcover/channel.hpp"

#include <cmath>
#include <numbers>

namespace quadcover {

namespace environments {

Environment suburban() { return {0.1, 21.0, 4.88, 0.43, "suburban"}; }
Environment urban() { return {1.0, 20.0, 9.61, 0.16, "urban"}; }
Environment dense_urban() { return {1.6, 23.0, 12.08, 0.11, "dense_urban"}; }

std::optional<Environment> by_name(std::string_view name) {
  if (name == "suburban") return suburban();
  if (name == "urban") return urban();
  if (name == "dense_urban") return dense_urban();
  return std::nullopt;
}

}  // namespace environments

double w_factor(const LinkGeometry& g) {
  return g.a * g.b + std::sqrt((g.b * g.b + g.h * g.h) * (g.a * g.a - g.b * g.b));
}

double p_los(const Environment& env, double elevation_deg) {
  return 1.0 / (1.0 + env.eta * std::exp(-env.kappa * (elevation_deg - env.eta)));
}

double pl_max(const Environment& env, const LinkGeometry& g) {
  const double w = w_factor(g);
  const double elevation_deg =
      std::atan(g.h * g.b / w) * 180.0 / std::numbers::pi;
  const double horiz = w / g.b;
  return (env.xi_los - env.xi_nlos) * p_los(env, elevation_deg) +
         10.0 * std::log10(g.h * g.h + horiz * horiz) +
         20.0 * std::log10(4.0 * std::numbers::pi * g.f / kSpeedOfLight) +
         env.xi_nlos;
}

}  // namespace quadcover
