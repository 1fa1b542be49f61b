#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "quadcover/errors.hpp"
#include "quadcover/render.hpp"
#include "quadcover/scenario.hpp"

namespace {

using namespace quadcover;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInput = 2;
constexpr int kExitPlanning = 3;
constexpr int kExitVerify = 4;

void write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + out_path);
  out << content;
  if (!out) throw IoError("failed writing output file: " + out_path);
}

Scenario load_with_policy(const std::string& path, const std::string& policy) {
  Scenario s = load_scenario(path);
  if (!policy.empty()) s.offset_policy = offset_policy_from_string(policy);
  return s;
}

int cmd_plan(const std::string& scenario_path, const std::string& format,
             const std::string& out_path, const std::string& policy) {
  const Scenario s = load_with_policy(scenario_path, policy);
  const Plan p = plan(s);
  if (format == "csv") {
    write_output(plan_to_csv(p), out_path);
  } else if (format == "json") {
    write_output(plan_to_json(p), out_path);
  } else {
    throw InputError("unknown format '" + format + "' (expected csv or json)");
  }
  return kExitOk;
}

int cmd_render(const std::string& scenario_path, const std::string& mode,
               const std::string& out_path, const std::string& policy) {
  const Scenario s = load_with_policy(scenario_path, policy);
  const Plan p = plan(s);
  write_output(render_svg(p, s, render_mode_from_string(mode)), out_path);
  return kExitOk;
}

int cmd_homography(const std::vector<double>& c) {
  const auto quad = Quadrilateral::from_vertices(
      {{{c[0], c[1]}, {c[2], c[3]}, {c[4], c[5]}, {c[6], c[7]}}});
  const Homography h = solve_homography(unit_square(), quad);
  std::printf("H = [\n");
  for (int r = 0; r < 3; ++r) {
    std::printf("  %.6g %.6g %.6g\n", h.at(r, 0), h.at(r, 1), h.at(r, 2));
  }
  std::printf("]\n");
  const auto [vh, vv] = h.vanishing_points();
  if (vh) {
    std::printf("vanishing_point_horizontal = (%.6g, %.6g)\n", vh->x, vh->y);
  } else {
    std::printf("vanishing_point_horizontal = at-infinity\n");
  }
  if (vv) {
    std::printf("vanishing_point_vertical = (%.6g, %.6g)\n", vv->x, vv->y);
  } else {
    std::printf("vanishing_point_vertical = at-infinity\n");
  }
  return kExitOk;
}

double edge_margin(const Quadrilateral& q, Point2 p) {
  double m = 1e300;
  for (int i = 0; i < 4; ++i) {
    const Point2 a = q.vertex(i), b = q.vertex((i + 1) % 4);
    const Point2 e = b - a;
    m = std::min(m, cross(e, p - a) / norm(e));
  }
  return m;
}

int cmd_verify(const std::string& scenario_path, long samples, std::uint64_t seed,
               const std::string& policy) {
  const Scenario s = load_with_policy(scenario_path, policy);
  const Plan p = plan(s);
  int failed = 0;
  const auto report = [&](const char* name, bool pass, const std::string& detail) {
    std::printf("check %s: %s (%s)\n", name, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++failed;
  };

  {
    double worst = 1e300;
    bool ok = true;
    for (const auto& u : p.placements) {
      for (int k = 0; k < 64; ++k) {
        const Point2 bp = u.footprint.boundary_point(2 * std::numbers::pi * k / 64);
        worst = std::min(worst, edge_margin(p.region, bp));
        ok = ok && p.region.contains(bp);
      }
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "worst boundary margin %.3e m", worst);
    report("containment", ok, buf);
  }
  {
    int tangent = 0, disjoint = 0, overlapping = 0;
    for (std::size_t i = 0; i < p.placements.size(); ++i) {
      for (std::size_t j = i + 1; j < p.placements.size(); ++j) {
        switch (tangency_check(p.placements[i].footprint, p.placements[j].footprint)) {
          case PairRelation::Tangent: ++tangent; break;
          case PairRelation::Disjoint: ++disjoint; break;
          case PairRelation::Overlapping: ++overlapping; break;
        }
      }
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%d tangent, %d disjoint, %d overlapping", tangent,
                  disjoint, overlapping);
    report("tangency", overlapping == 0, buf);
  }
  {
    const double analytic = p.footprint_area_sum / shoelace_area(p.region);
    const double mc = coverage_fraction_mc(p, samples, seed);
    const double sigma = std::sqrt(analytic * (1 - analytic) / static_cast<double>(samples));
    char buf[128];
    std::snprintf(buf, sizeof(buf), "analytic=%.6f mc=%.6f |diff|=%.6f 3sigma=%.6f",
                  analytic, mc, std::abs(mc - analytic), 3 * sigma);
    report("coverage_mc", std::abs(mc - analytic) <= 3 * sigma, buf);
  }
  {
    double worst_rel = 0.0;
    for (const auto& u : p.placements) {
      const auto& e = u.footprint;
      const double d = norm(u.proj - e.center);
      const double psi = u.psi_deg * std::numbers::pi / 180.0;
      const double theta = u.theta_deg * std::numbers::pi / 180.0;
      const double far_err =
          std::abs(u.h_opt * std::tan(psi + theta) - (d + e.a)) / (d + e.a);
      const double near_ref = std::max(1.0, std::abs(d - e.a));
      const double near_err =
          std::abs(u.h_opt * std::tan(psi - theta) - (d - e.a)) / near_ref;
      worst_rel = std::max({worst_rel, far_err, near_err});
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "max relative error %.3e", worst_rel);
    report("cone_geometry", worst_rel < 1e-6, buf);
  }

  std::printf("VERIFY scenario=%s samples=%ld seed=%llu result=%s failed=%d\n",
              scenario_path.c_str(), samples, static_cast<unsigned long long>(seed),
              failed == 0 ? "PASS" : "FAIL", failed);
  return failed == 0 ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UAV coverage planner: maps an equal-circle unit-square packing onto a "
               "convex quadrilateral as tangent elliptical footprints and optimizes "
               "each UAV's altitude and antenna angles"};
  app.require_subcommand(1);

  std::string scenario_path, out_path, format = "csv", mode = "footprints", policy;
  long samples = 1'000'000;
  std::uint64_t seed = 42;
  std::vector<double> coords;

  auto* c_plan = app.add_subcommand("plan", "Compute placements and write CSV/JSON");
  c_plan->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  c_plan->add_option("--format", format, "csv or json");
  c_plan->add_option("--out", out_path, "Output path (stdout when omitted)");
  c_plan->add_option("--offset-policy", policy,
                     "toward_centroid|away_from_centroid|positive|negative");

  auto* c_render = app.add_subcommand("render", "Write an SVG figure");
  c_render->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  c_render->add_option("--mode", mode, "footprints|packing_pair|pose3d");
  c_render->add_option("--out", out_path, "Output SVG path (stdout when omitted)");
  c_render->add_option("--offset-policy", policy, "Offset policy override");

  auto* c_hom = app.add_subcommand(
      "homography", "Solve unit square -> quad and print H with vanishing points");
  c_hom->add_option("coords", coords, "x1 y1 x2 y2 x3 y3 x4 y4")->expected(8);

  auto* c_verify = app.add_subcommand("verify", "Run the oracle checks on a scenario");
  c_verify->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  c_verify->add_option("--samples", samples, "Monte Carlo sample count");
  c_verify->add_option("--seed", seed, "Monte Carlo seed");
  c_verify->add_option("--offset-policy", policy, "Offset policy override");

  try {
    app.parse(argc, argv);
    if (c_plan->parsed()) return cmd_plan(scenario_path, format, out_path, policy);
    if (c_render->parsed()) return cmd_render(scenario_path, mode, out_path, policy);
    if (c_hom->parsed()) return cmd_homography(coords);
    if (c_verify->parsed()) return cmd_verify(scenario_path, samples, seed, policy);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ComputeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPlanning;
  }
  return kExitOk;
}
