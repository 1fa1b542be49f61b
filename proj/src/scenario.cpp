#include "quadcover/scenario.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "quadcover/errors.hpp"

namespace quadcover {

namespace {

using json = nlohmann::ordered_json;

double require_number(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw ScenarioParseError("missing or non-numeric field: " + key);
  }
  return j[key].get<double>();
}

Environment parse_environment(const json& j) {
  if (j.is_string()) {
    const auto env = environments::by_name(j.get<std::string>());
    if (!env) {
      throw ScenarioParseError("unknown environment preset '" + j.get<std::string>() +
                               "' (expected suburban, urban or dense_urban)");
    }
    return *env;
  }
  if (!j.is_object()) {
    throw ScenarioParseError("environment must be a preset name or a parameter object");
  }
  for (const auto& [key, _] : j.items()) {
    if (key != "xi_los" && key != "xi_nlos" && key != "eta" && key != "kappa" &&
        key != "name") {
      throw ScenarioParseError("unknown environment field: " + key);
    }
  }
  Environment env;
  env.xi_los = require_number(j, "xi_los");
  env.xi_nlos = require_number(j, "xi_nlos");
  env.eta = require_number(j, "eta");
  env.kappa = require_number(j, "kappa");
  env.name = j.value("name", std::string("custom"));
  if (!(env.xi_nlos > env.xi_los) || env.xi_los < 0 || !(env.kappa > 0) || !(env.eta > 0)) {
    throw ScenarioParseError(
        "environment parameters must satisfy xi_nlos > xi_los >= 0, eta > 0, kappa > 0");
  }
  return env;
}

// std::to_chars is locale-independent by definition, so CSV always uses '.'
std::string fixed(double v, int precision) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed,
                                 precision);
  return std::string(buf, res.ptr);
}

std::string general(double v, int precision) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general,
                                 precision);
  return std::string(buf, res.ptr);
}

}  // namespace

OffsetPolicy offset_policy_from_string(const std::string& s) {
  if (s == "toward_centroid") return OffsetPolicy::TowardCentroid;
  if (s == "away_from_centroid") return OffsetPolicy::AwayFromCentroid;
  if (s == "positive") return OffsetPolicy::Positive;
  if (s == "negative") return OffsetPolicy::Negative;
  throw ScenarioParseError("unknown offset_policy '" + s + "'");
}

Scenario scenario_from_json_text(const std::string& text,
                                 const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ScenarioParseError("scenario must be a JSON object");

  static const std::set<std::string> known = {"quad",         "m",
                                              "frequency_hz", "environment",
                                              "packing_file", "offset_policy",
                                              "homography"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw ScenarioParseError("unknown scenario field: " + key);
  }
  for (const char* req : {"quad", "m", "frequency_hz", "environment"}) {
    if (!j.contains(req)) throw ScenarioParseError(std::string("missing field: ") + req);
  }

  if (!j["quad"].is_array() || j["quad"].size() != 4) {
    throw ScenarioParseError("quad must be an array of four [x,y] pairs");
  }
  std::array<Point2, 4> verts{};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& v = j["quad"][i];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw ScenarioParseError("quad vertex " + std::to_string(i) + " must be [x,y]");
    }
    verts[i] = {v[0].get<double>(), v[1].get<double>()};
  }

  if (!j["m"].is_number_integer() || j["m"].get<long>() < 1) {
    throw ScenarioParseError("m must be a positive integer");
  }
  const double f = require_number(j, "frequency_hz");
  if (!(f > 0)) throw ScenarioParseError("frequency_hz must be positive");

  Scenario s{Quadrilateral::from_vertices(verts),
             static_cast<int>(j["m"].get<long>()),
             f,
             parse_environment(j["environment"]),
             std::nullopt,
             OffsetPolicy::TowardCentroid,
             std::nullopt};

  if (j.contains("offset_policy")) {
    if (!j["offset_policy"].is_string()) {
      throw ScenarioParseError("offset_policy must be a string");
    }
    s.offset_policy = offset_policy_from_string(j["offset_policy"].get<std::string>());
  }
  if (j.contains("packing_file")) {
    if (!j["packing_file"].is_string()) {
      throw ScenarioParseError("packing_file must be a string path");
    }
    std::filesystem::path p = j["packing_file"].get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    s.packing = load_packing_file(p);
  }
  if (j.contains("homography")) {
    const auto& hj = j["homography"];
    if (!hj.is_array() || hj.size() != 9) {
      throw ScenarioParseError("homography must be an array of 9 row-major values");
    }
    std::array<double, 9> h{};
    for (std::size_t i = 0; i < 9; ++i) {
      if (!hj[i].is_number()) throw ScenarioParseError("homography entries must be numbers");
      h[i] = hj[i].get<double>();
    }
    s.homography = Homography::from_row_major(h);
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return scenario_from_json_text(ss.str(), path.parent_path());
}

std::string plan_to_csv(const Plan& p) {
  std::ostringstream os;
  os << "uav_id,center_x,center_y,a_m,b_m,phi_deg,h_opt_m,proj_x,proj_y,"
        "theta_deg,psi_deg,pl_max_db\n";
  for (const auto& u : p.placements) {
    const auto& e = u.footprint;
    os << e.index << ',' << fixed(e.center.x, 3) << ',' << fixed(e.center.y, 3)
       << ',' << fixed(e.a, 3) << ',' << fixed(e.b, 3) << ','
       << fixed(e.phi * 180.0 / std::numbers::pi, 1) << ',' << fixed(u.h_opt, 3)
       << ',' << fixed(u.proj.x, 3) << ',' << fixed(u.proj.y, 3) << ','
       << fixed(u.theta_deg, 1) << ',' << fixed(u.psi_deg, 1) << ','
       << fixed(u.pl_max_db, 3) << '\n';
  }
  os << "# S_m2=" << fixed(p.quad_area, 3) << '\n';
  os << "# footprint_area_sum_m2=" << fixed(p.footprint_area_sum, 3) << '\n';
  os << "# coverage_fraction=" << fixed(p.coverage_fraction, 6) << '\n';
  os << "# H=";
  for (int i = 0; i < 9; ++i) {
    os << (i ? "," : "") << general(p.homography.coeffs()[static_cast<std::size_t>(i)], 9);
  }
  os << '\n';
  return os.str();
}

std::string plan_to_json(const Plan& p) {
  json out;
  out["homography"] = p.homography.coeffs();
  out["quad_area_m2"] = p.quad_area;
  out["footprint_area_sum_m2"] = p.footprint_area_sum;
  out["coverage_fraction"] = p.coverage_fraction;
  out["placements"] = json::array();
  for (const auto& u : p.placements) {
    const auto& e = u.footprint;
    json r;
    r["uav_id"] = e.index;
    r["center_x"] = e.center.x;
    r["center_y"] = e.center.y;
    r["a_m"] = e.a;
    r["b_m"] = e.b;
    r["phi_deg"] = e.phi * 180.0 / std::numbers::pi;
    r["h_opt_m"] = u.h_opt;
    r["proj_x"] = u.proj.x;
    r["proj_y"] = u.proj.y;
    r["theta_deg"] = u.theta_deg;
    r["psi_deg"] = u.psi_deg;
    r["pl_max_db"] = u.pl_max_db;
    out["placements"].push_back(r);
  }
  return out.dump(2) + "\n";
}

}  // namespace quadcover
