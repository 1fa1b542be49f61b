#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <utility>

#include "quadcover/errors.hpp"
#include "quadcover/render.hpp"
#include "quadcover/scenario.hpp"

namespace py = pybind11;
using namespace quadcover;

namespace {

using Pair = std::pair<double, double>;

Point2 to_point(const Pair& p) { return {p.first, p.second}; }
Pair to_pair(Point2 p) { return {p.x, p.y}; }

Quadrilateral quad_from(const std::vector<Pair>& vs) {
  if (vs.size() != 4) throw InputError("expected four (x, y) vertices");
  return Quadrilateral::from_vertices(
      {to_point(vs[0]), to_point(vs[1]), to_point(vs[2]), to_point(vs[3])});
}

const char* relation_name(PairRelation r) {
  switch (r) {
    case PairRelation::Disjoint: return "disjoint";
    case PairRelation::Tangent: return "tangent";
    case PairRelation::Overlapping: return "overlapping";
  }
  return "?";
}

const char* conic_type_name(ConicType t) {
  switch (t) {
    case ConicType::Ellipse: return "ellipse";
    case ConicType::Parabola: return "parabola";
    case ConicType::Hyperbola: return "hyperbola";
    case ConicType::Degenerate: return "degenerate";
  }
  return "?";
}

Environment env_from(const py::object& env) {
  if (py::isinstance<py::str>(env)) {
    const auto name = env.cast<std::string>();
    const auto e = environments::by_name(name);
    if (!e) throw InputError("unknown environment preset '" + name + "'");
    return *e;
  }
  return env.cast<Environment>();
}

Scenario make_scenario(const std::vector<Pair>& quad, int m, double frequency_hz,
                       const py::object& environment, const py::object& packing_file,
                       const std::string& offset_policy, const py::object& homography) {
  Scenario s{quad_from(quad),
             m,
             frequency_hz,
             env_from(environment),
             std::nullopt,
             offset_policy_from_string(offset_policy),
             std::nullopt};
  if (!packing_file.is_none()) {
    s.packing = load_packing_file(packing_file.cast<std::string>());
  }
  if (!homography.is_none()) {
    s.homography = Homography::from_row_major(homography.cast<std::array<double, 9>>());
  }
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Planner core: homography-mapped elliptical UAV footprints over a "
            "convex quadrilateral with per-UAV altitude optimization";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ComputeError>(m, "ComputeError", PyExc_RuntimeError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<Quadrilateral>(m, "Quadrilateral")
      .def(py::init(&quad_from), py::arg("vertices"))
      .def_property_readonly("vertices",
                             [](const Quadrilateral& q) {
                               std::vector<Pair> out;
                               for (const auto& v : q.vertices()) out.push_back(to_pair(v));
                               return out;
                             })
      .def("area", [](const Quadrilateral& q) { return shoelace_area(q); })
      .def("centroid", [](const Quadrilateral& q) { return to_pair(q.centroid()); })
      .def("contains",
           [](const Quadrilateral& q, const Pair& p) { return q.contains(to_point(p)); },
           py::arg("point"));

  m.def("shoelace_area",
        [](const std::vector<Pair>& vs) { return shoelace_area(quad_from(vs)); },
        py::arg("vertices"));
  m.def("unit_square", &unit_square);

  py::class_<Homography>(m, "Homography")
      .def_static("from_row_major",
                  [](const std::array<double, 9>& h) { return Homography::from_row_major(h); },
                  py::arg("coeffs"))
      .def_static("identity", &Homography::identity)
      .def_property_readonly("coeffs", [](const Homography& h) { return h.coeffs(); })
      .def("det", &Homography::det)
      .def("apply",
           [](const Homography& h, const Pair& p) { return to_pair(h.apply(to_point(p))); },
           py::arg("point"))
      .def("apply_inverse",
           [](const Homography& h, const Pair& p) {
             return to_pair(h.apply_inverse(to_point(p)));
           },
           py::arg("point"))
      .def("jacobian_det",
           [](const Homography& h, const Pair& p) { return h.jacobian_det(to_point(p)); },
           py::arg("point"))
      .def("vanishing_points", [](const Homography& h) {
        const auto [vh, vv] = h.vanishing_points();
        py::object a = vh ? py::cast(to_pair(*vh)) : py::none();
        py::object b = vv ? py::cast(to_pair(*vv)) : py::none();
        return py::make_tuple(a, b);
      });

  m.def("solve_homography",
        [](const std::vector<Pair>& src, const std::vector<Pair>& dst) {
          return solve_homography(quad_from(src), quad_from(dst));
        },
        py::arg("src"), py::arg("dst"));

  py::class_<Conic>(m, "Conic")
      .def_readonly("A", &Conic::A)
      .def_readonly("B", &Conic::B)
      .def_readonly("C", &Conic::C)
      .def_readonly("D", &Conic::D)
      .def_readonly("E", &Conic::E)
      .def_readonly("F", &Conic::F)
      .def("value", [](const Conic& c, const Pair& p) { return c.value(to_point(p)); },
           py::arg("point"));

  py::class_<EllipseFootprint>(m, "EllipseFootprint")
      .def_property_readonly("center",
                             [](const EllipseFootprint& e) { return to_pair(e.center); })
      .def_readonly("a", &EllipseFootprint::a)
      .def_readonly("b", &EllipseFootprint::b)
      .def_readonly("phi", &EllipseFootprint::phi)
      .def_readonly("index", &EllipseFootprint::index)
      .def("boundary_point",
           [](const EllipseFootprint& e, double t) { return to_pair(e.boundary_point(t)); },
           py::arg("t"))
      .def("implicit_value",
           [](const EllipseFootprint& e, const Pair& p) {
             return e.implicit_value(to_point(p));
           },
           py::arg("point"));

  m.def("map_circle",
        [](const Homography& h, const Pair& center, double radius) {
          return map_circle(h, Circle{to_point(center), radius});
        },
        py::arg("h"), py::arg("center"), py::arg("radius"));
  m.def("classify",
        [](const Conic& c) { return std::string(conic_type_name(classify(c))); },
        py::arg("conic"));
  m.def("extract_ellipse", &extract_ellipse, py::arg("conic"), py::arg("index") = 0);
  m.def("tangency_check",
        [](const EllipseFootprint& a, const EllipseFootprint& b) {
          return std::string(relation_name(tangency_check(a, b)));
        },
        py::arg("e1"), py::arg("e2"));
  m.def("ellipse_area", &ellipse_area, py::arg("footprint"));

  py::class_<PackingConfig>(m, "PackingConfig")
      .def_readonly("m", &PackingConfig::m)
      .def_readonly("radius", &PackingConfig::radius)
      .def_property_readonly("centers",
                             [](const PackingConfig& p) {
                               std::vector<Pair> out;
                               for (const auto& c : p.centers) out.push_back(to_pair(c));
                               return out;
                             })
      .def_property_readonly("source", [](const PackingConfig& p) {
        return p.source == PackingSource::Embedded ? "embedded" : "external";
      });

  m.def("get_packing", &get_packing, py::arg("m"));
  m.def("load_packing_file", &load_packing_file, py::arg("path"));
  m.def("packing_density", &packing_density, py::arg("packing"));
  m.def("validate_packing", &validate_packing, py::arg("packing"));

  py::class_<Environment>(m, "Environment")
      .def(py::init([](double xi_los, double xi_nlos, double eta, double kappa,
                       const std::string& name) {
             return Environment{xi_los, xi_nlos, eta, kappa, name};
           }),
           py::arg("xi_los"), py::arg("xi_nlos"), py::arg("eta"), py::arg("kappa"),
           py::arg("name") = "custom")
      .def_readonly("xi_los", &Environment::xi_los)
      .def_readonly("xi_nlos", &Environment::xi_nlos)
      .def_readonly("eta", &Environment::eta)
      .def_readonly("kappa", &Environment::kappa)
      .def_readonly("name", &Environment::name);

  m.def("environment",
        [](const std::string& name) {
          const auto e = environments::by_name(name);
          if (!e) throw InputError("unknown environment preset '" + name + "'");
          return *e;
        },
        py::arg("name"));
  m.def("w_factor",
        [](double a, double b, double h) { return w_factor(LinkGeometry{a, b, h, 0}); },
        py::arg("a"), py::arg("b"), py::arg("h"));
  m.def("p_los", &p_los, py::arg("env"), py::arg("elevation_deg"));
  m.def("pl_max",
        [](const Environment& env, double a, double b, double h, double f) {
          return pl_max(env, LinkGeometry{a, b, h, f});
        },
        py::arg("env"), py::arg("a"), py::arg("b"), py::arg("h"), py::arg("f"));

  py::class_<UavPlacement>(m, "UavPlacement")
      .def_readonly("footprint", &UavPlacement::footprint)
      .def_readonly("h_opt", &UavPlacement::h_opt)
      .def_readonly("pl_max_db", &UavPlacement::pl_max_db)
      .def_readonly("psi_deg", &UavPlacement::psi_deg)
      .def_readonly("theta_deg", &UavPlacement::theta_deg)
      .def_property_readonly("proj", [](const UavPlacement& u) { return to_pair(u.proj); })
      .def_readonly("position", &UavPlacement::position);

  m.def("optimize_altitude",
        [](const Environment& env, double a, double b, double f) {
          const auto r = optimize_altitude(env, a, b, f);
          return std::make_pair(r.h_opt, r.pl_db);
        },
        py::arg("env"), py::arg("a"), py::arg("b"), py::arg("f"));
  m.def("antenna_angles",
        [](double a, double b, double h) {
          const auto r = antenna_angles(a, b, h);
          return std::make_pair(r.psi_deg, r.theta_deg);
        },
        py::arg("a"), py::arg("b"), py::arg("h"));
  m.def("projection_offset", &projection_offset, py::arg("a"), py::arg("b"), py::arg("h"));
  m.def("assemble_placement", &assemble_placement, py::arg("env"), py::arg("footprint"),
        py::arg("f"), py::arg("offset_sign") = 1);

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("m", &Scenario::m)
      .def_readonly("frequency_hz", &Scenario::frequency_hz)
      .def_readonly("env", &Scenario::env)
      .def_readonly("quad", &Scenario::quad);

  py::class_<Plan>(m, "Plan")
      .def_readonly("homography", &Plan::homography)
      .def_readonly("placements", &Plan::placements)
      .def_readonly("region", &Plan::region)
      .def_readonly("quad_area", &Plan::quad_area)
      .def_readonly("footprint_area_sum", &Plan::footprint_area_sum)
      .def_readonly("coverage_fraction", &Plan::coverage_fraction);

  m.def("make_scenario", &make_scenario, py::arg("quad"), py::arg("m"),
        py::arg("frequency_hz"), py::arg("environment"),
        py::arg("packing_file") = py::none(), py::arg("offset_policy") = "toward_centroid",
        py::arg("homography") = py::none());
  m.def("load_scenario", &load_scenario, py::arg("path"));
  m.def("plan", &plan, py::arg("scenario"));
  m.def("coverage_fraction_mc", &coverage_fraction_mc, py::arg("plan"), py::arg("samples"),
        py::arg("seed") = 42);
  m.def("hexagon_comparison", &hexagon_comparison, py::arg("side") = 1.0);
  m.def("hexagon_comparison_variant", &hexagon_comparison_variant, py::arg("rotation"),
        py::arg("side") = 1.0);
  m.def("rectangle_comparison", &rectangle_comparison, py::arg("u"), py::arg("v"),
        py::arg("n"));
  m.def("render_svg",
        [](const Plan& p, const Scenario& s, const std::string& mode) {
          return render_svg(p, s, render_mode_from_string(mode));
        },
        py::arg("plan"), py::arg("scenario"), py::arg("mode") = "footprints");
}
