#include "quadcover/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "quadcover/errors.hpp"

namespace quadcover {

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v, const char* format = "%.2f") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

std::string world(double v) { return num(v, "%.12g"); }

struct Bounds {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  void add(Point2 p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
};

/// World (y up) to view (y down) mapping with uniform scale.
struct View {
  double scale = 1, ox = 0, oy = 0, ymax = 0;
  View(const Bounds& b, double target_w, double margin) {
    const double w = std::max(b.xmax - b.xmin, 1e-12);
    scale = (target_w - 2 * margin) / w;
    ox = margin - b.xmin * scale;
    oy = margin;
    ymax = b.ymax;
  }
  double x(double wx) const { return ox + wx * scale; }
  double y(double wy) const { return oy + (ymax - wy) * scale; }
  double height(const Bounds& b, double margin) const {
    return (b.ymax - b.ymin) * scale + 2 * margin;
  }
};

const char* kPalette[] = {"#4c78a8", "#f58518", "#54a24b", "#e45756", "#72b7b2",
                          "#b279a2", "#eeca3b", "#9d755d", "#bab0ac"};

void draw_quad(std::ostringstream& os, const View& v, const Quadrilateral& q,
               const char* style) {
  os << "  <polygon points=\"";
  for (const auto& p : q.vertices()) {
    os << num(v.x(p.x)) << ',' << num(v.y(p.y)) << ' ';
  }
  os << "\" " << style << "/>\n";
}

void draw_footprints(std::ostringstream& os, const View& v, const Plan& plan) {
  int k = 0;
  for (const auto& u : plan.placements) {
    const auto& e = u.footprint;
    const char* color = kPalette[static_cast<std::size_t>(k++ % 9)];
    const double cx = v.x(e.center.x), cy = v.y(e.center.y);
    const double phi_deg = e.phi * 180.0 / kPi;
    // screen y is flipped, so a CCW world rotation is drawn as rotate(-phi)
    os << "  <g transform=\"translate(" << num(cx) << ' ' << num(cy) << ") rotate("
       << num(-phi_deg) << ")\">\n"
       << "    <ellipse rx=\"" << num(e.a * v.scale) << "\" ry=\"" << num(e.b * v.scale)
       << "\" fill=\"" << color << "\" fill-opacity=\"0.30\" stroke=\"" << color
       << "\" stroke-width=\"1.5\""
       << " data-index=\"" << e.index << "\" data-cx=\"" << world(e.center.x)
       << "\" data-cy=\"" << world(e.center.y) << "\" data-a=\"" << world(e.a)
       << "\" data-b=\"" << world(e.b) << "\" data-phi-deg=\"" << world(phi_deg)
       << "\"/>\n"
       << "  </g>\n";
    const double px = v.x(u.proj.x), py = v.y(u.proj.y);
    os << "  <path d=\"M " << num(px - 4) << ' ' << num(py - 4) << " L " << num(px + 4)
       << ' ' << num(py + 4) << " M " << num(px - 4) << ' ' << num(py + 4) << " L "
       << num(px + 4) << ' ' << num(py - 4) << "\" stroke=\"#222\" stroke-width=\"1.2\"/>\n";
    os << "  <text x=\"" << num(cx) << "\" y=\"" << num(cy + 4)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
       << e.index << "</text>\n";
  }
}

std::string svg_open(double w, double h) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w)
     << "\" height=\"" << num(h) << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h)
     << "\">\n";
  return os.str();
}

std::string render_footprints(const Plan& plan, const Scenario& scenario) {
  Bounds b;
  for (const auto& p : scenario.quad.vertices()) b.add(p);
  for (const auto& u : plan.placements) {
    for (int i = 0; i < 32; ++i) {
      b.add(u.footprint.boundary_point(2 * kPi * i / 32));
    }
    b.add(u.proj);
  }
  const double margin = 40, width = 900;
  View v(b, width, margin);
  const double height = v.height(b, margin);

  std::ostringstream os;
  os << svg_open(width, height);
  // world-to-view: vx = ox + x*s, vy = oy + (ymax - y)*s  (y axis flipped)
  os << "  <!-- world-to-view transform: vx = " << num(v.ox, "%.6f") << " + x * "
     << num(v.scale, "%.9g") << ", vy = " << num(v.oy, "%.6f") << " + ("
     << num(v.ymax, "%.6f") << " - y) * " << num(v.scale, "%.9g")
     << "; world units are meters -->\n";
  draw_quad(os, v, scenario.quad,
            "fill=\"#f4f6f8\" stroke=\"#333d47\" stroke-width=\"2\"");
  draw_footprints(os, v, plan);
  os << "</svg>\n";
  return os.str();
}

std::string render_packing_pair(const Plan& plan, const Scenario& scenario) {
  const PackingConfig packing =
      scenario.packing ? *scenario.packing : get_packing(scenario.m);

  // left panel: unit square, right panel: quad with footprints
  const double margin = 40, left_w = 360, width = 1160;
  Bounds bl;
  bl.add({0, 0});
  bl.add({1, 1});
  View vl(bl, left_w, margin);

  Bounds br;
  for (const auto& p : scenario.quad.vertices()) br.add(p);
  for (const auto& u : plan.placements) {
    for (int i = 0; i < 32; ++i) br.add(u.footprint.boundary_point(2 * kPi * i / 32));
  }
  View vr(br, width - left_w, margin);
  vr.ox += left_w;
  const double height = std::max(vl.height(bl, margin), vr.height(br, margin));

  std::ostringstream os;
  os << svg_open(width, height);
  os << "  <!-- left: packing in the unit square; right: mapped footprints (meters) -->\n";
  draw_quad(os, vl, unit_square(), "fill=\"#f4f6f8\" stroke=\"#333d47\" stroke-width=\"2\"");
  int k = 0;
  for (const auto& c : packing.centers) {
    const char* color = kPalette[static_cast<std::size_t>(k % 9)];
    os << "  <circle cx=\"" << num(vl.x(c.x)) << "\" cy=\"" << num(vl.y(c.y)) << "\" r=\""
       << num(packing.radius * vl.scale) << "\" fill=\"" << color
       << "\" fill-opacity=\"0.30\" stroke=\"" << color << "\" stroke-width=\"1.5\""
       << " data-cx=\"" << world(c.x) << "\" data-cy=\"" << world(c.y) << "\" data-r=\""
       << world(packing.radius) << "\"/>\n";
    os << "  <text x=\"" << num(vl.x(c.x)) << "\" y=\"" << num(vl.y(c.y) + 4)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
       << ++k << "</text>\n";
  }
  draw_quad(os, vr, scenario.quad, "fill=\"#f4f6f8\" stroke=\"#333d47\" stroke-width=\"2\"");
  draw_footprints(os, vr, plan);
  os << "</svg>\n";
  return os.str();
}

std::string render_pose3d(const Plan& plan, const Scenario& scenario) {
  // isometric projection u = (x - y) cos30, w = (x + y) sin30 - z, y-flip on w
  const double c30 = std::cos(kPi / 6), s30 = std::sin(kPi / 6);
  const auto iso = [&](double x, double y, double z) {
    return Point2{(x - y) * c30, (x + y) * s30 - z};
  };

  struct Arrow {
    Point2 tail, tip;
  };
  Bounds b;
  for (const auto& p : scenario.quad.vertices()) b.add(iso(p.x, p.y, 0));
  std::vector<Arrow> arrows;
  for (const auto& u : plan.placements) {
    for (int i = 0; i < 64; ++i) {
      const Point2 q = u.footprint.boundary_point(2 * kPi * i / 64);
      b.add(iso(q.x, q.y, 0));
    }
    const Point2 pos = iso(u.position[0], u.position[1], -u.position[2]);
    b.add(pos);
    // boresight arrow: tilt psi from vertical toward the footprint center
    Point2 dir = u.footprint.center - u.proj;
    const double n = norm(dir);
    dir = n > 1e-12 ? (1.0 / n) * dir : Point2{0, 0};
    const double len = 0.35 * u.position[2];
    const double psi = u.psi_deg * kPi / 180.0;
    const Point2 tip = iso(u.position[0] + len * std::sin(psi) * dir.x,
                           u.position[1] + len * std::sin(psi) * dir.y,
                           -(u.position[2] - len * std::cos(psi)));
    arrows.push_back({pos, tip});
    b.add(tip);
  }
  const double margin = 40, width = 1000;
  View v(b, width, margin);
  const double height = v.height(b, margin);

  std::ostringstream os;
  os << svg_open(width, height);
  os << "  <!-- isometric view: u=(x-y)cos30, w=(x+y)sin30 - z, meters -->\n";
  os << "  <polygon points=\"";
  for (const auto& p : scenario.quad.vertices()) {
    const Point2 q = iso(p.x, p.y, 0);
    os << num(v.x(q.x)) << ',' << num(v.y(q.y)) << ' ';
  }
  os << "\" fill=\"#f4f6f8\" stroke=\"#333d47\" stroke-width=\"2\"/>\n";

  int k = 0;
  for (const auto& u : plan.placements) {
    const char* color = kPalette[static_cast<std::size_t>(k++ % 9)];
    os << "  <path d=\"";
    for (int i = 0; i <= 64; ++i) {
      const Point2 q = u.footprint.boundary_point(2 * kPi * i / 64);
      const Point2 w = iso(q.x, q.y, 0);
      os << (i ? " L " : "M ") << num(v.x(w.x)) << ' ' << num(v.y(w.y));
    }
    os << "\" fill=\"" << color << "\" fill-opacity=\"0.25\" stroke=\"" << color
       << "\" stroke-width=\"1.2\"/>\n";

    const Point2 ground = iso(u.proj.x, u.proj.y, 0);
    const Point2 pos = iso(u.position[0], u.position[1], -u.position[2]);
    os << "  <line x1=\"" << num(v.x(ground.x)) << "\" y1=\"" << num(v.y(ground.y))
       << "\" x2=\"" << num(v.x(pos.x)) << "\" y2=\"" << num(v.y(pos.y))
       << "\" stroke=\"#777\" stroke-dasharray=\"4 3\" stroke-width=\"1\"/>\n";
    os << "  <circle cx=\"" << num(v.x(pos.x)) << "\" cy=\"" << num(v.y(pos.y))
       << "\" r=\"4\" fill=\"" << color << "\" stroke=\"#222\""
       << " data-index=\"" << u.footprint.index << "\" data-x=\"" << world(u.position[0])
       << "\" data-y=\"" << world(u.position[1]) << "\" data-h=\"" << world(u.position[2])
       << "\"/>\n";
    const auto& ar = arrows[static_cast<std::size_t>(k - 1)];
    os << "  <line x1=\"" << num(v.x(ar.tail.x)) << "\" y1=\"" << num(v.y(ar.tail.y))
       << "\" x2=\"" << num(v.x(ar.tip.x)) << "\" y2=\"" << num(v.y(ar.tip.y))
       << "\" stroke=\"#222\" stroke-width=\"1.6\" marker-end=\"url(#tiparrow)\"/>\n";
    os << "  <text x=\"" << num(v.x(pos.x) + 8) << "\" y=\"" << num(v.y(pos.y) - 6)
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << u.footprint.index
       << " (h=" << num(u.position[2], "%.1f") << " m)</text>\n";
  }
  os << "  <defs><marker id=\"tiparrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" "
        "refY=\"3\" orient=\"auto\"><path d=\"M 0 0 L 6 3 L 0 6 z\" fill=\"#222\"/>"
        "</marker></defs>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace

RenderMode render_mode_from_string(const std::string& s) {
  if (s == "footprints") return RenderMode::Footprints;
  if (s == "packing_pair") return RenderMode::PackingPair;
  if (s == "pose3d") return RenderMode::Pose3d;
  throw InputError("unknown render mode '" + s + "'");
}

std::string render_svg(const Plan& plan, const Scenario& scenario, RenderMode mode) {
  switch (mode) {
    case RenderMode::Footprints:
      return render_footprints(plan, scenario);
    case RenderMode::PackingPair:
      return render_packing_pair(plan, scenario);
    case RenderMode::Pose3d:
      return render_pose3d(plan, scenario);
  }
  throw InputError("unknown render mode");
}

}  // namespace quadcover
