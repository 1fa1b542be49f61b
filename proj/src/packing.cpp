#include "quadcover/packing.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>

#include "quadcover/errors.hpp"

namespace quadcover {

namespace {

constexpr double kPackTol = 1e-9;

bool lex_yx(const Point2& a, const Point2& b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

PackingConfig grid_packing(int n) {
  PackingConfig p;
  p.m = n * n;
  p.radius = 1.0 / (2 * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      p.centers.push_back({(2 * i + 1) * p.radius, (2 * j + 1) * p.radius});
    }
  }
  return p;
}

struct CatalogEntry {
  double radius;
  std::vector<Point2> centers;
};

// Best-known equal-circle packings of the unit square (radii match the
// published values to ~1e-10; coordinates refined to contact residual
// < 1e-14). m = 2, 3, 5 and 8 have closed-form radii.
CatalogEntry catalog_entry(int m) {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  switch (m) {
    case 2: {
      const double r = (2.0 - s2) / 2.0;
      return {r, {{r, r}, {1 - r, 1 - r}}};
    }
    case 3: {
      const double r = 2.0 / (4.0 + s2 + s6);
      const double t = 1.0 - r - s2 * r;
      return {r, {{r, r}, {1 - r, t}, {t, 1 - r}}};
    }
    case 5: {
      const double r = (s2 - 1.0) / 2.0;
      return {r, {{r, r}, {1 - r, r}, {0.5, 0.5}, {r, 1 - r}, {1 - r, 1 - r}}};
    }
    case 6: {
      const double r = 0.187680601147477;
      return {r, {{0.395893533715826, r},
                  {0.812319398852523, r},
                  {r, 0.5},
                  {0.604106466284174, 0.5},
                  {0.395893533715826, 0.812319398852523},
                  {0.812319398852523, 0.812319398852523}}};
    }
    case 7: {
      const double r = 0.174457630187010;
      return {r, {{0.174457630187010, 0.174457630187009},
                  {0.523372890561028, 0.174457630187010},
                  {0.825542369812990, 0.348915260374020},
                  {0.174457630187010, 0.523372890561028},
                  {0.523372890561028, 0.523372890561029},
                  {0.744565079844154, 0.806630287745109},
                  {0.348915260374018, 0.825542369812990}}};
    }
    case 8: {
      const double r = 1.0 / (2.0 + 2.0 * std::sqrt(2.0 + s3));
      const double q = (s6 - s2) / 4.0;  // sin(15 deg)
      return {r, {{r, r},
                  {1 - r, r},
                  {0.5, q},
                  {q, 0.5},
                  {1 - q, 0.5},
                  {0.5, 1 - q},
                  {r, 1 - r},
                  {1 - r, 1 - r}}};
    }
    case 10: {
      const double r = 0.148204322565229;
      return {r, {{0.423091212591209, r},
                  {0.719499857721667, r},
                  {r, 0.259088417907699},
                  {0.851795677434771, 0.413451190585402},
                  {0.423091212591209, 0.444612967695686},
                  {r, 0.555497063038157},
                  {0.652242144215576, 0.632623434010087},
                  {0.156279965865923, 0.851795677434771},
                  {0.452688610996381, 0.851795677434771},
                  {0.851795677434771, 0.851795677434771}}};
    }
    case 11: {
      const double r = 0.142399237695800;
      return {r, {{0.454834895862218, r},
                  {0.857600762304200, r},
                  {0.149380204456868, 0.233241472853966},
                  {0.656217829083209, 0.343782170916791},
                  {0.381123626414710, 0.417493440364299},
                  {0.857600762304200, 0.545165104137782},
                  {r, 0.572802286912599},
                  {0.582506559635701, 0.618876373585290},
                  {0.751870578373607, 0.851917344563682},
                  {r, 0.857600762304200},
                  {0.427197713087401, 0.857600762304200}}};
    }
    case 12: {
      const double r = 0.139958844038428;
      return {r, {{r, r},
                  {0.620013718653857, r},
                  {0.379986281346143, 0.283975306423057},
                  {0.860041155961572, 0.283975306423057},
                  {r, 0.427991768807686},
                  {0.620013718653857, 0.427991768807686},
                  {0.379986281346143, 0.572008231192314},
                  {0.860041155961572, 0.572008231192314},
                  {r, 0.716024693576943},
                  {0.620013718653857, 0.716024693576943},
                  {0.379986281346143, 0.860041155961572},
                  {0.860041155961572, 0.860041155961572}}};
    }
    case 13: {
      const double r = 0.133993513499008;
      return {r, {{r, r},
                  {0.402029630877929, r},
                  {0.670016657875946, r},
                  {0.866006486500992, 0.316763953435999},
                  {0.268011572188469, 0.366062913860935},
                  {0.622105546563920, 0.430531591365848},
                  {0.866006486500992, 0.584750980434016},
                  {0.402032220145956, 0.598130818923853},
                  {r, 0.598132314222862},
                  {0.637881780000384, 0.725378733467504},
                  {0.141770046501760, 0.866006486500992},
                  {0.409757073499776, 0.866006486500992},
                  {0.866006486500992, 0.866006486500992}}};
    }
    case 14: {
      const double r = 0.129331793710034;
      return {r, {{0.482672825159864, r},
                  {0.741336412579932, r},
                  {r, 0.150619695814115},
                  {0.353341031449830, 0.353341031449830},
                  {0.612004618869898, 0.353341031449830},
                  {0.870668206289966, 0.353341031449830},
                  {r, 0.482672825159864},
                  {0.353341031449830, 0.612004618869898},
                  {0.612004618869898, 0.612004618869898},
                  {0.870668206289966, 0.612004618869898},
                  {r, 0.741336412579932},
                  {0.353341031449830, 0.870668206289966},
                  {0.612004618869898, 0.870668206289966},
                  {0.870668206289966, 0.870668206289966}}};
    }
    case 15: {
      const double r = 0.127166547515125;
      return {r, {{r, r},
                  {0.618500357454625, r},
                  {0.872833452484875, r},
                  {0.372833452484875, 0.192992796308823},
                  {0.618500357454625, 0.381499642545374},
                  {r, 0.381499642545375},
                  {0.872833452484875, 0.381499642545375},
                  {0.372833452484875, 0.447325891339073},
                  {0.192992796308823, 0.627166547515125},
                  {0.552674108660928, 0.627166547515125},
                  {0.807007203691178, 0.627166547515125},
                  {0.372833452484875, 0.807007203691177},
                  {r, 0.872833452484875},
                  {0.618500357454626, 0.872833452484875},
                  {0.872833452484875, 0.872833452484875}}};
    }
    default:
      throw UnsupportedCountError("no catalog entry for m=" + std::to_string(m));
  }
}

}  // namespace

void validate_packing(const PackingConfig& p) {
  if (p.m <= 0 || static_cast<int>(p.centers.size()) != p.m) {
    throw InvalidPackingError("center count does not match m");
  }
  if (!(p.radius > 0.0) || p.radius > 0.5 + kPackTol) {
    throw InvalidPackingError("radius must lie in (0, 0.5]");
  }
  for (int i = 0; i < p.m; ++i) {
    const Point2 c = p.centers[static_cast<std::size_t>(i)];
    if (c.x < p.radius - kPackTol || c.x > 1 - p.radius + kPackTol ||
        c.y < p.radius - kPackTol || c.y > 1 - p.radius + kPackTol) {
      std::ostringstream msg;
      msg << "circle " << i << " at (" << c.x << ", " << c.y
          << ") protrudes past the unit square";
      throw InvalidPackingError(msg.str());
    }
  }
  for (int i = 0; i < p.m; ++i) {
    for (int j = i + 1; j < p.m; ++j) {
      const double d = norm(p.centers[static_cast<std::size_t>(i)] -
                            p.centers[static_cast<std::size_t>(j)]);
      if (d < 2 * p.radius - kPackTol) {
        std::ostringstream msg;
        msg << "circles " << i << " and " << j << " overlap: distance " << d
            << " < " << 2 * p.radius;
        throw InvalidPackingError(msg.str());
      }
    }
  }
}

PackingConfig get_packing(int m) {
  if (m < 1 || m > 16) {
    throw UnsupportedCountError("packing catalog covers m in [1,16], got " +
                                std::to_string(m));
  }
  PackingConfig p;
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m))));
  if (n * n == m) {
    p = grid_packing(n);
  } else {
    auto e = catalog_entry(m);
    p.m = m;
    p.radius = e.radius;
    p.centers = std::move(e.centers);
  }
  p.source = PackingSource::Embedded;
  std::sort(p.centers.begin(), p.centers.end(), lex_yx);
  validate_packing(p);
  return p;
}

PackingConfig load_packing_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open packing file: " + path.string());
  }
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::vector<double> vals;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p != end) {
      if (*p == ' ' || *p == '\t' || *p == '\r') {
        ++p;
        continue;
      }
      double v = 0;
      const auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc{}) {
        throw PackingParseError("line " + std::to_string(lineno) +
                                ": expected a number, got '" + std::string(p, end) + "'");
      }
      vals.push_back(v);
      p = next;
    }
    if (!vals.empty()) rows.push_back(std::move(vals));
  }
  if (rows.empty() || rows[0].size() != 2) {
    throw PackingParseError("first data line must be: m r");
  }
  const double m_raw = rows[0][0];
  if (m_raw < 1 || m_raw != std::floor(m_raw)) {
    throw PackingParseError("m must be a positive integer");
  }
  PackingConfig p;
  p.m = static_cast<int>(m_raw);
  p.radius = rows[0][1];
  if (static_cast<int>(rows.size()) != p.m + 1) {
    throw PackingParseError("expected " + std::to_string(p.m) + " center lines, got " +
                            std::to_string(rows.size() - 1));
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 2) {
      throw PackingParseError("center line " + std::to_string(i) + " must be: x y");
    }
    p.centers.push_back({rows[i][0], rows[i][1]});
  }
  p.source = PackingSource::External;
  std::sort(p.centers.begin(), p.centers.end(), lex_yx);
  validate_packing(p);
  return p;
}

double packing_density(const PackingConfig& p) {
  return p.m * std::numbers::pi * p.radius * p.radius;
}

}  // namespace quadcover
