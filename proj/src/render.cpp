#include "lamlab/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "lamlab/errors.hpp"
#include "lamlab/portrait.hpp"

namespace lamlab {

namespace {

constexpr const char* kWeakFill = "#c0392b";
constexpr const char* kStrongFill = "#ecf0f1";
constexpr const char* kCrossingFill = "#7f8c8d";

std::string fixed9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  std::string s(buf);
  if (s == "-0.000000000") s = "0.000000000";
  return s;
}

struct Point {
  double x;
  double y;
};

Point on_circle(const Angle& a) {
  const double phi = 2 * std::numbers::pi * a.to_double();
  return {std::cos(phi), std::sin(phi)};
}

std::string straight_path(const Point& p, const Point& q) {
  return "M " + fixed9(p.x) + " " + fixed9(p.y) + " L " + fixed9(q.x) + " " + fixed9(q.y);
}

// Arc of the circle orthogonal to the unit circle through both endpoints.
std::string geodesic_path(const Chord& c) {
  const Point p = on_circle(c.a());
  const Point q = on_circle(c.b());
  const Rational len = chord_length(c);
  if (len * 2 == 1) return straight_path(p, q);

  // Midpoint of the shorter circle arc, exactly.
  const Rational forward = arc_length(c.a(), c.b());
  const Angle from = forward * 2 <= 1 ? c.a() : c.b();
  const Angle mid = from + Angle::from_rational(len / 2);

  const double half = std::numbers::pi * static_cast<double>(len);  // half the central angle
  const Point dir = on_circle(mid);
  const Point centre{dir.x / std::cos(half), dir.y / std::cos(half)};
  const double radius = std::tan(half);
  const double cross = (p.x - centre.x) * (q.y - centre.y) - (p.y - centre.y) * (q.x - centre.x);
  return "M " + fixed9(p.x) + " " + fixed9(p.y) + " A " + fixed9(radius) + " " + fixed9(radius) + " 0 0 " +
         (cross > 0 ? "1 " : "0 ") + fixed9(q.x) + " " + fixed9(q.y);
}

std::string chord_path(const Chord& c, RenderOptions::Geometry g) {
  if (g == RenderOptions::Geometry::Hyperbolic) return geodesic_path(c);
  return straight_path(on_circle(c.a()), on_circle(c.b()));
}

}  // namespace

std::string to_svg(const FiniteLamination& lam, const RenderOptions& opts) {
  const std::string stroke = fixed9(static_cast<double>(opts.stroke_width));
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"-1.1 -1.1 2.2 2.2\" "
         "width=\"800\" height=\"800\">\n";
  out += "<g transform=\"scale(1,-1)\" fill=\"none\">\n";
  out += "<circle cx=\"0\" cy=\"0\" r=\"1\" stroke=\"#000000\" stroke-width=\"" + stroke + "\"/>\n";
  for (const Chord& c : lam.leaves()) {
    out += "<path d=\"" + chord_path(c, opts.geometry) + "\" stroke=\"#1f3a93\" stroke-width=\"" + stroke + "\"/>\n";
  }
  for (const Chord& c : opts.highlight) {
    if (c.degenerate()) continue;
    out += "<path d=\"" + chord_path(c, opts.geometry) + "\" stroke=\"#c0392b\" stroke-width=\"" +
           fixed9(2 * static_cast<double>(opts.stroke_width)) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string survey_raster(const std::vector<SurveyRecord>& records, unsigned grid_q) {
  if (records.empty()) throw InvalidArgument("no survey records to render");
  if (grid_q < 2) throw InvalidArgument("survey grid must have at least 2 points per axis");

  const std::size_t q = grid_q;
  // 0 = no record, 1 = weak, 2 = strong
  std::vector<int> cell(q * q, 0);
  for (const auto& r : records) {
    const BigInt ti = r.t.num() * q;
    const BigInt si = r.s.num() * q;
    if (ti % r.t.den() != 0 || si % r.s.den() != 0) {
      throw InvalidArgument("record (" + r.t.str() + ", " + r.s.str() + ") is off the grid");
    }
    const auto i = static_cast<std::size_t>(ti / r.t.den());
    const auto j = static_cast<std::size_t>(si / r.s.den());
    if (chords_cross(critical_chord(r.t), critical_chord(r.s))) {
      throw InvalidArgument("record (" + r.t.str() + ", " + r.s.str() + ") has crossing chords");
    }
    cell[i * q + j] = r.verdict == Verdict::Weak ? 1 : 2;
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " + std::to_string(q) + " " +
         std::to_string(q) + "\" width=\"" + std::to_string(std::max<std::size_t>(q * 8, 200)) + "\" height=\"" +
         std::to_string(std::max<std::size_t>(q * 8, 200)) + "\" shape-rendering=\"crispEdges\">\n";
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const char* fill = kCrossingFill;
      if (!chords_cross(critical_chord(Angle(i, q)), critical_chord(Angle(j, q)))) {
        if (cell[i * q + j] == 0) {
          throw InvalidArgument("missing survey record for (" + Angle(i, q).str() + ", " + Angle(j, q).str() + ")");
        }
        fill = cell[i * q + j] == 1 ? kWeakFill : kStrongFill;
      }
      // t runs left to right, s bottom to top.
      out += "<rect x=\"" + std::to_string(i) + "\" y=\"" + std::to_string(q - 1 - j) +
             "\" width=\"1\" height=\"1\" fill=\"" + fill + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace lamlab
