#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>

#include "lkt3/diagram.hpp"

namespace lkt3 {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Diagram& d) {
  constexpr double size = 400.0, pad = 20.0;
  const bool torus = d.plane == Plane::XY || d.plane == Plane::XZ;

  // World window: the unit square on T^2, otherwise the strand bounding box.
  double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;
  if (!torus) {
    bool first = true;
    for (const Strand& s : d.strands)
      for (const Vec2& p : s.points) {
        if (first) x0 = x1 = p.x, y0 = y1 = p.y, first = false;
        x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
      }
    const double m = 0.05 * std::max({x1 - x0, y1 - y0, 1e-9});
    x0 -= m, x1 += m, y0 -= m, y1 += m;
  }
  const double scale = size / std::max(x1 - x0, y1 - y0);
  auto X = [&](double x) { return num(pad + (x - x0) * scale); };
  auto Y = [&](double y) { return num(pad + size - (y - y0) * scale); };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * pad << "\" height=\"" << size + 2 * pad
    << "\" viewBox=\"0 0 " << size + 2 * pad << ' ' << size + 2 * pad << "\">\n";
  o << "<rect class=\"frame\" x=\"" << num(pad) << "\" y=\"" << num(pad) << "\" width=\"" << num(size)
    << "\" height=\"" << num(size) << "\" fill=\"none\" stroke=\"#999\"/>\n";
  o << "<g class=\"strands\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const Strand& s : d.strands) {
    if (s.points.empty()) continue;
    o << "<path class=\"strand\" d=\"M" << X(s.points[0].x) << ',' << Y(s.points[0].y);
    for (std::size_t i = 1; i < s.points.size(); ++i) o << " L" << X(s.points[i].x) << ',' << Y(s.points[i].y);
    if (s.closed) o << " Z";
    o << "\"/>\n";
  }
  o << "</g>\n";

  // Orientation arrows at strand midpoints.
  for (const Strand& s : d.strands) {
    if (s.points.size() < 2) continue;
    const std::size_t k = s.points.size() / 2;
    const Vec2 a = s.points[k - 1], b = s.points[k];
    Vec2 dir = normalized(b - a) * (6.0 / scale);
    if (norm(dir) == 0.0) continue;
    if (d.orientation < 0) dir = -dir;
    const Vec2 side{-dir.y * 0.6, dir.x * 0.6};
    const Vec2 tip = b + dir, l = b - side, r = b + side;
    o << "<path class=\"arrow\" d=\"M" << X(tip.x) << ',' << Y(tip.y) << " L" << X(l.x) << ',' << Y(l.y) << " L"
      << X(r.x) << ',' << Y(r.y) << " Z\" fill=\"black\"/>\n";
  }

  // Gaps: blank out the under strand, then redraw the over strand on top.
  const double g = 7.0 / scale;
  for (const Crossing& c : d.crossings) {
    const Vec2 u0 = c.point - c.dir_under * g, u1 = c.point + c.dir_under * g;
    const Vec2 o0 = c.point - c.dir_over * g, o1 = c.point + c.dir_over * g;
    o << "<line class=\"gap\" x1=\"" << X(u0.x) << "\" y1=\"" << Y(u0.y) << "\" x2=\"" << X(u1.x) << "\" y2=\""
      << Y(u1.y) << "\" stroke=\"white\" stroke-width=\"5\"/>\n";
    o << "<line class=\"over\" x1=\"" << X(o0.x) << "\" y1=\"" << Y(o0.y) << "\" x2=\"" << X(o1.x) << "\" y2=\""
      << Y(o1.y) << "\" stroke=\"black\" stroke-width=\"1.5\" data-sign=\"" << c.sign << "\"/>\n";
  }

  for (const Cusp& c : d.cusps) {
    std::string label;
    if (c.sign != 0) label = c.sign > 0 ? "+" : "-";
    if (c.updown == CuspKind::Up) label = "u";
    if (c.updown == CuspKind::Down) label = "d";
    o << "<circle class=\"cusp\" cx=\"" << X(c.point.x) << "\" cy=\"" << Y(c.point.y)
      << "\" r=\"3\" fill=\"red\"/><text class=\"cusp-label\" x=\"" << X(c.point.x) << "\" y=\"" << Y(c.point.y)
      << "\" dx=\"4\" dy=\"-4\" font-size=\"10\">" << label << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace lkt3
