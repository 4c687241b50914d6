#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace gitfan::io {
namespace {

struct Pt {
  double x;
  double y;
};

constexpr double kSize = 400.0;
constexpr double kScale = 180.0;

std::string fmt(double v) {
  if (std::fabs(v) < 5e-4) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

Pt screen(Pt p) { return {kSize / 2 + kScale * p.x, kSize / 2 - kScale * p.y}; }

Pt as_point(const LatVec& v) { return {v[0].get_d(), v[1].get_d()}; }

// Sutherland-Hodgman clip of a convex polygon by the half-plane <n, x> >= 0.
std::vector<Pt> clip(const std::vector<Pt>& poly, Pt n) {
  std::vector<Pt> out;
  auto side = [&](Pt p) { return n.x * p.x + n.y * p.y; };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Pt a = poly[i];
    const Pt b = poly[(i + 1) % poly.size()];
    const double sa = side(a), sb = side(b);
    if (sa >= 0) out.push_back(a);
    if ((sa >= 0) != (sb >= 0)) {
      const double t = sa / (sa - sb);
      out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
  }
  return out;
}

// Point where the direction d leaves the unit square.
Pt to_boundary(Pt d) {
  const double m = std::max(std::fabs(d.x), std::fabs(d.y));
  return {d.x / m, d.y / m};
}

void line(std::ostringstream& os, Pt a, Pt b) {
  a = screen(a);
  b = screen(b);
  os << "  <line class=\"wall\" x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y)
     << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(b.y)
     << "\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
}

}  // namespace

std::string render_fan_svg(const GITFan& fan) {
  if (fan.fan.rank != 2) {
    throw Unsupported("svg rendering needs a rank-2 character space, got rank " +
                      std::to_string(fan.fan.rank));
  }
  static const char* kFills[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                 "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << fmt(kSize) << "\" height=\"" << fmt(kSize) << "\" viewBox=\"0 0 "
     << fmt(kSize) << ' ' << fmt(kSize) << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(kSize) << "\" height=\""
     << fmt(kSize) << "\" fill=\"white\"/>\n";

  std::size_t shade = 0;
  for (std::size_t i : fan.full_dimensional()) {
    const RatCone& c = fan.fan.cones[i];
    std::vector<Pt> poly = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    for (const auto& f : c.facets()) poly = clip(poly, as_point(f));
    if (poly.size() < 3) continue;
    os << "  <polygon class=\"chamber\" points=\"";
    Pt centroid{0, 0};
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const Pt s = screen(poly[k]);
      os << (k ? " " : "") << fmt(s.x) << ',' << fmt(s.y);
      centroid.x += poly[k].x / static_cast<double>(poly.size());
      centroid.y += poly[k].y / static_cast<double>(poly.size());
    }
    os << "\" fill=\"" << kFills[shade++ % 8]
       << "\" stroke=\"none\" fill-opacity=\"0.8\"/>\n";
    const Pt label = screen(centroid);
    os << "  <text class=\"label\" x=\"" << fmt(label.x) << "\" y=\""
       << fmt(label.y)
       << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">"
       << i << "</text>\n";
  }

  for (const auto& w : fan.walls) {
    for (const auto& r : w.extreme_rays()) line(os, {0, 0}, to_boundary(as_point(r)));
    for (const auto& l : w.lineality_basis()) {
      const Pt p = to_boundary(as_point(l));
      line(os, {-p.x, -p.y}, p);
    }
  }

  const Pt o = screen({0, 0});
  os << "  <circle class=\"origin\" cx=\"" << fmt(o.x) << "\" cy=\"" << fmt(o.y)
     << "\" r=\"4\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace gitfan::io
