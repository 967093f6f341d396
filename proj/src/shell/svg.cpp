#include "packcert/shell/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <map>

namespace packcert::shell {

namespace {

const char* const kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                                "#b07aa1", "#edc948", "#76b7b2", "#9c755f"};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  return s == "-0.000000" ? "0.000000" : s;
}

}  // namespace

std::string render_svg(const packing::PeriodicPacking& p, const SvgOptions& options) {
  if (options.rows <= 0 || options.cols <= 0) {
    throw std::invalid_argument("tile counts must be positive");
  }
  const auto env = p.bindings().environment(24);
  const long bits = 64;
  auto value = [&](const exactnum::Expression& e) {
    return exactnum::to_double(exactnum::evaluate(e, env, bits).midpoint());
  };
  struct Circle {
    double x, y, r;
    std::string fill;
  };
  std::map<std::string, std::string, std::less<>> fills;
  for (std::size_t i = 0; i < p.radius_classes().size(); ++i) {
    fills[p.radius_classes()[i].name] = kPalette[i % std::size(kPalette)];
  }
  const double s = options.scale;

  std::vector<Circle> circles;
  std::vector<std::array<double, 4>> segments;
  double min_x = std::numeric_limits<double>::max(), min_y = min_x;
  double max_x = -min_x, max_y = -min_x;
  for (int i = 0; i < options.rows; ++i) {
    for (int j = 0; j < options.cols; ++j) {
      packing::Offset tile{j, i};
      for (const auto& d : p.discs()) {
        Circle c{value(p.center_x(d.id, tile)) * s, -value(p.center_y(d.id, tile)) * s,
                 value(p.radius(d.id)) * s, fills.at(d.radius)};
        min_x = std::min(min_x, c.x - c.r);
        max_x = std::max(max_x, c.x + c.r);
        min_y = std::min(min_y, c.y - c.r);
        max_y = std::max(max_y, c.y + c.r);
        circles.push_back(c);
      }
      for (const auto& c : options.contacts) {
        segments.push_back({value(p.center_x(c.a, tile)) * s, -value(p.center_y(c.a, tile)) * s,
                            value(p.center_x(c.b, tile + c.offset)) * s,
                            -value(p.center_y(c.b, tile + c.offset)) * s});
      }
    }
  }
  const double t1x = value(p.lattice().t1x) * s, t1y = -value(p.lattice().t1y) * s;
  const double t2x = value(p.lattice().t2x) * s, t2y = -value(p.lattice().t2y) * s;
  const double cell[4][2] = {{0, 0}, {t1x, t1y}, {t1x + t2x, t1y + t2y}, {t2x, t2y}};
  for (const auto& v : cell) {
    min_x = std::min(min_x, v[0]);
    max_x = std::max(max_x, v[0]);
    min_y = std::min(min_y, v[1]);
    max_y = std::max(max_y, v[1]);
  }
  const double pad = 0.05 * std::max(max_x - min_x, max_y - min_y);
  min_x -= pad;
  min_y -= pad;
  max_x += pad;
  max_y += pad;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(min_x) + " " + fmt(min_y) +
         " " + fmt(max_x - min_x) + " " + fmt(max_y - min_y) + "\">\n";
  out += "<g stroke=\"#222222\" stroke-width=\"" + fmt(0.01 * s) + "\">\n";
  for (const auto& c : circles) {
    out += "<circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) + "\" r=\"" + fmt(c.r) +
           "\" fill=\"" + c.fill + "\"/>\n";
  }
  out += "</g>\n";
  out += "<polygon fill=\"none\" stroke=\"#000000\" stroke-dasharray=\"" + fmt(0.05 * s) +
         "\" stroke-width=\"" + fmt(0.015 * s) + "\" points=\"";
  for (int k = 0; k < 4; ++k) {
    out += (k ? " " : "") + fmt(cell[k][0]) + "," + fmt(cell[k][1]);
  }
  out += "\"/>\n";
  if (!segments.empty()) {
    out += "<g stroke=\"#d62728\" stroke-width=\"" + fmt(0.02 * s) + "\">\n";
    for (const auto& g : segments) {
      out += "<line x1=\"" + fmt(g[0]) + "\" y1=\"" + fmt(g[1]) + "\" x2=\"" + fmt(g[2]) +
             "\" y2=\"" + fmt(g[3]) + "\"/>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace packcert::shell
