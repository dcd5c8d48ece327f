#ifndef BRAIDCOUNT_SVG_HPP
#define BRAIDCOUNT_SVG_HPP

// SVG 1.1 drawing of a generalised curve diagram: vertical lines L_i,
// straight segments for arcs between two lines, half-ellipses for boxes,
// hollow dots for punctures.

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "braidcount/coords.hpp"
#include "braidcount/diagram.hpp"

namespace braidcount {

struct SvgOptions {
  bool closed = false;
  double zone_width = 80.0;
  double unit = 16.0;  // vertical distance between consecutive points
  double margin = 24.0;
  double max_extent = 32768.0;
};

namespace detail {

inline std::string fmt_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace detail

inline std::string render_svg(const VirtualCoordinates& c, const SvgOptions& opt = {}) {
  using detail::fmt_num;
  const ArcGraph g = build_arc_graph(c, opt.closed);
  const int n = c.n();
  int smax = 0;
  for (int v : c.s()) smax = std::max(smax, v);
  const double width = 2 * opt.margin + n * opt.zone_width;
  const double height = 2 * opt.margin + (2 * smax + 4) * opt.unit;
  if (width > opt.max_extent || height > opt.max_extent) {
    throw std::length_error("diagram needs a " + fmt_num(width) + "x" + fmt_num(height) +
                            " canvas, above the limit of " + fmt_num(opt.max_extent));
  }
  const double mid = opt.margin + (smax + 2) * opt.unit;
  auto x_of = [&](int line) { return opt.margin + line * opt.zone_width; };
  auto y_of = [&](NodeRef r) {
    if (r.index == 2 * c.s(r.line) + 2) return mid - (smax + 1.5) * opt.unit;  // closing point
    return mid - (r.index - c.s(r.line) - 1) * opt.unit;
  };

  // widest box per zone, to scale the half-ellipses inside the zone
  std::vector<double> widest(static_cast<std::size_t>(n + 1), 1.0);
  for (const Arc& arc : g.arcs) {
    const NodeRef u = g.nodes[static_cast<std::size_t>(arc.u)];
    const NodeRef v = g.nodes[static_cast<std::size_t>(arc.v)];
    if (arc.rule == ArcRule::left_box || arc.rule == ArcRule::right_box) {
      auto& w = widest[static_cast<std::size_t>(arc.zone)];
      w = std::max(w, static_cast<double>(std::abs(u.index - v.index)));
    }
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt_num(width) +
         "\" height=\"" + fmt_num(height) + "\" viewBox=\"0 0 " + fmt_num(width) + " " +
         fmt_num(height) + "\">\n";
  out += "<title>" + c.to_string() + "</title>\n";
  out += "<g stroke=\"#999\" stroke-width=\"1\">\n";
  for (int i = 1; i <= n - 1; ++i) {
    out += "<line class=\"lamination\" x1=\"" + fmt_num(x_of(i)) + "\" y1=\"" +
           fmt_num(opt.margin / 2) + "\" x2=\"" + fmt_num(x_of(i)) + "\" y2=\"" +
           fmt_num(height - opt.margin / 2) + "\"/>\n";
  }
  out += "</g>\n<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";

  std::vector<std::pair<double, double>> arc_mid(g.arcs.size());
  for (std::size_t e = 0; e < g.arcs.size(); ++e) {
    const Arc& arc = g.arcs[e];
    const NodeRef u = g.nodes[static_cast<std::size_t>(arc.u)];
    const NodeRef v = g.nodes[static_cast<std::size_t>(arc.v)];
    const double x1 = x_of(u.line), y1 = y_of(u), x2 = x_of(v.line), y2 = y_of(v);
    const std::string cls = std::string("class=\"") + to_string(arc.rule) + "\" ";
    if (arc.rule == ArcRule::left_box || arc.rule == ArcRule::right_box) {
      const double ry = std::abs(y1 - y2) / 2;
      const double rx = 0.45 * opt.zone_width * std::abs(u.index - v.index) /
                        widest[static_cast<std::size_t>(arc.zone)];
      const bool bulge_right = arc.rule == ArcRule::left_box;
      const double top = std::min(y1, y2), bottom = std::max(y1, y2);
      out += "<path " + cls + "d=\"M " + fmt_num(x1) + " " + fmt_num(top) + " A " + fmt_num(rx) +
             " " + fmt_num(ry) + " 0 0 " + (bulge_right ? "1" : "0") + " " + fmt_num(x1) + " " +
             fmt_num(bottom) + "\"/>\n";
      arc_mid[e] = {x1 + (bulge_right ? rx : -rx), (y1 + y2) / 2};
    } else {
      out += "<line " + cls + "x1=\"" + fmt_num(x1) + "\" y1=\"" + fmt_num(y1) + "\" x2=\"" +
             fmt_num(x2) + "\" y2=\"" + fmt_num(y2) + "\"/>\n";
      arc_mid[e] = {(x1 + x2) / 2, (y1 + y2) / 2};
    }
  }
  out += "</g>\n<g fill=\"black\">\n";
  for (int line : {0, n}) {
    out += "<circle class=\"endpoint\" cx=\"" + fmt_num(x_of(line)) + "\" cy=\"" + fmt_num(mid) +
           "\" r=\"4\"/>\n";
  }
  out += "</g>\n<g fill=\"white\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (int arc : g.punctures) {
    const auto [px, py] = arc_mid[static_cast<std::size_t>(arc)];
    out += "<circle class=\"puncture\" cx=\"" + fmt_num(px) + "\" cy=\"" + fmt_num(py) +
           "\" r=\"3.5\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace braidcount

#endif  // BRAIDCOUNT_SVG_HPP
