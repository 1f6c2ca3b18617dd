#include "aqcross/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace aqcross {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

const char* side_color(int side) { return side == +1 ? "#1f77b4" : "#d62728"; }

void svg_header(std::ostream& os, double w, double h) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w)
     << "\" height=\"" << num(h) << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h)
     << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace

void write_upsilon_svg(std::ostream& os, const ArcDiagram& d) {
  const int sz = d.spine_size();
  const double dx = 42.0, margin = 48.0;
  const double ry_max = std::min((sz - 1) * 0.5, 8.5) * dx;
  const double axis_y = 30.0 + ry_max;
  const double width = margin * 2 + dx * (sz - 1);
  const double height = axis_y * 2;

  svg_header(os, width, height);
  os << "<line x1=\"" << num(margin - 20) << "\" y1=\"" << num(axis_y) << "\" x2=\""
     << num(width - margin + 20) << "\" y2=\"" << num(axis_y)
     << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";

  auto x_of = [&](int i) { return margin + dx * (i - 1); };
  for (const Arc& a : d.arcs()) {
    const double x1 = x_of(a.lo), x2 = x_of(a.hi);
    const double r = (x2 - x1) / 2.0;
    const double ry = std::min(r, ry_max);  // flatten the very wide arcs
    // sweep up for side +1, down for side -1
    const int sweep = a.side == +1 ? 1 : 0;
    os << "<path d=\"M " << num(x1) << ' ' << num(axis_y) << " A " << num(r) << ' '
       << num(ry) << " 0 0 " << sweep << ' ' << num(x2) << ' ' << num(axis_y)
       << "\" fill=\"none\" stroke=\"" << side_color(a.side)
       << "\" stroke-width=\"1\"/>\n";
  }
  for (int i = 1; i <= sz; ++i) {
    const double x = x_of(i);
    os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(axis_y)
       << "\" r=\"2.5\" fill=\"black\"/>\n";
    os << "<text x=\"" << num(x) << "\" y=\"" << num(axis_y + 16)
       << "\" font-size=\"10\" text-anchor=\"middle\">" << d.spine_label(i)
       << "</text>\n";
  }
  os << "</svg>\n";
}

void write_black_svg(std::ostream& os, const BlackLayout& layout) {
  const int sz = 1 << (layout.n() - 3);
  const double dy = std::max(10.0, 640.0 / sz);
  const double col_h = dy * (sz - 1);
  const double gap = std::max(140.0, col_h * 0.28);
  const double margin = gap * 0.45 + 34.0;  // room for the outermost bulges
  const double width = margin * 2 + 3 * gap;
  const double height = margin * 2 + 2 * col_h + gap;

  svg_header(os, width, height);

  auto col_x = [&](int x) {
    // slots -2,-1,+1,+2 -> 0..3
    const int slot = x < 0 ? x + 2 : x + 1;
    return margin + gap * slot;
  };
  // vertex position: height rank 1 (outermost) sits farthest from the middle
  auto vertex_y = [&](const Column& c, int height_rank) {
    const double offset = dy * (height_rank - 1);
    return c.y_sign > 0 ? margin + offset : height - margin - offset;
  };

  const CanonicalNames& names = layout.names();
  for (const Column& c : layout.columns()) {
    const double x = col_x(c.x);
    const double partner_dir = (c.x == -2 || c.x == 1) ? +1.0 : -1.0;
    // column arcs; the below-side arcs face the partner column
    for (const Arc& a : c.diagram.arcs()) {
      const int ja = c.reversed ? sz + 1 - a.hi : a.lo;
      const int jb = c.reversed ? sz + 1 - a.lo : a.hi;
      const double y1 = vertex_y(c, std::min(ja, jb));
      const double y2 = vertex_y(c, std::max(ja, jb));
      const double span = std::abs(y2 - y1);
      const double bulge = std::min(gap * 0.42, span * 0.5);
      const double dir = (a.side == -1) ? partner_dir : -partner_dir;
      const int sweep = dir > 0 ? 1 : 0;
      os << "<path d=\"M " << num(x) << ' ' << num(y1) << " A " << num(bulge) << ' '
         << num(span / 2) << " 0 0 " << (c.y_sign > 0 ? sweep : 1 - sweep) << ' '
         << num(x) << ' ' << num(y2) << "\" fill=\"none\" stroke=\"#444444\" "
         << "stroke-width=\"0.8\"/>\n";
    }
    for (int j = 1; j <= sz; ++j) {
      const double y = vertex_y(c, j);
      os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y)
         << "\" r=\"1.8\" fill=\"black\"/>\n";
      if (sz <= 64) {
        const double tx = x + (partner_dir > 0 ? -26 : 10);
        os << "<text x=\"" << num(tx) << "\" y=\"" << num(y + 3)
           << "\" font-size=\"8\">" << names.at(c.part, j) << "</text>\n";
      }
    }
  }

  for (int i = 1; i <= 4; ++i) {
    const Column& cu = layout.column({'U', i});
    const Column& cv = layout.column({'V', i});
    for (const StraightEdge& e : layout.straight_edges(i)) {
      os << "<line x1=\"" << num(col_x(cu.x)) << "\" y1=\""
         << num(vertex_y(cu, e.u_index)) << "\" x2=\"" << num(col_x(cv.x))
         << "\" y2=\"" << num(vertex_y(cv, e.v_index))
         << "\" stroke=\"#777777\" stroke-width=\"0.8\"/>\n";
    }
  }
  os << "</svg>\n";
}

}  // namespace aqcross
