#pragma once

// Static SVG renderings of 1D and 2D instances: shape outlines, ground-set
// dots, algorithm points as crosses, and optimal certificate points as
// circles.  Output is a pure function of the inputs (fixed-precision
// formatting, no timestamps), so identical runs produce identical bytes.
// Raw domain coordinates travel along as data- attributes, which keeps the
// files checkable by parsing instead of eyeballing.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "generators.hpp"
#include "geometry.hpp"

namespace onet {

namespace detail {

inline std::string fnum(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline std::string rawnum(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

struct SvgFrame {
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  double width = 800, height = 800, margin = 30;

  void grow(double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }

  double sx(double x) const {
    double span = std::max(xmax - xmin, 1e-12);
    return margin + (x - xmin) / span * (width - 2 * margin);
  }
  // svg y grows downward; domain y grows upward
  double sy(double y) const {
    double span = std::max(ymax - ymin, 1e-12);
    return height - margin - (y - ymin) / span * (height - 2 * margin);
  }
  double sw(double w) const {
    double span = std::max(xmax - xmin, 1e-12);
    return w / span * (width - 2 * margin);
  }
  double sh(double h) const {
    double span = std::max(ymax - ymin, 1e-12);
    return h / span * (height - 2 * margin);
  }
};

inline void frame_shape(SvgFrame& fr, const Shape& s) {
  if (const auto* iv = std::get_if<Interval>(&s)) {
    fr.grow(iv->lo, 0);
    fr.grow(iv->hi, 0);
  } else if (const auto* b = std::get_if<AxisBox>(&s)) {
    fr.grow(b->lo[0], b->dim() > 1 ? b->lo[1] : 0);
    fr.grow(b->hi[0], b->dim() > 1 ? b->hi[1] : 0);
  } else if (const auto* e = std::get_if<Ellipsoid>(&s)) {
    fr.grow(e->center[0] - e->axes[0], e->dim() > 1 ? e->center[1] - e->axes[1] : 0);
    fr.grow(e->center[0] + e->axes[0], e->dim() > 1 ? e->center[1] + e->axes[1] : 0);
  } else if (const auto* f = std::get_if<FatObject>(&s)) {
    double r = f->height;
    fr.grow(f->center[0] - r, f->center.size() > 1 ? f->center[1] - r : 0);
    fr.grow(f->center[0] + r, f->center.size() > 1 ? f->center[1] + r : 0);
  }
}

inline void emit_box_outline(std::string& out, const SvgFrame& fr, double lo0, double lo1,
                             double hi0, double hi1) {
  out += "<rect class=\"shape\" data-lo0=\"" + rawnum(lo0) + "\" data-lo1=\"" + rawnum(lo1) +
         "\" data-hi0=\"" + rawnum(hi0) + "\" data-hi1=\"" + rawnum(hi1) + "\" x=\"" +
         fnum(fr.sx(lo0)) + "\" y=\"" + fnum(fr.sy(hi1)) + "\" width=\"" +
         fnum(fr.sw(hi0 - lo0)) + "\" height=\"" + fnum(fr.sh(hi1 - lo1)) +
         "\" fill=\"none\" stroke=\"#4a6fa5\" stroke-width=\"1\"/>\n";
}

inline void emit_shape(std::string& out, const SvgFrame& fr, const Shape& s, double lane_y) {
  if (const auto* iv = std::get_if<Interval>(&s)) {
    out += "<line class=\"shape\" data-lo0=\"" + rawnum(iv->lo) + "\" data-hi0=\"" +
           rawnum(iv->hi) + "\" x1=\"" + fnum(fr.sx(iv->lo)) + "\" y1=\"" + fnum(lane_y) +
           "\" x2=\"" + fnum(fr.sx(iv->hi)) + "\" y2=\"" + fnum(lane_y) +
           "\" stroke=\"#4a6fa5\" stroke-width=\"2\"/>\n";
  } else if (const auto* b = std::get_if<AxisBox>(&s)) {
    emit_box_outline(out, fr, b->lo[0], b->lo[1], b->hi[0], b->hi[1]);
  } else if (const auto* e = std::get_if<Ellipsoid>(&s)) {
    out += "<ellipse class=\"shape\" data-cx=\"" + rawnum(e->center[0]) + "\" data-cy=\"" +
           rawnum(e->center[1]) + "\" data-rx=\"" + rawnum(e->axes[0]) + "\" data-ry=\"" +
           rawnum(e->axes[1]) + "\" cx=\"" + fnum(fr.sx(e->center[0])) + "\" cy=\"" +
           fnum(fr.sy(e->center[1])) + "\" rx=\"" + fnum(fr.sw(e->axes[0])) + "\" ry=\"" +
           fnum(fr.sh(e->axes[1])) + "\" fill=\"none\" stroke=\"#4a6fa5\" stroke-width=\"1\"/>\n";
  } else if (const auto* f = std::get_if<FatObject>(&s)) {
    if (f->kind == FatObject::Kind::l2_ball) {
      out += "<ellipse class=\"shape\" data-cx=\"" + rawnum(f->center[0]) + "\" data-cy=\"" +
             rawnum(f->center[1]) + "\" data-rx=\"" + rawnum(f->height) + "\" data-ry=\"" +
             rawnum(f->height) + "\" cx=\"" + fnum(fr.sx(f->center[0])) + "\" cy=\"" +
             fnum(fr.sy(f->center[1])) + "\" rx=\"" + fnum(fr.sw(f->height)) + "\" ry=\"" +
             fnum(fr.sh(f->height)) +
             "\" fill=\"none\" stroke=\"#4a6fa5\" stroke-width=\"1\"/>\n";
    } else {
      // axis_box stretches its first coordinate; the cube kinds use width
      double rx = f->kind == FatObject::Kind::axis_box ? f->height : f->width;
      double ry = f->width;
      emit_box_outline(out, fr, f->center[0] - rx, f->center[1] - ry, f->center[0] + rx,
                       f->center[1] + ry);
    }
  }
}

}  // namespace detail

// Render an instance plus final algorithm/optimal points.  1D instances put
// shapes on stacked lanes above the axis; 2D draws everything in place.
inline std::string svg_string(const Instance& inst, const std::vector<Point>& alg_points,
                              const std::vector<Point>& opt_points) {
  const std::size_t d = inst.spec.dim();
  if (d > 2) throw std::invalid_argument("svg_string: only 1D and 2D instances render");

  detail::SvgFrame fr;
  bool first = true;
  auto seed_frame = [&](double x, double y) {
    if (first) {
      fr.xmin = fr.xmax = x;
      fr.ymin = fr.ymax = y;
      first = false;
    } else {
      fr.grow(x, y);
    }
  };
  for (std::size_t i = 0; i < inst.ground.size(); ++i)
    seed_frame(inst.ground.coord(i, 0), d > 1 ? inst.ground.coord(i, 1) : 0.0);
  for (const Shape& s : inst.shapes) {
    if (first) seed_frame(0, 0);
    detail::frame_shape(fr, s);
  }
  for (const Point& p : alg_points) seed_frame(p[0], d > 1 ? p[1] : 0.0);
  for (const Point& p : opt_points) seed_frame(p[0], d > 1 ? p[1] : 0.0);
  if (first) seed_frame(0, 0);
  if (d == 1) fr.height = 400;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fnum(fr.width) +
         "\" height=\"" + detail::fnum(fr.height) + "\" viewBox=\"0 0 " +
         detail::fnum(fr.width) + " " + detail::fnum(fr.height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  const double base_y = fr.height - fr.margin;
  if (d == 1) {
    out += "<line x1=\"" + detail::fnum(fr.margin) + "\" y1=\"" + detail::fnum(base_y) +
           "\" x2=\"" + detail::fnum(fr.width - fr.margin) + "\" y2=\"" + detail::fnum(base_y) +
           "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    double lane = base_y - 16.0;
    for (const Shape& s : inst.shapes) {
      detail::emit_shape(out, fr, s, lane);
      lane -= 12.0;
      if (lane < fr.margin) lane = base_y - 16.0;
    }
  } else {
    for (const Shape& s : inst.shapes) detail::emit_shape(out, fr, s, 0.0);
  }

  for (std::size_t i = 0; i < inst.ground.size(); ++i) {
    double px = fr.sx(inst.ground.coord(i, 0));
    double py = d > 1 ? fr.sy(inst.ground.coord(i, 1)) : base_y;
    out += "<circle class=\"ground\" cx=\"" + detail::fnum(px) + "\" cy=\"" + detail::fnum(py) +
           "\" r=\"1.6\" fill=\"#999999\"/>\n";
  }

  for (const Point& p : alg_points) {
    double px = fr.sx(p[0]);
    double py = d > 1 ? fr.sy(p[1]) : base_y;
    out += "<g class=\"cross\" data-x=\"" + detail::rawnum(p[0]) + "\" data-y=\"" +
           detail::rawnum(d > 1 ? p[1] : 0.0) + "\">";
    out += "<line x1=\"" + detail::fnum(px - 5) + "\" y1=\"" + detail::fnum(py) + "\" x2=\"" +
           detail::fnum(px + 5) + "\" y2=\"" + detail::fnum(py) +
           "\" stroke=\"#c0392b\" stroke-width=\"2\"/>";
    out += "<line x1=\"" + detail::fnum(px) + "\" y1=\"" + detail::fnum(py - 5) + "\" x2=\"" +
           detail::fnum(px) + "\" y2=\"" + detail::fnum(py + 5) +
           "\" stroke=\"#c0392b\" stroke-width=\"2\"/>";
    out += "</g>\n";
  }

  for (const Point& p : opt_points) {
    double px = fr.sx(p[0]);
    double py = d > 1 ? fr.sy(p[1]) : base_y;
    out += "<circle class=\"opt\" data-x=\"" + detail::rawnum(p[0]) + "\" data-y=\"" +
           detail::rawnum(d > 1 ? p[1] : 0.0) + "\" cx=\"" + detail::fnum(px) + "\" cy=\"" +
           detail::fnum(py) + "\" r=\"7\" fill=\"none\" stroke=\"#27ae60\" stroke-width=\"2\"/>\n";
  }

  out += "</svg>\n";
  return out;
}

inline void render_svg(const Instance& inst, const std::vector<Point>& alg_points,
                       const std::vector<Point>& opt_points, const std::string& path) {
  std::string body = svg_string(inst, alg_points, opt_points);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("render_svg: cannot open '" + path + "'");
  f.write(body.data(), std::streamsize(body.size()));
}

}  // namespace onet
