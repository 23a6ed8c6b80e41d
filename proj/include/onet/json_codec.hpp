#pragma once

// Canonical JSON encodings for everything that crosses a file boundary:
//   Point     -> [x, y, ...]
//   Interval  -> {"lo": a, "hi": b}
//   AxisBox   -> {"lo": [...], "hi": [...]}
//   Ellipsoid -> {"center": [...], "axes": [...]}
//   FatObject -> {"kind": "...", "center": [...], "width": w, "height": h}
// Shapes round-trip through these; instance and report files build on them.

#include <string>

#include <json.hpp>

#include "geometry.hpp"
#include "rational.hpp"

namespace onet {

using nlohmann::json;

inline void to_json(json& j, const Interval& iv) { j = json{{"lo", iv.lo}, {"hi", iv.hi}}; }
inline void from_json(const json& j, Interval& iv) {
  iv.lo = j.at("lo").get<double>();
  iv.hi = j.at("hi").get<double>();
}

inline void to_json(json& j, const AxisBox& b) { j = json{{"lo", b.lo}, {"hi", b.hi}}; }
inline void from_json(const json& j, AxisBox& b) {
  b.lo = j.at("lo").get<Point>();
  b.hi = j.at("hi").get<Point>();
}

inline void to_json(json& j, const Ellipsoid& e) {
  j = json{{"center", e.center}, {"axes", e.axes}};
}
inline void from_json(const json& j, Ellipsoid& e) {
  e.center = j.at("center").get<Point>();
  e.axes = j.at("axes").get<Point>();
}

inline std::string fat_kind_name(FatObject::Kind k) {
  switch (k) {
    case FatObject::Kind::hypercube: return "hypercube";
    case FatObject::Kind::linf_ball: return "linf_ball";
    case FatObject::Kind::l2_ball: return "l2_ball";
    case FatObject::Kind::axis_box: return "axis_box";
  }
  return "hypercube";
}

inline FatObject::Kind fat_kind_from(const std::string& s) {
  if (s == "hypercube") return FatObject::Kind::hypercube;
  if (s == "linf_ball") return FatObject::Kind::linf_ball;
  if (s == "l2_ball") return FatObject::Kind::l2_ball;
  if (s == "axis_box") return FatObject::Kind::axis_box;
  throw std::invalid_argument("unknown fat object kind: " + s);
}

inline void to_json(json& j, const FatObject& f) {
  j = json{{"kind", fat_kind_name(f.kind)},
           {"center", f.center},
           {"width", f.width},
           {"height", f.height}};
}
inline void from_json(const json& j, FatObject& f) {
  f.kind = fat_kind_from(j.at("kind").get<std::string>());
  f.center = j.at("center").get<Point>();
  f.width = j.at("width").get<double>();
  f.height = j.at("height").get<double>();
}

inline json shape_to_json(const Shape& s) {
  json j;
  if (const Interval* iv = std::get_if<Interval>(&s)) {
    j = *iv;
    j["shape"] = "interval";
  } else if (const AxisBox* b = std::get_if<AxisBox>(&s)) {
    j = *b;
    j["shape"] = "box";
  } else if (const Ellipsoid* e = std::get_if<Ellipsoid>(&s)) {
    j = *e;
    j["shape"] = "ellipsoid";
  } else {
    j = std::get<FatObject>(s);
    j["shape"] = "fat";
  }
  return j;
}

inline Shape shape_from_json(const json& j) {
  const std::string t = j.at("shape").get<std::string>();
  if (t == "interval") return j.get<Interval>();
  if (t == "box") return j.get<AxisBox>();
  if (t == "ellipsoid") return j.get<Ellipsoid>();
  if (t == "fat") return j.get<FatObject>();
  throw std::invalid_argument("unknown shape tag: " + t);
}

inline void to_json(json& j, const Rational& r) { j = json{{"num", r.num}, {"den", r.den}}; }
inline void from_json(const json& j, Rational& r) {
  r = Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

inline json ground_set_to_json(const GroundSet& X) {
  json pts = json::array();
  for (std::size_t i = 0; i < X.size(); ++i) pts.push_back(X.point(i));
  return json{{"dim", X.dim()}, {"points", pts}};
}

inline GroundSet ground_set_from_json(const json& j) {
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<Point> pts = j.at("points").get<std::vector<Point>>();
  return GroundSet::from_points(pts, dim);
}

}  // namespace onet
