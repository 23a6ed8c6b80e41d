#pragma once

// Seeded instance generators: ground sets, heavy-only range streams, piercing
// families under the size regime (sizes in [1, M], per-object aspect ratio at
// most C, centers in [0, 2M]^d), and two scripted adversaries.  Everything is
// a pure function of the InstanceSpec, so a spec file reproduces its instance
// bit for bit on any machine.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "geometry.hpp"
#include "json_codec.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace onet {

enum class Family { interval_net, rect_net2, box_net3, pierce_box, pierce_ellipsoid, pierce_fat };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::interval_net: return "interval_net";
    case Family::rect_net2: return "rect_net2";
    case Family::box_net3: return "box_net3";
    case Family::pierce_box: return "pierce_box";
    case Family::pierce_ellipsoid: return "pierce_ellipsoid";
    case Family::pierce_fat: return "pierce_fat";
  }
  throw std::logic_error("family_name: unknown family");
}

inline Family family_from(const std::string& s) {
  if (s == "interval_net") return Family::interval_net;
  if (s == "rect_net2") return Family::rect_net2;
  if (s == "box_net3") return Family::box_net3;
  if (s == "pierce_box") return Family::pierce_box;
  if (s == "pierce_ellipsoid") return Family::pierce_ellipsoid;
  if (s == "pierce_fat") return Family::pierce_fat;
  throw std::invalid_argument("family_from: unknown family '" + s + "'");
}

inline bool family_is_net(Family f) {
  return f == Family::interval_net || f == Family::rect_net2 || f == Family::box_net3;
}

inline std::size_t family_dim(Family f, std::size_t d) {
  switch (f) {
    case Family::interval_net: return 1;
    case Family::rect_net2: return 2;
    case Family::box_net3: return 3;
    default: return d;
  }
}

struct InstanceSpec {
  Family family = Family::interval_net;
  std::size_t d = 1;           // piercing families; net families fix their own
  std::size_t n = 256;         // ground-set size (net families only)
  std::size_t stream_len = 64; // shapes to emit
  Rational eps{1, 8};          // net families
  double M = 16.0;             // piercing families
  double alpha = 1.0;          // pierce_fat
  double C = 2.0;              // aspect-ratio cap
  std::uint64_t seed = 0;
  std::string ground_kind = "uniform";  // uniform | gaussian | grid
  std::string shape_kind = "random";    // random | nested | cluster
  std::size_t clusters = 3;             // cluster shape_kind

  std::size_t dim() const { return family_dim(family, d); }
};

inline void to_json(json& j, const InstanceSpec& s) {
  j = json{{"family", family_name(s.family)},
           {"d", s.d},
           {"n", s.n},
           {"stream_len", s.stream_len},
           {"eps", s.eps},
           {"M", s.M},
           {"alpha", s.alpha},
           {"C", s.C},
           {"seed", s.seed},
           {"ground_kind", s.ground_kind},
           {"shape_kind", s.shape_kind},
           {"clusters", s.clusters}};
}

inline void from_json(const json& j, InstanceSpec& s) {
  s.family = family_from(j.at("family").get<std::string>());
  j.at("d").get_to(s.d);
  j.at("n").get_to(s.n);
  j.at("stream_len").get_to(s.stream_len);
  j.at("eps").get_to(s.eps);
  j.at("M").get_to(s.M);
  j.at("alpha").get_to(s.alpha);
  j.at("C").get_to(s.C);
  j.at("seed").get_to(s.seed);
  j.at("ground_kind").get_to(s.ground_kind);
  j.at("shape_kind").get_to(s.shape_kind);
  j.at("clusters").get_to(s.clusters);
}

inline GroundSet gen_ground_set(const InstanceSpec& spec) {
  const std::size_t d = spec.dim();
  const std::size_t n = spec.n;
  if (n < 1) throw std::invalid_argument("gen_ground_set: n must be >= 1");
  Rng rng(mix_seed(spec.seed, 0x6E0D5E7ull));
  std::vector<Point> pts;
  pts.reserve(n);

  if (spec.ground_kind == "uniform") {
    for (std::size_t i = 0; i < n; ++i) {
      Point p(d);
      for (auto& v : p) v = rng.next_double();
      pts.push_back(std::move(p));
    }
  } else if (spec.ground_kind == "gaussian") {
    const std::size_t blobs = 3;
    std::vector<Point> centers;
    for (std::size_t b = 0; b < blobs; ++b) {
      Point c(d);
      for (auto& v : c) v = 0.15 + 0.7 * rng.next_double();
      centers.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Point& c = centers[i % blobs];
      Point p(d);
      for (std::size_t k = 0; k < d; ++k)
        p[k] = std::clamp(c[k] + 0.08 * rng.gaussian(), 0.0, 1.0);
      pts.push_back(std::move(p));
    }
  } else if (spec.ground_kind == "grid") {
    // d = 1 keeps integer coordinates 0..n-1 (the halving adversary counts
    // lattice points); d >= 2 scales the grid into the unit cube so the
    // heavy-range samplers work unchanged
    std::size_t side = n;
    if (d >= 2) {
      side = std::size_t(std::llround(std::pow(double(n), 1.0 / double(d))));
      std::size_t total = 1;
      for (std::size_t k = 0; k < d; ++k) total *= side;
      if (total != n)
        throw std::invalid_argument("gen_ground_set: grid needs n to be a perfect d-th power");
    }
    std::vector<std::size_t> idx(d, 0);
    for (std::size_t i = 0; i < n; ++i) {
      Point p(d);
      for (std::size_t k = 0; k < d; ++k)
        p[k] = (d == 1 || side <= 1) ? double(idx[k]) : double(idx[k]) / double(side - 1);
      pts.push_back(std::move(p));
      for (std::size_t k = d; k-- > 0;) {
        if (++idx[k] < side) break;
        idx[k] = 0;
      }
    }
  } else {
    throw std::invalid_argument("gen_ground_set: unknown ground kind '" + spec.ground_kind +
                                "'");
  }
  return GroundSet::from_points(pts, d);
}

// Halving adversary for the 1D net: emit the whole integer range 0..n-1,
// then repeatedly the right half, which dodges the median points any
// run of the interval algorithm is forced to place.  Every emission is
// heavy, the instances nest (so one point stabs them all), and the stream
// length is ceil(log2(1/eps)) + 1.
inline std::vector<Interval> nested_intervals(std::size_t n, const Rational& eps) {
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("nested_intervals: n must be a power of two");
  if (Rational(1, 2) < eps)
    throw std::invalid_argument("nested_intervals: eps must be at most 1/2");
  std::vector<Interval> out;
  std::size_t lo = 0, width = n;
  while (meets_threshold(std::int64_t(width), eps, std::int64_t(n))) {
    out.push_back({double(lo), double(lo + width - 1)});
    lo += width / 2;
    width /= 2;
    if (width == 0) break;
  }
  return out;
}

// Concentric shrinking hypercubes with sides M, M/2, ..., down to 1, each
// shifted just enough that it misses the centers of all earlier ones: a
// center-piercing run places one point per cube while a single point in the
// innermost cube pierces every one.
inline std::vector<AxisBox> nested_cubes(std::size_t d, double M) {
  if (!(M >= 1.0)) throw std::invalid_argument("nested_cubes: M must be >= 1");
  const std::int64_t L = std::int64_t(std::floor(std::log2(M) + 1e-9)) + 1;
  const double eta = 1.0 / (2.0 * double(L));
  std::vector<AxisBox> out;
  for (std::int64_t j = 1; j <= L; ++j) {
    double side = M / std::ldexp(1.0, int(j - 1));
    double mu = double(L - j) * eta;
    Point lo(d, M - side - mu), hi(d, M - mu);
    out.push_back(make_box(lo, hi));
  }
  return out;
}

namespace detail {

inline AxisBox regime_box(std::size_t d, double M, double C, Rng& rng) {
  double lo_side = 1.0 + (M / C - 1.0) * rng.next_double();
  Point lo(d), hi(d);
  for (std::size_t k = 0; k < d; ++k) {
    double side = lo_side * (1.0 + (C - 1.0) * rng.next_double());
    double center = 2.0 * M * rng.next_double();
    lo[k] = center - side / 2.0;
    hi[k] = center + side / 2.0;
  }
  return make_box(lo, hi);
}

inline Ellipsoid regime_ellipsoid(std::size_t d, double M, double C, Rng& rng) {
  double lo_axis = 1.0 + (M / C - 1.0) * rng.next_double();
  Ellipsoid e;
  e.center.resize(d);
  e.axes.resize(d);
  for (std::size_t k = 0; k < d; ++k) {
    e.axes[k] = lo_axis * (1.0 + (C - 1.0) * rng.next_double());
    e.center[k] = 2.0 * M * rng.next_double();
  }
  return e;
}

// snap to multiples of 2^-20 so sums and differences of generated fat-object
// coordinates stay exact, keeping the center-distance containment test and
// the equivalent corner-box test in exact agreement on shared boundaries
inline double dyadic_snap(double v) { return std::ldexp(std::round(std::ldexp(v, 20)), -20); }
inline double dyadic_snap_down(double v) { return std::ldexp(std::floor(std::ldexp(v, 20)), -20); }

inline FatObject regime_fat(std::size_t d, double M, double alpha, Rng& rng) {
  // alpha = 1 gives hypercubes; anything lower is carried by the stretched
  // box.  The long half-side snaps downward, so the emitted object is never
  // less fat than requested.
  double w_hi = std::max(1.0 + 1e-9, alpha * M);
  double width = dyadic_snap(1.0 + (w_hi - 1.0) * rng.next_double());
  Point c(d);
  for (auto& v : c) v = dyadic_snap(2.0 * M * rng.next_double());
  if (alpha >= 1.0) return FatObject{FatObject::Kind::hypercube, c, width, width};
  return FatObject{FatObject::Kind::axis_box, c, width, dyadic_snap_down(width / alpha)};
}

// heavy-only rejection: try random boxes until one clears the threshold,
// then fall back to the full unit box (always heavy) if luck runs out
inline AxisBox heavy_box(const GroundSet& X, const Rational& eps, Rng& rng) {
  const std::size_t d = X.dim();
  const double wmin = 0.25;
  for (int attempt = 0; attempt < 2000; ++attempt) {
    Point lo(d), hi(d);
    for (std::size_t k = 0; k < d; ++k) {
      double w = wmin + (1.0 - wmin) * rng.next_double();
      lo[k] = rng.next_double() * (1.0 - w);
      hi[k] = lo[k] + w;
    }
    AxisBox b = make_box(lo, hi);
    if (is_heavy(Shape{b}, X, eps)) return b;
  }
  return make_box(Point(d, 0.0), Point(d, 1.0));
}

inline Interval heavy_interval(const GroundSet& X, const Rational& eps, Rng& rng) {
  std::vector<double> xs = X.column(0);
  std::sort(xs.begin(), xs.end());
  double span = xs.back() - xs.front();
  for (int attempt = 0; attempt < 2000; ++attempt) {
    double w = (0.25 + 0.75 * rng.next_double()) * span;
    double lo = xs.front() + rng.next_double() * (span - w);
    Interval iv{lo, lo + w};
    if (is_heavy(Shape{iv}, X, eps)) return iv;
  }
  return {xs.front(), xs.back()};
}

// pairwise-distant clusters of mutually overlapping ellipsoids: every member
// contains every same-cluster member's center (offsets stay below 0.4/sqrt(d)
// per coordinate while all semi-axes are >= 1), so the optimum is exactly one
// point per cluster and piercing_bounds collapses to it
inline std::vector<Shape> cluster_ellipsoids(const InstanceSpec& spec, Rng& rng) {
  const std::size_t d = spec.dim();
  const std::size_t k = std::max<std::size_t>(1, spec.clusters);
  const double off = 0.4 / std::sqrt(double(d));
  std::vector<Shape> out;
  for (std::size_t i = 0; i < spec.stream_len; ++i) {
    std::size_t cluster = i % k;
    Ellipsoid e = regime_ellipsoid(d, spec.M, spec.C, rng);
    for (std::size_t m = 0; m < d; ++m)
      e.center[m] = 8.0 * spec.M * double(cluster + 1) + off * (2.0 * rng.next_double() - 1.0);
    out.push_back(e);
  }
  return out;
}

}  // namespace detail

// Shape stream for a spec.  Net families need the ground set to guarantee
// heavy-only emissions; piercing families ignore it.
inline std::vector<Shape> gen_shapes(const InstanceSpec& spec, const GroundSet* ground) {
  Rng rng(mix_seed(spec.seed, 0x5AAFE5ull));
  const std::size_t d = spec.dim();
  std::vector<Shape> out;

  switch (spec.family) {
    case Family::interval_net: {
      if (!ground) throw std::invalid_argument("gen_shapes: net family needs a ground set");
      if (spec.shape_kind == "nested") {
        for (const Interval& iv : nested_intervals(spec.n, spec.eps)) out.push_back(iv);
      } else {
        for (std::size_t i = 0; i < spec.stream_len; ++i)
          out.push_back(detail::heavy_interval(*ground, spec.eps, rng));
      }
      return out;
    }
    case Family::rect_net2:
    case Family::box_net3: {
      if (!ground) throw std::invalid_argument("gen_shapes: net family needs a ground set");
      for (std::size_t i = 0; i < spec.stream_len; ++i)
        out.push_back(detail::heavy_box(*ground, spec.eps, rng));
      return out;
    }
    case Family::pierce_box: {
      if (spec.shape_kind == "nested") {
        for (const AxisBox& b : nested_cubes(d, spec.M)) out.push_back(b);
      } else {
        for (std::size_t i = 0; i < spec.stream_len; ++i)
          out.push_back(detail::regime_box(d, spec.M, spec.C, rng));
      }
      return out;
    }
    case Family::pierce_ellipsoid: {
      if (spec.shape_kind == "cluster") return detail::cluster_ellipsoids(spec, rng);
      for (std::size_t i = 0; i < spec.stream_len; ++i)
        out.push_back(detail::regime_ellipsoid(d, spec.M, spec.C, rng));
      return out;
    }
    case Family::pierce_fat: {
      for (std::size_t i = 0; i < spec.stream_len; ++i)
        out.push_back(detail::regime_fat(d, spec.M, spec.alpha, rng));
      return out;
    }
  }
  throw std::logic_error("gen_shapes: unknown family");
}

struct Instance {
  InstanceSpec spec;
  GroundSet ground;  // empty for piercing families
  std::vector<Shape> shapes;
};

inline Instance materialize(const InstanceSpec& spec) {
  Instance inst;
  inst.spec = spec;
  if (family_is_net(spec.family)) {
    inst.ground = gen_ground_set(spec);
    inst.shapes = gen_shapes(spec, &inst.ground);
  } else {
    inst.shapes = gen_shapes(spec, nullptr);
  }
  return inst;
}

inline json instance_to_json(const Instance& inst) {
  json shapes = json::array();
  for (const Shape& s : inst.shapes) shapes.push_back(shape_to_json(s));
  return json{{"spec", inst.spec},
              {"ground", ground_set_to_json(inst.ground)},
              {"shapes", shapes}};
}

inline Instance instance_from_json(const json& j) {
  Instance inst;
  j.at("spec").get_to(inst.spec);
  inst.ground = ground_set_from_json(j.at("ground"));
  for (const json& s : j.at("shapes")) inst.shapes.push_back(shape_from_json(s));
  return inst;
}

}  // namespace onet
