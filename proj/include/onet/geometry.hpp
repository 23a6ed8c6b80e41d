#pragma once

// Shared geometric vocabulary: points, ranges (intervals / boxes /
// ellipsoids / fat objects), ground sets, containment and heaviness.
// Containment is closed everywhere; the only open rectangles in the code
// base are the maximal unhit rectangles inside rect_net, which carry their
// own semantics.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "rational.hpp"

namespace onet {

using Point = std::vector<double>;

inline void require_dim(std::size_t a, std::size_t b, const char* who) {
  if (a != b) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

inline double linf_dist(const Point& a, const Point& b) {
  require_dim(a.size(), b.size(), "linf_dist");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

inline double l2_dist(const Point& a, const Point& b) {
  require_dim(a.size(), b.size(), "l2_dist");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

struct Interval {
  double lo = 0.0, hi = 0.0;  // invariant lo <= hi
  bool contains(double x) const { return lo <= x && x <= hi; }
};

struct AxisBox {
  Point lo, hi;  // lo[i] <= hi[i] per dimension
  std::size_t dim() const { return lo.size(); }
  bool contains(const Point& p) const {
    require_dim(p.size(), lo.size(), "AxisBox::contains");
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] < lo[i] || p[i] > hi[i]) return false;
    return true;
  }
  double side(std::size_t i) const { return hi[i] - lo[i]; }
  Point center() const {
    Point c(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) c[i] = 0.5 * (lo[i] + hi[i]);
    return c;
  }
};

inline AxisBox make_box(Point lo, Point hi) {
  require_dim(lo.size(), hi.size(), "make_box");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (!(lo[i] <= hi[i])) throw std::invalid_argument("make_box: lo > hi");
  return AxisBox{std::move(lo), std::move(hi)};
}

// axis-aligned ellipsoid: sum((p_i-c_i)^2 / a_i^2) <= 1
struct Ellipsoid {
  Point center;
  Point axes;  // semi-axes, all > 0
  std::size_t dim() const { return center.size(); }
  double quad(const Point& p) const {
    require_dim(p.size(), center.size(), "Ellipsoid::quad");
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      double d = (p[i] - center[i]) / axes[i];
      s += d * d;
    }
    return s;
  }
  bool contains(const Point& p) const { return quad(p) <= 1.0; }
};

// Fat object: convex shape classified by two L_inf radii measured from its
// center: width = min distance center->boundary, height = max.  Fatness
// alpha = width/height.  The concrete shapes we generate:
//   hypercube  side 2*width               (width == height)
//   linf_ball  radius width               (same shape, kept as its own tag)
//   l2_ball    L2 radius height           (width == height/sqrt(d))
//   axis_box   half-side height in dim 0, width in dims 1..d-1
// axis_box is the canonical carrier for alpha < 1; the {kind,center,width,
// height} encoding does not determine all sides for d >= 3, so this fixed
// layout is the one shape those four fields mean.
struct FatObject {
  enum class Kind { hypercube, linf_ball, l2_ball, axis_box };
  Kind kind = Kind::hypercube;
  Point center;
  double width = 1.0;   // min center->boundary distance (L_inf)
  double height = 1.0;  // max center->boundary distance (L_inf)

  std::size_t dim() const { return center.size(); }

  bool contains(const Point& p) const {
    require_dim(p.size(), center.size(), "FatObject::contains");
    switch (kind) {
      case Kind::hypercube:
      case Kind::linf_ball:
        return linf_dist(p, center) <= width;
      case Kind::l2_ball:
        return l2_dist(p, center) <= height;
      case Kind::axis_box: {
        for (std::size_t i = 0; i < p.size(); ++i) {
          double half = (i == 0) ? height : width;
          if (std::fabs(p[i] - center[i]) > half) return false;
        }
        return true;
      }
    }
    return false;
  }

  double alpha() const { return width / height; }
};

using Shape = std::variant<Interval, AxisBox, Ellipsoid, FatObject>;

inline std::size_t shape_dim(const Shape& s) {
  struct V {
    std::size_t operator()(const Interval&) const { return 1; }
    std::size_t operator()(const AxisBox& b) const { return b.dim(); }
    std::size_t operator()(const Ellipsoid& e) const { return e.dim(); }
    std::size_t operator()(const FatObject& f) const { return f.dim(); }
  };
  return std::visit(V{}, s);
}

inline bool contains(const Shape& s, const Point& p) {
  struct V {
    const Point& p;
    bool operator()(const Interval& iv) const {
      require_dim(p.size(), 1, "contains(Interval)");
      return iv.contains(p[0]);
    }
    bool operator()(const AxisBox& b) const { return b.contains(p); }
    bool operator()(const Ellipsoid& e) const { return e.contains(p); }
    bool operator()(const FatObject& f) const { return f.contains(p); }
  };
  return std::visit(V{p}, s);
}

// Finite multiset of points, column-major so the hot counting loops touch
// one contiguous array per dimension.  Duplicates allowed and counted with
// multiplicity.
class GroundSet {
 public:
  GroundSet() = default;
  GroundSet(std::size_t dim, std::size_t n) : dim_(dim), col_(dim, std::vector<double>(n)) {}

  static GroundSet from_points(const std::vector<Point>& pts, std::size_t dim) {
    GroundSet g(dim, pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      require_dim(pts[i].size(), dim, "GroundSet::from_points");
      for (std::size_t d = 0; d < dim; ++d) g.col_[d][i] = pts[i][d];
    }
    return g;
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ ? col_[0].size() : 0; }
  double coord(std::size_t i, std::size_t d) const { return col_[d][i]; }
  double& coord(std::size_t i, std::size_t d) { return col_[d][i]; }
  const std::vector<double>& column(std::size_t d) const { return col_[d]; }

  Point point(std::size_t i) const {
    Point p(dim_);
    for (std::size_t d = 0; d < dim_; ++d) p[d] = col_[d][i];
    return p;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<double>> col_;
};

inline std::int64_t heavy_count(const Shape& s, const GroundSet& X) {
  require_dim(shape_dim(s), X.dim(), "heavy_count");
  std::int64_t c = 0;
  if (const AxisBox* b = std::get_if<AxisBox>(&s)) {
    // common case, keep it branch-light
    const std::size_t n = X.size(), d = X.dim();
    for (std::size_t i = 0; i < n; ++i) {
      bool in = true;
      for (std::size_t k = 0; k < d; ++k) {
        double v = X.coord(i, k);
        if (v < b->lo[k] || v > b->hi[k]) { in = false; break; }
      }
      c += in;
    }
    return c;
  }
  for (std::size_t i = 0; i < X.size(); ++i) c += contains(s, X.point(i));
  return c;
}

inline bool is_heavy(const Shape& s, const GroundSet& X, const Rational& eps) {
  return meets_threshold(heavy_count(s, X), eps, std::int64_t(X.size()));
}

}  // namespace onet
