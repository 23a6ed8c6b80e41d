#pragma once

// Online piercing by centers.  An arriving axis box or ellipsoid that already
// contains a piercing point is left alone; otherwise its center point joins
// the set, irrevocably.  For inputs whose sizes live in [1, M] with a bounded
// per-object aspect ratio, the set stays within closed-form factors of the
// offline optimum; check_charge_bound() attributes every placed point to one
// optimal point and compares the worst per-optimal-point load against those
// factors.
//
// The box analysis layers space into L-infinity annuli whose side halves per
// level, giving floor(log2 M)+1 levels at 2^d(2^d-1) points each.  The
// ellipsoid analysis uses Euclidean annuli shrinking by the golden ratio and
// cones of half-angle theta = pi/10; the two constants are chosen together so
// an annulus section of one cone has diameter at most the outer radius
// (check_block_diameter() probes exactly that), which caps each level at
// ceil(pi/theta) = 10 points in the plane and at the cone-count formula in
// higher dimension.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "geometry.hpp"
#include "numeric.hpp"
#include "rng.hpp"

namespace onet {

enum class PierceFamily { box, ellipsoid };

inline double cone_half_angle() {
  return 0.5 * std::acos(0.5 + 1.0 / (1.0 + std::sqrt(5.0)));  // = pi/10
}

inline double golden_step() {
  return (std::sqrt(5.0) - 1.0) / 2.0;  // 1 + x is the golden ratio
}

struct BoundParams {
  double M = 16.0;               // sizes drawn from [1, M]
  double C = 2.0;                // per-object max/min side or axis ratio cap
  double theta = cone_half_angle();
  double x = golden_step();
};

inline std::int64_t center_level_count(PierceFamily family, const BoundParams& p) {
  if (!(p.M >= 1.0)) throw std::invalid_argument("center_level_count: M must be >= 1");
  if (family == PierceFamily::box)
    return std::int64_t(detail::guarded_floor(std::log2(p.M))) + 1;
  return std::int64_t(detail::guarded_ceil(std::log(p.M) / std::log1p(p.x))) + 1;
}

inline double center_per_level_constant(PierceFamily family, std::size_t d,
                                        const BoundParams& p) {
  if (d == 0) throw std::invalid_argument("center_per_level_constant: d must be positive");
  if (family == PierceFamily::box) {
    double pow2d = std::ldexp(1.0, int(d));
    return pow2d * (pow2d - 1.0);  // 12 in the plane, 56 in 3-space
  }
  if (d == 2) return detail::guarded_ceil(std::numbers::pi / p.theta);  // 10
  return std::pow(1.0 + 1.0 / std::sin(p.theta / 2.0), double(d)) - 1.0;
}

inline double center_charge_bound(PierceFamily family, std::size_t d, const BoundParams& p) {
  return center_per_level_constant(family, d, p) * double(center_level_count(family, p));
}

inline Point shape_center(const Shape& sigma) {
  if (const AxisBox* b = std::get_if<AxisBox>(&sigma)) {
    Point c(b->dim());
    for (std::size_t i = 0; i < b->dim(); ++i) c[i] = 0.5 * (b->lo[i] + b->hi[i]);
    return c;
  }
  if (const Ellipsoid* e = std::get_if<Ellipsoid>(&sigma)) return e->center;
  throw std::invalid_argument("shape_center: expected an axis box or an ellipsoid");
}

class CenterPiercer {
 public:
  explicit CenterPiercer(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("CenterPiercer: dimension must be positive");
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<Shape>& history() const { return history_; }
  const std::vector<Shape>& triggers() const { return triggers_; }
  std::size_t size() const { return points_.size(); }

  bool is_pierced(const Shape& sigma) const {
    for (const Point& p : points_)
      if (contains(sigma, p)) return true;
    return false;
  }

  std::optional<Point> process(const Shape& sigma) {
    require_dim(shape_dim(sigma), dim_, "CenterPiercer::process");
    if (!std::holds_alternative<AxisBox>(sigma) && !std::holds_alternative<Ellipsoid>(sigma))
      throw std::invalid_argument("CenterPiercer::process: expected a box or an ellipsoid");
    history_.push_back(sigma);
    if (is_pierced(sigma)) return std::nullopt;
    Point c = shape_center(sigma);
    points_.push_back(c);
    triggers_.push_back(sigma);
    return c;
  }

  // every shape seen so far still contains a piercing point
  bool all_pierced() const {
    for (const Shape& s : history_)
      if (!is_pierced(s)) return false;
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<Point> points_;
  std::vector<Shape> triggers_;  // the arrival that forced each point
  std::vector<Shape> history_;
};

struct CenterChargeReport {
  std::vector<std::size_t> charges;  // per optimal point, indexed as given
  std::size_t max_charge = 0;
  double per_level = 0.0;
  std::int64_t levels = 0;
  double per_opt_bound = 0.0;  // per_level * levels
  bool pass = false;
};

// Attribute each placed point to the lowest-index optimal point inside the
// arrival that triggered it, then compare the heaviest attribution count
// against the closed-form per-optimal-point budget.
inline CenterChargeReport check_charge_bound(const CenterPiercer& state,
                                             const std::vector<Point>& opt,
                                             const BoundParams& params, PierceFamily family) {
  for (const Shape& s : state.history()) {
    bool pierced = false;
    for (const Point& q : opt)
      if (contains(s, q)) {
        pierced = true;
        break;
      }
    if (!pierced)
      throw std::invalid_argument("check_charge_bound: opt does not pierce the history");
  }

  CenterChargeReport report;
  report.charges.assign(opt.size(), 0);
  for (const Shape& trigger : state.triggers()) {
    for (std::size_t j = 0; j < opt.size(); ++j) {
      if (contains(trigger, opt[j])) {
        ++report.charges[j];
        break;
      }
    }
  }
  for (std::size_t c : report.charges) report.max_charge = std::max(report.max_charge, c);
  report.per_level = center_per_level_constant(family, state.dim(), params);
  report.levels = center_level_count(family, params);
  report.per_opt_bound = report.per_level * double(report.levels);
  report.pass = double(report.max_charge) <= report.per_opt_bound;
  return report;
}

struct BlockDiameterCheck {
  std::size_t pairs = 0;
  double worst_rel = 0.0;  // max pair distance over the outer radius
  bool pass = false;
};

// Sample one annulus section of a planar cone (angular width 2*theta, radii
// shrinking by 1+x) and measure pairwise distances against the outer radius.
// The four corner points go in deterministically so the supremum is probed,
// not just approached.
inline BlockDiameterCheck check_block_diameter(const BoundParams& params,
                                               std::size_t pair_count, std::uint64_t seed) {
  Rng rng(seed);
  std::int64_t levels = center_level_count(PierceFamily::ellipsoid, params);
  std::int64_t i = std::int64_t(rng.below(std::uint64_t(levels))) + 1;
  double r_hi = params.M / std::pow(1.0 + params.x, double(i - 1));
  double r_lo = r_hi / (1.0 + params.x);
  double phi0 = 2.0 * std::numbers::pi * rng.next_double();
  double phi1 = phi0 + 2.0 * params.theta;

  auto at = [&](double rho, double phi) {
    return Point{rho * std::cos(phi), rho * std::sin(phi)};
  };
  BlockDiameterCheck check;
  check.pass = true;
  auto probe = [&](const Point& a, const Point& b) {
    double rel = l2_dist(a, b) / r_hi;
    check.worst_rel = std::max(check.worst_rel, rel);
    if (rel > 1.0 + 1e-12) check.pass = false;
    ++check.pairs;
  };

  Point corners[4] = {at(r_lo, phi0), at(r_lo, phi1), at(r_hi, phi0), at(r_hi, phi1)};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) probe(corners[a], corners[b]);

  for (std::size_t k = 0; k < pair_count; ++k) {
    double rho_a = r_lo + (r_hi - r_lo) * rng.next_double();
    double rho_b = r_lo + (r_hi - r_lo) * rng.next_double();
    probe(at(rho_a, phi0 + 2.0 * params.theta * rng.next_double()),
          at(rho_b, phi0 + 2.0 * params.theta * rng.next_double()));
  }
  return check;
}

}  // namespace onet
