#pragma once

// Online piercing of similarly-sized fat objects via layered lattices.  The
// width range [scale*4, scale*4*2^(floor(log2 M)+1)) is tiled by half-open
// layers whose spans alternate between ratio 3/2 and 4/3; layer j carries an
// axis-aligned lattice of pitch equal to the layer's lower edge.  An arriving
// object that is still unpierced gets the lattice point nearest (in L_inf) to
// its center, which the rounding lemma puts within pitch/2 of the center and
// therefore strictly inside the object.
//
// With the default scale of 1/4, layer 0 starts at width 1, so inputs with
// widths in [1, M] need no preprocessing.  The per-optimal-point load then
// stays below floor(2/alpha + 7/8)^d per layer, and 2*floor(log2 M)+1 layers
// can occur, giving the total budget check_fat_bound() asserts.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "geometry.hpp"
#include "numeric.hpp"

namespace onet {

class LayerTable {
 public:
  explicit LayerTable(double M, double scale = 0.25) : M_(M), scale_(scale) {
    if (!(M >= 1.0)) throw std::invalid_argument("LayerTable: M must be >= 1");
    if (!(scale > 0.0)) throw std::invalid_argument("LayerTable: scale must be positive");
    max_index_ = 2 * std::int64_t(detail::guarded_floor(std::log2(M))) + 1;
  }

  double M() const { return M_; }
  double scale() const { return scale_; }
  std::int64_t max_index() const { return max_index_; }
  std::size_t size() const { return std::size_t(max_index_) + 1; }

  // spans alternate 3/2, 4/3 and tile [lower(0), upper(max_index)) exactly
  double lower(std::int64_t j) const {
    check_index(j);
    if (j % 2 == 0) return scale_ * 2.0 * std::ldexp(2.0, int(j / 2));
    return scale_ * 3.0 * std::ldexp(2.0, int((j - 1) / 2));
  }

  double upper(std::int64_t j) const {
    check_index(j);
    if (j % 2 == 0) return scale_ * 3.0 * std::ldexp(2.0, int(j / 2));
    return scale_ * 4.0 * std::ldexp(2.0, int((j - 1) / 2));
  }

  // lattice spacing for the layer: its lower width edge
  double pitch(std::int64_t j) const { return lower(j); }

  std::int64_t layer_index(double width) const {
    if (width >= lower(0)) {
      for (std::int64_t j = 0; j <= max_index_; ++j)
        if (width < upper(j)) return j;
    }
    throw std::domain_error("LayerTable: width outside the table range");
  }

 private:
  void check_index(std::int64_t j) const {
    if (j < 0 || j > max_index_) throw std::out_of_range("LayerTable: layer index");
  }

  double M_;
  double scale_;
  std::int64_t max_index_;
};

// Round each coordinate to the nearest multiple of the step, halves up.
// Writing q = z + y with z on the lattice and y in [0, step): y < step/2
// keeps z, otherwise z + step.  Always d_inf(q, result) <= step/2.
inline Point closest_lattice_point(const Point& q, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("closest_lattice_point: step must be positive");
  Point r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    double z = step * std::floor(q[i] / step);
    double y = q[i] - z;
    if (y < 0.0) {  // floor slop on negative near-multiples
      y += step;
      z -= step;
    }
    if (y >= step) {
      y -= step;
      z += step;
    }
    r[i] = (y < step / 2.0) ? z : z + step;
  }
  return r;
}

struct FatPiercePoint {
  Point r;
  std::int64_t layer = 0;
};

class FatPiercer {
 public:
  FatPiercer(std::size_t dim, LayerTable table) : dim_(dim), table_(table) {
    if (dim == 0) throw std::invalid_argument("FatPiercer: dimension must be positive");
  }

  std::size_t dim() const { return dim_; }
  const LayerTable& table() const { return table_; }
  const std::vector<FatPiercePoint>& points() const { return points_; }
  const std::vector<FatObject>& history() const { return history_; }
  const std::vector<FatObject>& triggers() const { return triggers_; }
  std::size_t size() const { return points_.size(); }

  bool is_pierced(const FatObject& sigma) const {
    for (const FatPiercePoint& p : points_)
      if (sigma.contains(p.r)) return true;
    return false;
  }

  std::optional<Point> process(const FatObject& sigma) {
    require_dim(sigma.dim(), dim_, "FatPiercer::process");
    std::int64_t j = table_.layer_index(sigma.width);  // throws when out of range
    history_.push_back(sigma);
    if (is_pierced(sigma)) return std::nullopt;
    Point r = closest_lattice_point(sigma.center, table_.pitch(j));
    points_.push_back({r, j});
    triggers_.push_back(sigma);
    return r;
  }

  bool all_pierced() const {
    for (const FatObject& s : history_)
      if (!is_pierced(s)) return false;
    return true;
  }

  std::vector<std::size_t> per_layer_counts() const {
    std::vector<std::size_t> counts(table_.size(), 0);
    for (const FatPiercePoint& p : points_) ++counts[std::size_t(p.layer)];
    return counts;
  }

 private:
  std::size_t dim_;
  LayerTable table_;
  std::vector<FatPiercePoint> points_;
  std::vector<FatObject> triggers_;  // the arrival that forced each point
  std::vector<FatObject> history_;
};

inline double fat_per_layer_bound(double alpha, std::size_t d) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("fat_per_layer_bound: alpha must be in (0,1]");
  double base = detail::guarded_floor(2.0 / alpha + 7.0 / 8.0);
  return std::pow(base, double(d));
}

inline std::int64_t fat_level_count(double M) {
  if (!(M >= 1.0)) throw std::invalid_argument("fat_level_count: M must be >= 1");
  return 2 * std::int64_t(detail::guarded_floor(std::log2(M))) + 1;
}

inline double fat_total_bound(double alpha, std::size_t d, double M) {
  return fat_per_layer_bound(alpha, d) * double(fat_level_count(M));
}

struct FatChargeReport {
  std::vector<std::vector<std::size_t>> layer_charges;  // [opt point][layer]
  std::size_t max_layer_charge = 0;
  double per_layer_bound = 0.0;
  std::int64_t levels = 0;
  double total_bound = 0.0;
  double ratio = 0.0;  // piercing-set size over opt size
  bool pass = false;
};

// Attribute each placed point to the lowest-index optimal point inside its
// trigger, bucketed by layer.  Passing means no (opt point, layer) bucket
// exceeds the per-layer budget and the overall size ratio stays under the
// budget times the layer count.
inline FatChargeReport check_fat_bound(const FatPiercer& state, const std::vector<Point>& opt,
                                       double alpha, std::size_t d, double M) {
  for (const FatObject& s : state.history()) {
    bool pierced = false;
    for (const Point& q : opt)
      if (s.contains(q)) {
        pierced = true;
        break;
      }
    if (!pierced) throw std::invalid_argument("check_fat_bound: opt does not pierce the history");
  }

  FatChargeReport report;
  report.layer_charges.assign(opt.size(),
                              std::vector<std::size_t>(state.table().size(), 0));
  const std::vector<FatObject>& triggers = state.triggers();
  const std::vector<FatPiercePoint>& pts = state.points();
  for (std::size_t i = 0; i < triggers.size(); ++i) {
    for (std::size_t jq = 0; jq < opt.size(); ++jq) {
      if (triggers[i].contains(opt[jq])) {
        ++report.layer_charges[jq][std::size_t(pts[i].layer)];
        break;
      }
    }
  }
  for (const auto& row : report.layer_charges)
    for (std::size_t c : row) report.max_layer_charge = std::max(report.max_layer_charge, c);

  report.per_layer_bound = fat_per_layer_bound(alpha, d);
  report.levels = fat_level_count(M);
  report.total_bound = report.per_layer_bound * double(report.levels);
  report.ratio = opt.empty() ? 0.0 : double(state.size()) / double(opt.size());
  report.pass = double(report.max_layer_charge) <= report.per_layer_bound &&
                report.ratio <= report.total_bound;
  return report;
}

}  // namespace onet
