#pragma once

// Online net for axis-aligned boxes over a fixed 3D ground set.
//
// Same skeleton as the 2D rectangle net: an always-on sample P plus lazily
// built local safety nets, memoized per region.  The region for a trigger
// comes from a three-level range tree: the primary tree partitions x; every
// primary node carries a secondary tree over its points partitioning y, and
// every secondary node a tertiary tree partitioning z.  A heavy unhit box
// is clipped once at the highest crossing x-line, then walked down the
// secondary and tertiary trees of the clipped side to pick up y- and
// z-extents, giving an octant whose closure contains the clipped half.  The
// clip is extended away from the anchor plane, then +y/-y, then +z/-z,
// stopping at sample points, and the resulting blocker-free open box M gets
// a safety net over the ground points in its closure.
//
// Unlike the 2D case there is no exact certification sweep for boxes (the
// cost is prohibitive), so nets are drawn optimistically and the arrival
// itself is used as the check: while the triggering box stays unhit, the
// net is redrawn with a fresh seed and unioned into the memo entry; after
// 64 misses every point of the region is added, which always hits.  Either
// way process() never returns with its arrival unhit.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "geometry.hpp"
#include "partition_tree.hpp"
#include "rational.hpp"
#include "rect_net.hpp"
#include "rng.hpp"

namespace onet {

struct BoxNet3Params {
  Rational eps{1, 8};
  Rational delta{2, 1};
  double c1 = 2.0;
  double c_a = 8.0;
  double gamma = 0.5;
  std::uint64_t seed = 0;
};

// open axis box in 3D; +-inf marks an unbounded side
struct OpenBox3 {
  std::array<double, 3> lo{}, hi{};
  friend bool operator==(const OpenBox3&, const OpenBox3&) = default;
};

struct Box3Step {
  AxisBox sigma;
  bool heavy = false;
  bool hit_sample = false;
  bool hit_net = false;
  bool fallback = false;
  int node = -1;  // primary trigger node
  int depth = 0;
  bool heavy_left = false;
  bool memo_hit = false;
  std::size_t added = 0;
  std::size_t redraws = 0;  // extra net draws this arrival needed
  OpenBox3 octant;
  OpenBox3 region;
};

struct Box3Metrics {
  std::size_t sample_size = 0;
  std::size_t net_size = 0;
  std::size_t distinct_regions = 0;
  std::size_t constructions = 0;
  std::size_t fallbacks = 0;
  std::size_t redraws = 0;
  std::size_t exhaustions = 0;  // redraw loops that ended in "take everything"
  std::size_t triggers = 0;
  std::int64_t max_trigger_depth = 0;
};

namespace detail {

struct OctantKey {
  int primary = -1, secondary = -1, tertiary = -1;
  std::array<std::uint64_t, 6> sides{};

  friend bool operator<(const OctantKey& a, const OctantKey& b) {
    if (a.primary != b.primary) return a.primary < b.primary;
    if (a.secondary != b.secondary) return a.secondary < b.secondary;
    if (a.tertiary != b.tertiary) return a.tertiary < b.tertiary;
    return a.sides < b.sides;
  }
};

inline std::uint64_t octant_key_hash(const OctantKey& k) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ull;
  };
  mix(std::uint64_t(std::int64_t(k.primary)));
  mix(std::uint64_t(std::int64_t(k.secondary)));
  mix(std::uint64_t(std::int64_t(k.tertiary)));
  for (std::uint64_t s : k.sides) mix(s);
  return h;
}

}  // namespace detail

// Grow the clipped half inside the octant: away from the x anchor first
// (through the open y/z bands of the clip), then +y/-y over the extended
// x-range, then +z/-z over the extended x- and y-ranges.  Blockers touched
// only at a face bound the growth without entering the open region.
inline OpenBox3 extend_in_octant(const AxisBox& clip, const OpenBox3& octant, bool anchored_left,
                                 const std::vector<Point>& blockers) {
  if (!anchored_left) {
    AxisBox m = make_box({-clip.hi[0], clip.lo[1], clip.lo[2]},
                         {-clip.lo[0], clip.hi[1], clip.hi[2]});
    OpenBox3 oct{{-octant.hi[0], octant.lo[1], octant.lo[2]},
                 {-octant.lo[0], octant.hi[1], octant.hi[2]}};
    std::vector<Point> mirrored;
    mirrored.reserve(blockers.size());
    for (const Point& p : blockers) mirrored.push_back({-p[0], p[1], p[2]});
    OpenBox3 r = extend_in_octant(m, oct, true, mirrored);
    return {{-r.hi[0], r.lo[1], r.lo[2]}, {-r.lo[0], r.hi[1], r.hi[2]}};
  }

  auto strictly_in = [](double v, double lo, double hi) { return lo < v && v < hi; };

  OpenBox3 out = octant;  // x_lo stays the anchor plane
  double x_hi = octant.hi[0];
  for (const Point& p : blockers) {
    if (!strictly_in(p[0], octant.lo[0], octant.hi[0])) continue;
    if (strictly_in(p[1], clip.lo[1], clip.hi[1]) && strictly_in(p[2], clip.lo[2], clip.hi[2]))
      x_hi = std::min(x_hi, p[0]);
  }
  double y_hi = octant.hi[1], y_lo = octant.lo[1];
  for (const Point& p : blockers) {
    if (!strictly_in(p[0], octant.lo[0], x_hi)) continue;
    if (!strictly_in(p[2], clip.lo[2], clip.hi[2])) continue;
    if (p[1] >= clip.hi[1]) y_hi = std::min(y_hi, p[1]);
    if (p[1] <= clip.lo[1]) y_lo = std::max(y_lo, p[1]);
  }
  double z_hi = octant.hi[2], z_lo = octant.lo[2];
  for (const Point& p : blockers) {
    if (!strictly_in(p[0], octant.lo[0], x_hi)) continue;
    if (!strictly_in(p[1], y_lo, y_hi)) continue;
    if (p[2] >= clip.hi[2]) z_hi = std::min(z_hi, p[2]);
    if (p[2] <= clip.lo[2]) z_lo = std::max(z_lo, p[2]);
  }
  out.hi[0] = x_hi;
  out.lo[1] = y_lo;
  out.hi[1] = y_hi;
  out.lo[2] = z_lo;
  out.hi[2] = z_hi;
  return out;
}

class BoxNet3 {
 public:
  BoxNet3(const GroundSet& X, BoxNet3Params params) : X_(&X), params_(params) {
    if (X.dim() != 3) throw std::invalid_argument("BoxNet3: ground set must be 3D");
    if (X.size() == 0) throw std::invalid_argument("BoxNet3: empty ground set");
    if (!(Rational(0) < params_.eps) || Rational(1) < params_.eps)
      throw std::invalid_argument("BoxNet3: eps must be in (0,1]");
    if (!(Rational(1) <= params_.delta))
      throw std::invalid_argument("BoxNet3: delta must be >= 1");

    const std::size_t n = X.size();
    threshold_ = heavy_threshold(params_.eps, std::int64_t(n));
    s_ = Rational(2) * params_.delta / params_.eps;
    inner_threshold_ = (Rational(std::int64_t(n)) / s_).ceil();

    std::vector<std::size_t> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = i;
    sort_by_axes(ids, {0, 1, 2});
    x_tree_ = PartitionTree(std::move(ids), X.column(0), threshold_);

    // one secondary tree per primary node, one tertiary tree per secondary
    // node; lines cut deeper only where the point mass justifies it
    sec_.resize(x_tree_.node_count());
    ter_.resize(x_tree_.node_count());
    for (std::size_t v = 0; v < x_tree_.node_count(); ++v) {
      const TreeNode& nd = x_tree_.node(int(v));
      std::vector<std::size_t> sub(x_tree_.order().begin() + std::ptrdiff_t(nd.begin),
                                   x_tree_.order().begin() + std::ptrdiff_t(nd.end));
      sort_by_axes(sub, {1, 2, 0});
      sec_[v] = PartitionTree(std::move(sub), X.column(1), threshold_);
      ter_[v].resize(sec_[v].node_count());
      for (std::size_t s = 0; s < sec_[v].node_count(); ++s) {
        const TreeNode& snd = sec_[v].node(int(s));
        std::vector<std::size_t> ssub(sec_[v].order().begin() + std::ptrdiff_t(snd.begin),
                                      sec_[v].order().begin() + std::ptrdiff_t(snd.end));
        sort_by_axes(ssub, {2, 0, 1});
        ter_[v][s] = PartitionTree(std::move(ssub), X.column(2), threshold_);
      }
    }

    double rate = RectNet::sample_rate(params_.eps, n, params_.c1);
    Rng rng(mix_seed(params_.seed, 0xA11CEull));
    sample_mask_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.bernoulli(rate)) {
        sample_mask_[i] = 1;
        sample_ids_.push_back(i);
      }
    }
    net_mask_.assign(n, 0);
  }

  std::int64_t threshold() const { return threshold_; }
  std::int64_t inner_threshold() const { return inner_threshold_; }
  const PartitionTree& tree() const { return x_tree_; }
  const std::vector<std::size_t>& sample_ids() const { return sample_ids_; }
  const std::vector<std::size_t>& net_ids() const { return net_ids_; }
  const std::vector<Box3Step>& history() const { return history_; }
  std::size_t net_size() const { return sample_ids_.size() + net_ids_.size(); }

  std::vector<std::size_t> all_ids() const {
    std::vector<std::size_t> ids = sample_ids_;
    ids.insert(ids.end(), net_ids_.begin(), net_ids_.end());
    return ids;
  }

  Box3Metrics metrics() const {
    Box3Metrics m;
    m.sample_size = sample_ids_.size();
    m.net_size = net_ids_.size();
    m.distinct_regions = memo_.size();
    m.constructions = constructions_;
    m.fallbacks = fallbacks_;
    m.redraws = redraws_;
    m.exhaustions = exhaustions_;
    m.triggers = triggers_;
    m.max_trigger_depth = max_trigger_depth_;
    return m;
  }

  bool is_hit(const AxisBox& sigma) const {
    return hit_from(sample_ids_, sigma) || hit_from(net_ids_, sigma);
  }

  std::int64_t count_inside(const AxisBox& sigma) const {
    return heavy_count(Shape{sigma}, *X_);
  }

  Box3Step process(const AxisBox& sigma) {
    require_dim(sigma.dim(), 3, "BoxNet3::process");
    Box3Step step;
    step.sigma = sigma;

    std::int64_t c = count_inside(sigma);
    step.heavy = c >= threshold_;
    if (!step.heavy) {
      history_.push_back(step);
      return step;
    }
    step.hit_sample = hit_from(sample_ids_, sigma);
    step.hit_net = !step.hit_sample && hit_from(net_ids_, sigma);
    if (step.hit_sample || step.hit_net) {
      history_.push_back(step);
      return step;
    }

    ++triggers_;
    WalkStop stop = x_tree_.find_stop(sigma.lo[0], sigma.hi[0]);
    if (!stop.crossing) {
      add_median_point(sigma, step);
      ++fallbacks_;
      step.fallback = true;
      finish(sigma, step);
      return step;
    }

    const TreeNode& u = x_tree_.node(stop.node);
    step.node = stop.node;
    step.depth = u.depth;
    max_trigger_depth_ = std::max<std::int64_t>(max_trigger_depth_, u.depth);

    std::int64_t left_cnt = 0;
    {
      const std::size_t n = X_->size();
      for (std::size_t i = 0; i < n; ++i) {
        if (!inside(i, sigma)) continue;
        if (X_->coord(i, 0) <= u.split) ++left_cnt;
      }
    }
    step.heavy_left = left_cnt >= c - left_cnt;
    int child = step.heavy_left ? u.left : u.right;
    const TreeNode& cn = x_tree_.node(child);

    AxisBox clip = sigma;
    if (step.heavy_left)
      clip.hi[0] = u.split;
    else
      clip.lo[0] = u.split;

    // y- then z-walk inside the clipped side's trees; each stop's region
    // contains the corresponding range of sigma
    WalkStop ys = sec_[std::size_t(child)].find_stop(sigma.lo[1], sigma.hi[1]);
    const TreeNode& yn = sec_[std::size_t(child)].node(ys.node);
    WalkStop zs = ter_[std::size_t(child)][std::size_t(ys.node)].find_stop(sigma.lo[2],
                                                                           sigma.hi[2]);
    const TreeNode& zn = ter_[std::size_t(child)][std::size_t(ys.node)].node(zs.node);

    OpenBox3 octant{{cn.region_lo, yn.region_lo, zn.region_lo},
                    {cn.region_hi, yn.region_hi, zn.region_hi}};
    step.octant = octant;

    std::vector<Point> blockers;
    for (std::size_t id : sample_ids_) {
      Point p = X_->point(id);
      if (octant.lo[0] < p[0] && p[0] < octant.hi[0] && octant.lo[1] < p[1] &&
          p[1] < octant.hi[1] && octant.lo[2] < p[2] && p[2] < octant.hi[2])
        blockers.push_back(std::move(p));
    }
    step.region = extend_in_octant(clip, octant, !step.heavy_left, blockers);

    detail::OctantKey key;
    key.primary = child;
    key.secondary = ys.node;
    key.tertiary = zs.node;
    key.sides = {std::bit_cast<std::uint64_t>(step.region.lo[0]),
                 std::bit_cast<std::uint64_t>(step.region.hi[0]),
                 std::bit_cast<std::uint64_t>(step.region.lo[1]),
                 std::bit_cast<std::uint64_t>(step.region.hi[1]),
                 std::bit_cast<std::uint64_t>(step.region.lo[2]),
                 std::bit_cast<std::uint64_t>(step.region.hi[2])};

    auto it = memo_.find(key);
    if (it != memo_.end()) {
      step.memo_hit = true;
    } else {
      ++constructions_;
      it = memo_.emplace(key, draw_net(step.region, key, 0)).first;
    }
    absorb(it->second, step);

    // no certification sweep in 3D: the arrival itself is the check.
    // fresh draws are unioned into the memo entry so later reuse benefits
    std::uint64_t attempt = 1;
    while (!is_hit(sigma) && attempt < 64) {
      ++redraws_;
      ++step.redraws;
      std::vector<std::size_t> extra = draw_net(step.region, key, attempt++);
      it->second.insert(it->second.end(), extra.begin(), extra.end());
      absorb(extra, step);
    }
    if (!is_hit(sigma)) {
      ++exhaustions_;
      std::vector<std::size_t> all = collect_region(step.region);
      it->second = all;
      absorb(all, step);
    }
    finish(sigma, step);
    return step;
  }

 private:
  void sort_by_axes(std::vector<std::size_t>& ids, std::array<std::size_t, 3> axes) const {
    const GroundSet& X = *X_;
    std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
      for (std::size_t ax : axes) {
        double av = X.coord(a, ax), bv = X.coord(b, ax);
        if (av != bv) return av < bv;
      }
      return a < b;
    });
  }

  bool inside(std::size_t id, const AxisBox& sigma) const {
    for (std::size_t d = 0; d < 3; ++d) {
      double v = X_->coord(id, d);
      if (v < sigma.lo[d] || v > sigma.hi[d]) return false;
    }
    return true;
  }

  bool hit_from(const std::vector<std::size_t>& ids, const AxisBox& sigma) const {
    for (std::size_t id : ids)
      if (inside(id, sigma)) return true;
    return false;
  }

  void finish(const AxisBox& sigma, Box3Step& step) {
    if (!is_hit(sigma))
      throw std::logic_error("BoxNet3: arrival left unhit after safety net");
    history_.push_back(step);
  }

  void absorb(const std::vector<std::size_t>& ids, Box3Step& step) {
    for (std::size_t id : ids) {
      if (sample_mask_[id] || net_mask_[id]) continue;
      net_mask_[id] = 1;
      net_ids_.push_back(id);
      ++step.added;
    }
  }

  void add_median_point(const AxisBox& sigma, Box3Step& step) {
    std::vector<std::size_t> in;
    for (std::size_t i = 0; i < X_->size(); ++i)
      if (inside(i, sigma)) in.push_back(i);
    if (in.empty()) throw std::logic_error("BoxNet3: heavy box with no points");
    auto cmp = [&](std::size_t a, std::size_t b) {
      for (std::size_t ax : {0, 1, 2}) {
        double av = X_->coord(a, std::size_t(ax)), bv = X_->coord(b, std::size_t(ax));
        if (av != bv) return av < bv;
      }
      return a < b;
    };
    std::size_t mid = (in.size() - 1) / 2;
    std::nth_element(in.begin(), in.begin() + std::ptrdiff_t(mid), in.end(), cmp);
    std::vector<std::size_t> one = {in[mid]};
    absorb(one, step);
  }

  std::vector<std::size_t> collect_region(const OpenBox3& region) const {
    std::vector<std::size_t> q;
    for (std::size_t i = 0; i < X_->size(); ++i) {
      bool in = true;
      for (std::size_t d = 0; d < 3 && in; ++d) {
        double v = X_->coord(i, d);
        in = region.lo[d] <= v && v <= region.hi[d];
      }
      if (in) q.push_back(i);
    }
    return q;
  }

  std::vector<std::size_t> draw_net(const OpenBox3& region, const detail::OctantKey& key,
                                    std::uint64_t attempt) {
    std::vector<std::size_t> q = collect_region(region);
    const std::size_t k = q.size();
    const std::size_t n = X_->size();
    Rational w = s_ * Rational(std::int64_t(k), std::int64_t(n));
    if (w <= Rational(1) || k == 0) return q;

    double wd = w.to_double();
    double p = (params_.c_a * wd * std::log(wd) +
                params_.c_a * wd * std::log(1.0 / params_.gamma)) /
               double(k);
    p = std::min(1.0, std::max(0.0, p));
    Rng rng(mix_seed(mix_seed(params_.seed, detail::octant_key_hash(key)), attempt));
    std::vector<std::size_t> net;
    for (std::size_t id : q)
      if (rng.bernoulli(p)) net.push_back(id);
    return net;
  }

  const GroundSet* X_;
  BoxNet3Params params_;
  std::int64_t threshold_ = 1;
  std::int64_t inner_threshold_ = 1;
  Rational s_{1};

  PartitionTree x_tree_;
  std::vector<PartitionTree> sec_;                // per primary node
  std::vector<std::vector<PartitionTree>> ter_;   // per (primary, secondary)

  std::vector<std::size_t> sample_ids_;
  std::vector<char> sample_mask_;
  std::vector<std::size_t> net_ids_;
  std::vector<char> net_mask_;
  std::map<detail::OctantKey, std::vector<std::size_t>> memo_;
  std::vector<Box3Step> history_;

  std::size_t constructions_ = 0;
  std::size_t fallbacks_ = 0;
  std::size_t redraws_ = 0;
  std::size_t exhaustions_ = 0;
  std::size_t triggers_ = 0;
  std::int64_t max_trigger_depth_ = 0;
};

}  // namespace onet
