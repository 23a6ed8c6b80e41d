#pragma once

// Online net for axis-aligned rectangles over a fixed 2D ground set X.
//
// The net is the union of two parts.  An always-on random sample P is drawn
// once up front at rate ~ c1*lnln(1/eps)/(eps*n).  When a heavy rectangle
// arrives that P misses, a median partition tree over x locates the highest
// line crossing it; the heavier half of the rectangle is clipped to that
// line's side, extended inside the strip between neighboring lines until
// blocked by sample points, and the resulting blocker-free region M gets a
// local safety net: either all ground points in M (when M is light) or a
// random subset, sampled until an exact sweep certifies that every
// rectangle in M holding >= ceil(eps*n/(2*delta)) ground points is hit.
// Safety nets are memoized per (tree node, side, region), and the number of
// distinct regions per strip is combinatorially bounded, which is what caps
// the net size.
//
// process() throws logic_error if an arrival ends up unhit; with a verified
// safety net that cannot happen, so the throw guards the implementation,
// not the caller.

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
#include "net_verify.hpp"
#include "partition_tree.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace onet {

struct RectNetParams {
  Rational eps{1, 8};
  Rational delta{2, 1};  // safety-net slack; region weight uses s = 2*delta/eps
  double c1 = 2.0;       // sample-rate constant
  double c_a = 8.0;      // safety-net sampling constant
  double gamma = 0.5;    // per-attempt failure budget (verified away)
  std::uint64_t seed = 0;
};

// open axis rectangle; +-inf marks an unbounded side
struct OpenRect {
  double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
  friend bool operator==(const OpenRect&, const OpenRect&) = default;
};

struct RectStep {
  AxisBox sigma;
  bool heavy = false;
  bool hit_sample = false;
  bool hit_net = false;
  bool fallback = false;  // no crossing line: one direct point added
  int node = -1;          // trigger node when a line was found
  int depth = 0;
  bool heavy_left = false;  // heavier half lies on x <= line
  bool memo_hit = false;
  std::size_t added = 0;  // net points newly added by this arrival
  OpenRect region;        // extended region M (when a line was found)
};

struct RectNetMetrics {
  std::size_t sample_size = 0;
  std::size_t net_size = 0;  // distinct safety-net points (disjoint from sample)
  std::size_t distinct_regions = 0;
  std::size_t constructions = 0;  // memo misses
  std::size_t fallbacks = 0;
  std::size_t resamples = 0;  // failed verification attempts
  std::size_t triggers = 0;   // arrivals that reached the tree walk
  std::int64_t max_trigger_depth = 0;
};

namespace detail {

struct RegionKey {
  int node = -1;
  bool left = false;
  std::array<std::uint64_t, 4> sides{};

  friend bool operator<(const RegionKey& a, const RegionKey& b) {
    if (a.node != b.node) return a.node < b.node;
    if (a.left != b.left) return a.left < b.left;
    return a.sides < b.sides;
  }
};

inline std::uint64_t region_key_hash(const RegionKey& k) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ull;
  };
  mix(std::uint64_t(std::int64_t(k.node)));
  mix(k.left ? 2 : 1);
  for (std::uint64_t s : k.sides) mix(s);
  return h;
}

}  // namespace detail

// Every inclusion-maximal open rectangle inside the strip that is free of
// blockers and pinned to the strip's anchor side (plus the full-width slabs,
// which are pinned to both).  Two kinds:
//   (i) per blocker a: x from the anchor to a.x, y between the nearest
//       blocker ys on the anchor side of a (skipped when a y-tie makes it
//       non-free);
//   (ii) full-width slabs between y-consecutive blockers, with unbounded
//       outer slabs.
// At most 2*|blockers|+1 rectangles come out, and the extension computed by
// extend_in_strip always equals one of them (for a clip with positive
// height; a zero-height clip degenerates to a segment and is its own cover).
inline std::vector<OpenRect> enumerate_anchored_maximal(double strip_lo, double strip_hi,
                                                        bool anchored_left,
                                                        const std::vector<Point>& blockers_in) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<Point> blockers;
  blockers.reserve(blockers_in.size());
  for (const Point& p : blockers_in)
    if (strip_lo < p[0] && p[0] < strip_hi) blockers.push_back(p);

  if (!anchored_left) {
    std::vector<Point> mirrored;
    mirrored.reserve(blockers.size());
    for (const Point& p : blockers) mirrored.push_back({-p[0], p[1]});
    auto flipped = enumerate_anchored_maximal(-strip_hi, -strip_lo, true, mirrored);
    for (OpenRect& r : flipped) {
      double lo = -r.x_hi, hi = -r.x_lo;
      r.x_lo = lo;
      r.x_hi = hi;
    }
    return flipped;
  }

  std::vector<OpenRect> out;
  // (i) one candidate per blocker
  for (const Point& a : blockers) {
    bool skip = false;
    double top = inf, bot = -inf;
    for (const Point& p : blockers) {
      if (!(p[0] < a[0])) continue;
      if (p[1] == a[1]) {
        skip = true;
        break;
      }
      if (p[1] > a[1])
        top = std::min(top, p[1]);
      else
        bot = std::max(bot, p[1]);
    }
    if (!skip) out.push_back({strip_lo, a[0], bot, top});
  }
  // (ii) full-width slabs
  std::vector<double> ys;
  ys.reserve(blockers.size());
  for (const Point& p : blockers) ys.push_back(p[1]);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  double prev = -inf;
  for (double y : ys) {
    out.push_back({strip_lo, strip_hi, prev, y});
    prev = y;
  }
  out.push_back({strip_lo, strip_hi, prev, inf});

  auto lt = [](const OpenRect& a, const OpenRect& b) {
    return std::tie(a.x_lo, a.x_hi, a.y_lo, a.y_hi) < std::tie(b.x_lo, b.x_hi, b.y_lo, b.y_hi);
  };
  std::sort(out.begin(), out.end(), lt);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Grow the clipped half `clip` (closed box, anchored to the strip side named
// by anchored_left) into the largest blocker-free open rectangle: first away
// from the anchor, then up, then down.  Blockers strictly inside the clip's
// open y-band stop the away growth; the vertical growth then stops at the
// nearest blocker ys over the extended x-range (boundary contact allowed,
// the region stays open).
inline OpenRect extend_in_strip(const AxisBox& clip, double strip_lo, double strip_hi,
                                bool anchored_left, const std::vector<Point>& blockers) {
  const double inf = std::numeric_limits<double>::infinity();
  if (!anchored_left) {
    AxisBox m = make_box({-clip.hi[0], clip.lo[1]}, {-clip.lo[0], clip.hi[1]});
    std::vector<Point> mirrored;
    mirrored.reserve(blockers.size());
    for (const Point& p : blockers) mirrored.push_back({-p[0], p[1]});
    OpenRect r = extend_in_strip(m, -strip_hi, -strip_lo, true, mirrored);
    return {-r.x_hi, -r.x_lo, r.y_lo, r.y_hi};
  }

  double r = strip_hi;
  for (const Point& p : blockers) {
    if (!(strip_lo < p[0] && p[0] < strip_hi)) continue;
    if (clip.lo[1] < p[1] && p[1] < clip.hi[1]) r = std::min(r, p[0]);
  }
  double top = inf, bot = -inf;
  for (const Point& p : blockers) {
    if (!(strip_lo < p[0] && p[0] < r)) continue;
    if (p[1] >= clip.hi[1]) top = std::min(top, p[1]);
    if (p[1] <= clip.lo[1]) bot = std::max(bot, p[1]);
  }
  return {strip_lo, r, bot, top};
}

class RectNet {
 public:
  RectNet(const GroundSet& X, RectNetParams params) : X_(&X), params_(params) {
    if (X.dim() != 2) throw std::invalid_argument("RectNet: ground set must be 2D");
    if (X.size() == 0) throw std::invalid_argument("RectNet: empty ground set");
    if (!(Rational(0) < params_.eps) || Rational(1) < params_.eps)
      throw std::invalid_argument("RectNet: eps must be in (0,1]");
    if (!(Rational(1) <= params_.delta))
      throw std::invalid_argument("RectNet: delta must be >= 1");

    const std::size_t n = X.size();
    threshold_ = heavy_threshold(params_.eps, std::int64_t(n));
    // s = 2*delta/eps; regions weigh s*|Q|/n and the inner heaviness
    // threshold is ceil(n/s), which every clipped half still clears
    s_ = Rational(2) * params_.delta / params_.eps;
    inner_threshold_ = (Rational(std::int64_t(n)) / s_).ceil();

    std::vector<std::size_t> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = i;
    std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
      double ax = X.coord(a, 0), bx = X.coord(b, 0);
      if (ax != bx) return ax < bx;
      double ay = X.coord(a, 1), by = X.coord(b, 1);
      if (ay != by) return ay < by;
      return a < b;
    });
    tree_ = PartitionTree(std::move(ids), X.column(0), threshold_);

    double rate = sample_rate(params_.eps, n, params_.c1);
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

  // always-on sample rate: min(1, c1 * max(1, lnln(1/eps)) / (eps*n))
  static double sample_rate(const Rational& eps, std::size_t n, double c1) {
    double inv_eps = eps.inv().to_double();
    double ll = inv_eps > 1.0 ? std::log(std::log(inv_eps)) : 0.0;
    double rate = c1 * std::max(1.0, ll) / (eps.to_double() * double(n));
    return std::min(1.0, rate);
  }

  std::int64_t threshold() const { return threshold_; }
  std::int64_t inner_threshold() const { return inner_threshold_; }
  const PartitionTree& tree() const { return tree_; }
  const std::vector<std::size_t>& sample_ids() const { return sample_ids_; }
  const std::vector<std::size_t>& net_ids() const { return net_ids_; }
  const std::vector<RectStep>& history() const { return history_; }

  std::vector<std::size_t> all_ids() const {
    std::vector<std::size_t> ids = sample_ids_;
    ids.insert(ids.end(), net_ids_.begin(), net_ids_.end());
    return ids;
  }
  std::size_t net_size() const { return sample_ids_.size() + net_ids_.size(); }

  RectNetMetrics metrics() const {
    RectNetMetrics m;
    m.sample_size = sample_ids_.size();
    m.net_size = net_ids_.size();
    m.distinct_regions = memo_.size();
    m.constructions = constructions_;
    m.fallbacks = fallbacks_;
    m.resamples = resamples_;
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

  RectStep process(const AxisBox& sigma) {
    require_dim(sigma.dim(), 2, "RectNet::process");
    RectStep step;
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
    WalkStop stop = tree_.find_stop(sigma.lo[0], sigma.hi[0]);
    if (!stop.crossing) {
      // all of sigma's points sit in one full leaf: pin sigma directly
      add_median_point(sigma, step);
      ++fallbacks_;
      step.fallback = true;
      finish(sigma, step);
      return step;
    }

    const TreeNode& v = tree_.node(stop.node);
    step.node = stop.node;
    step.depth = v.depth;
    max_trigger_depth_ = std::max<std::int64_t>(max_trigger_depth_, v.depth);

    std::int64_t left_cnt = 0;
    {
      const std::size_t n = X_->size();
      for (std::size_t i = 0; i < n; ++i) {
        double x = X_->coord(i, 0), y = X_->coord(i, 1);
        if (x < sigma.lo[0] || x > sigma.hi[0] || y < sigma.lo[1] || y > sigma.hi[1]) continue;
        if (x <= v.split) ++left_cnt;
      }
    }
    step.heavy_left = left_cnt >= c - left_cnt;

    AxisBox clip = sigma;
    double strip_lo, strip_hi;
    bool anchored_left;  // anchor side of the strip the clip leans on
    if (step.heavy_left) {
      clip.hi[0] = v.split;
      strip_lo = v.region_lo;
      strip_hi = v.split;
      anchored_left = false;
    } else {
      clip.lo[0] = v.split;
      strip_lo = v.split;
      strip_hi = v.region_hi;
      anchored_left = true;
    }

    std::vector<Point> blockers;
    for (std::size_t id : sample_ids_) {
      double x = X_->coord(id, 0);
      if (strip_lo < x && x < strip_hi) blockers.push_back({x, X_->coord(id, 1)});
    }
    step.region = extend_in_strip(clip, strip_lo, strip_hi, anchored_left, blockers);

    detail::RegionKey key;
    key.node = stop.node;
    key.left = step.heavy_left;
    key.sides = {std::bit_cast<std::uint64_t>(step.region.x_lo),
                 std::bit_cast<std::uint64_t>(step.region.x_hi),
                 std::bit_cast<std::uint64_t>(step.region.y_lo),
                 std::bit_cast<std::uint64_t>(step.region.y_hi)};

    auto it = memo_.find(key);
    if (it != memo_.end()) {
      step.memo_hit = true;
    } else {
      ++constructions_;
      it = memo_.emplace(key, build_safety_net(step.region, key)).first;
    }
    for (std::size_t id : it->second) {
      if (sample_mask_[id] || net_mask_[id]) continue;
      net_mask_[id] = 1;
      net_ids_.push_back(id);
      ++step.added;
    }
    finish(sigma, step);
    return step;
  }

 private:
  bool hit_from(const std::vector<std::size_t>& ids, const AxisBox& sigma) const {
    for (std::size_t id : ids) {
      double x = X_->coord(id, 0), y = X_->coord(id, 1);
      if (sigma.lo[0] <= x && x <= sigma.hi[0] && sigma.lo[1] <= y && y <= sigma.hi[1])
        return true;
    }
    return false;
  }

  void finish(const AxisBox& sigma, RectStep& step) {
    if (!is_hit(sigma))
      throw std::logic_error("RectNet: arrival left unhit after safety net");
    history_.push_back(step);
  }

  // deterministic direct pin: lower median of the covered points in
  // (x, y, id) order
  void add_median_point(const AxisBox& sigma, RectStep& step) {
    std::vector<std::size_t> inside;
    const std::size_t n = X_->size();
    for (std::size_t i = 0; i < n; ++i) {
      double x = X_->coord(i, 0), y = X_->coord(i, 1);
      if (sigma.lo[0] <= x && x <= sigma.hi[0] && sigma.lo[1] <= y && y <= sigma.hi[1])
        inside.push_back(i);
    }
    if (inside.empty()) throw std::logic_error("RectNet: heavy box with no points");
    auto cmp = [&](std::size_t a, std::size_t b) {
      double ax = X_->coord(a, 0), bx = X_->coord(b, 0);
      if (ax != bx) return ax < bx;
      double ay = X_->coord(a, 1), by = X_->coord(b, 1);
      if (ay != by) return ay < by;
      return a < b;
    };
    std::size_t mid = (inside.size() - 1) / 2;
    std::nth_element(inside.begin(), inside.begin() + std::ptrdiff_t(mid), inside.end(), cmp);
    std::size_t id = inside[mid];
    if (!sample_mask_[id] && !net_mask_[id]) {
      net_mask_[id] = 1;
      net_ids_.push_back(id);
      ++step.added;
    }
  }

  std::vector<std::size_t> collect_region(const OpenRect& region) const {
    std::vector<std::size_t> q;
    const std::size_t n = X_->size();
    for (std::size_t i = 0; i < n; ++i) {
      double x = X_->coord(i, 0), y = X_->coord(i, 1);
      if (region.x_lo <= x && x <= region.x_hi && region.y_lo <= y && y <= region.y_hi)
        q.push_back(i);
    }
    return q;
  }

  // Local net for the closure of M: all points when M weighs <= 1, else a
  // sparse sample re-drawn until the sweep certifies that every rectangle
  // inside M with >= inner_threshold_ points is hit.
  std::vector<std::size_t> build_safety_net(const OpenRect& region, const detail::RegionKey& key) {
    std::vector<std::size_t> q = collect_region(region);
    const std::size_t k = q.size();
    const std::size_t n = X_->size();
    Rational w = s_ * Rational(std::int64_t(k), std::int64_t(n));
    if (w <= Rational(1) || k == 0) return q;

    double wd = w.to_double();
    double p = (params_.c_a * wd * std::log(wd) + params_.c_a * wd * std::log(1.0 / params_.gamma)) /
               double(k);
    p = std::min(1.0, std::max(0.0, p));

    std::vector<detail::VerifyPoint> pts(k);
    for (std::size_t i = 0; i < k; ++i) {
      pts[i].x = X_->coord(q[i], 0);
      pts[i].y = X_->coord(q[i], 1);
    }

    std::uint64_t key_seed = mix_seed(params_.seed, detail::region_key_hash(key));
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
      Rng rng(mix_seed(key_seed, attempt));
      std::vector<std::size_t> net;
      for (std::size_t i = 0; i < k; ++i) {
        pts[i].is_net = rng.bernoulli(p);
        if (pts[i].is_net) net.push_back(q[i]);
      }
      if (detail::verify_rect_net(pts, inner_threshold_).ok) return net;
      ++resamples_;
    }
    return q;  // 64 misses in a row is out of reach; stay exact regardless
  }

  const GroundSet* X_;
  RectNetParams params_;
  std::int64_t threshold_ = 1;
  std::int64_t inner_threshold_ = 1;
  Rational s_{1};
  PartitionTree tree_;

  std::vector<std::size_t> sample_ids_;
  std::vector<char> sample_mask_;
  std::vector<std::size_t> net_ids_;
  std::vector<char> net_mask_;
  std::map<detail::RegionKey, std::vector<std::size_t>> memo_;
  std::vector<RectStep> history_;

  std::size_t constructions_ = 0;
  std::size_t fallbacks_ = 0;
  std::size_t resamples_ = 0;
  std::size_t triggers_ = 0;
  std::int64_t max_trigger_depth_ = 0;
};

}  // namespace onet
